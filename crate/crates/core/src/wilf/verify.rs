use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use super::Pair;
use crate::closedform::{formula_for, FormulaSpec, Status};
use crate::error::{Error, Result};
use crate::perm::{all_permutations, subsets_of_s3, AvoiderCache};

/// Largest `τ` length accepted by [`verify_closed_forms`].
pub const MAX_VERIFY_TAU_LENGTH: usize = 6;
/// Largest `n` accepted by [`verify_closed_forms`].
pub const MAX_VERIFY_LENGTH: usize = 11;

/// A closed form after comparison with enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationEntry {
    #[serde(flatten)]
    pub pair: Pair,
    pub formula: FormulaSpec,
}

/// A discrepant symmetry orbit, named by its smallest member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RegistryEntry {
    pub rep: Pair,
    pub n: usize,
    #[serde(serialize_with = "crate::decimal::one")]
    pub printed: BigInt,
    #[serde(serialize_with = "crate::decimal::one")]
    pub oracle: BigUint,
    pub orbit_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub k_max: usize,
    pub n_max: usize,
    pub entries: Vec<VerificationEntry>,
}

impl VerificationReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &VerificationEntry> {
        self.entries
            .iter()
            .filter(|e| e.formula.status.is_discrepant())
    }

    /// Discrepancies for `τ` of length `k`, one line per symmetry orbit.
    pub fn registry(&self, k: usize) -> Vec<RegistryEntry> {
        let mut orbits: BTreeMap<Pair, Vec<&VerificationEntry>> = BTreeMap::new();
        for e in self.discrepancies().filter(|e| e.pair.tau.len() == k) {
            orbits
                .entry(e.pair.orbit_representative())
                .or_default()
                .push(e);
        }
        orbits
            .into_iter()
            .map(|(rep, members)| {
                let Status::DiscrepantAt { n, printed, oracle } = &members[0].formula.status else {
                    unreachable!("filtered to discrepancies")
                };
                RegistryEntry {
                    rep,
                    n: *n,
                    printed: printed.clone(),
                    oracle: oracle.clone(),
                    orbit_size: members.len(),
                }
            })
            .collect()
    }

    /// Whether every entry was checked and agreed up to `n_max`, apart from
    /// the discrepant ones.
    pub fn all_statuses_final(&self) -> bool {
        self.entries.iter().all(|e| match e.formula.status {
            Status::VerifiedTo(n) => n == self.n_max,
            Status::DiscrepantAt { .. } => true,
            Status::Unverified => false,
        })
    }
}

/// Runs every closed form for `|T| ≥ 2`, `τ ∈ S_k(T)`, `3 ≤ k ≤ k_max`,
/// against enumeration for `validity_from ≤ n ≤ n_max`. Entries are sorted
/// by `k` and then by pair.
pub fn verify_closed_forms(
    k_max: usize,
    n_max: usize,
    cache: &AvoiderCache,
) -> Result<VerificationReport> {
    if k_max > MAX_VERIFY_TAU_LENGTH || n_max > MAX_VERIFY_LENGTH {
        return Err(Error::InvalidParameter(format!(
            "verification is limited to k ≤ {MAX_VERIFY_TAU_LENGTH} and n ≤ {MAX_VERIFY_LENGTH}"
        )));
    }
    let mut pairs: Vec<Pair> = Vec::new();
    for k in 3..=k_max {
        let taus = all_permutations(k);
        let mut level: Vec<Pair> = subsets_of_s3()
            .into_iter()
            .filter(|s| s.len() >= 2)
            .flat_map(|s| {
                taus.iter()
                    .filter(|t| t.avoids_all(&s))
                    .map(|t| Pair::new(s.clone(), t.clone()))
                    .collect::<Vec<_>>()
            })
            .collect();
        level.sort();
        pairs.extend(level);
    }
    let entries = pairs
        .into_par_iter()
        .map(|pair| {
            let mut formula = formula_for(&pair.set, &pair.tau)?;
            formula.verify(n_max, |n| cache.count(n, &pair.set, Some(&pair.tau)))?;
            Ok(VerificationEntry { pair, formula })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        k_max,
        n_max,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{perm, pset};

    #[test]
    fn limits() {
        let cache = AvoiderCache::new();
        assert!(verify_closed_forms(7, 8, &cache).is_err());
        assert!(verify_closed_forms(4, 12, &cache).is_err());
    }

    #[test]
    fn small_sweep() {
        let cache = AvoiderCache::new();
        let report = verify_closed_forms(4, 7, &cache).unwrap();
        assert!(report.all_statuses_final());
        let k4 = report
            .entries
            .iter()
            .filter(|e| e.pair.tau.len() == 4)
            .count();
        assert!(k4 > 0 && k4 < report.entries.len());
        let registry = report.registry(4);
        let hit = registry
            .iter()
            .find(|e| e.rep == Pair::new(pset("123,132"), perm("3421")))
            .unwrap();
        assert_eq!((hit.n, hit.orbit_size), (5, 8));
        assert_eq!(hit.printed, 11.into());
        assert_eq!(hit.oracle, 10u32.into());
        for e in &report.entries {
            assert!(e.pair.tau.avoids_all(&e.pair.set));
        }
        let mut sorted = report.entries.clone();
        sorted.sort_by(|a, b| (a.pair.tau.len(), &a.pair).cmp(&(b.pair.tau.len(), &b.pair)));
        assert_eq!(sorted, report.entries);
    }
}
