//! Wilf classes of pairs `(T, τ)`: count vectors on a window of lengths,
//! the partition they induce, the reference table for `T ⊆ S3`, `τ ∈ S4`,
//! and the sweep that audits every closed form against enumeration.

mod catalog;
mod table;
mod verify;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{all_permutations, subsets_of_s3, AvoiderCache, PatternSet, Permutation};

pub use catalog::{
    catalan, catalog, fibonacci, fibonacci_shifted, formula_match, reference, tribonacci,
    ReferenceSequence, UNRECOGNIZED,
};
pub use table::{expected_rows, table_s3_s4, Composition, ExpectedRow, TableDiff};
pub use verify::{verify_closed_forms, RegistryEntry, VerificationEntry, VerificationReport};

/// Largest length counted for a single avoided pattern.
pub const MAX_SINGLE_PATTERN_LENGTH: usize = 12;

/// A pattern set `T` together with one extra pattern `τ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pair {
    #[serde(rename = "T")]
    pub set: PatternSet,
    pub tau: Permutation,
}

impl Pair {
    pub fn new(set: PatternSet, tau: Permutation) -> Self {
        Pair { set, tau }
    }

    /// The full basis `T ∪ {τ}`.
    pub fn basis(&self) -> PatternSet {
        self.set.with(self.tau.clone())
    }

    /// Smallest member of the pair's symmetry orbit.
    pub fn orbit_representative(&self) -> Pair {
        crate::perm::symmetry_images(&self.set, &self.tau)
            .into_iter()
            .map(|(_, set, tau)| Pair { set, tau })
            .min()
            .expect("orbit is nonempty")
    }
}

/// Orders by `|T|`, then `T`, then `τ`.
impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.set.len(), &self.set, &self.tau).cmp(&(other.set.len(), &other.set, &other.tau))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.set, self.tau)
    }
}

/// A list of pairs to classify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPopulation {
    pub pairs: Vec<Pair>,
    pub descriptor: String,
}

impl PairPopulation {
    /// Every `T` of the given sizes crossed with every `τ ∈ S_k`, including
    /// the `τ` that contain a member of `T`.
    pub fn new(sizes: std::ops::RangeInclusive<usize>, k: usize) -> Self {
        let taus = all_permutations(k);
        let pairs = subsets_of_s3()
            .into_iter()
            .filter(|s| sizes.contains(&s.len()))
            .flat_map(|s| taus.iter().map(move |t| Pair::new(s.clone(), t.clone())))
            .collect();
        PairPopulation {
            pairs,
            descriptor: format!(
                "T ⊆ S3 with {} ≤ |T| ≤ {}, τ ∈ S{k}",
                sizes.start(),
                sizes.end()
            ),
        }
    }

    /// Nonempty proper `T ⊆ S3` with every `τ ∈ S4`: 62 · 24 = 1488 pairs.
    pub fn table() -> Self {
        Self::new(1..=5, 4)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// `|S_n(T, τ)|` for `n` in `lo..=hi`, by enumeration.
pub fn count_vector(
    pair: &Pair,
    lo: usize,
    hi: usize,
    cache: &AvoiderCache,
) -> Result<Vec<BigUint>> {
    if pair.set.len() <= 1 && hi > MAX_SINGLE_PATTERN_LENGTH {
        return Err(Error::ResourceLimit(format!(
            "counts for at most one avoided pattern are capped at n = {MAX_SINGLE_PATTERN_LENGTH}"
        )));
    }
    (lo..=hi)
        .map(|n| cache.count(n, &pair.set, Some(&pair.tau)))
        .collect()
}

/// One Wilf class on the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WilfClass {
    pub rep: Pair,
    pub size: usize,
    #[serde(serialize_with = "crate::decimal::many")]
    pub vector: Vec<BigUint>,
    pub formula: &'static str,
    #[serde(skip)]
    pub members: Vec<Pair>,
}

/// A partition of pairs into classes of equal count vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WilfClassReport {
    pub window: [usize; 2],
    pub classes: Vec<WilfClass>,
    pub table_diff: Vec<TableDiff>,
}

impl WilfClassReport {
    pub fn class_of(&self, pair: &Pair) -> Option<&WilfClass> {
        self.classes.iter().find(|c| c.members.contains(pair))
    }

    pub fn total_size(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }
}

/// Groups `population` by exact equality of count vectors on `window`.
/// Classes are listed by representative, the smallest member.
pub fn partition(
    population: &PairPopulation,
    window: (usize, usize),
    cache: &AvoiderCache,
) -> Result<WilfClassReport> {
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::InvalidParameter(format!("empty window {lo}:{hi}")));
    }
    let vectors: Vec<Vec<BigUint>> = population
        .pairs
        .par_iter()
        .map(|p| count_vector(p, lo, hi, cache))
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<&Vec<BigUint>, Vec<Pair>> = BTreeMap::new();
    for (pair, vector) in population.pairs.iter().zip(&vectors) {
        groups.entry(vector).or_default().push(pair.clone());
    }
    let mut classes: Vec<WilfClass> = groups
        .into_iter()
        .map(|(vector, mut members)| {
            members.sort();
            WilfClass {
                rep: members[0].clone(),
                size: members.len(),
                formula: formula_match(vector, lo),
                vector: vector.clone(),
                members,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.rep.cmp(&b.rep));
    Ok(WilfClassReport {
        window: [lo, hi],
        classes,
        table_diff: Vec::new(),
    })
}
