//! The five canonical three-pattern families.

use super::formula::{FormulaKind, FormulaSpec};
use super::pairs::require_avoids;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::series::{build_u, build_v, chain_solve, ChainStep};

const FAMILY_123_132_213: &str = "123,132,213";

/// The canonical three-pattern sets whose classes are constant `k - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstantFamily {
    /// `{123,132,231}`, `τ = (k, ..., r+1, r-1, ..., 1, r)`, `2 ≤ r ≤ k`.
    T123_132_231,
    /// `{123,213,231}`, `τ = (k, ..., r+1, 1, r, ..., 2)`, `2 ≤ r ≤ k`.
    T123_213_231,
    /// `{123,231,312}`, `τ = (r, ..., 1, k, ..., r+1)`, `1 ≤ r ≤ k-1`.
    T123_231_312,
    /// `{132,213,231}`, `τ = (k, ..., r+1, 1, 2, ..., r)`, `1 ≤ r ≤ k`.
    T132_213_231,
}

impl ConstantFamily {
    pub const ALL: [ConstantFamily; 4] = [
        ConstantFamily::T123_132_231,
        ConstantFamily::T123_213_231,
        ConstantFamily::T123_231_312,
        ConstantFamily::T132_213_231,
    ];

    pub fn patterns(self) -> &'static str {
        match self {
            ConstantFamily::T123_132_231 => "123,132,231",
            ConstantFamily::T123_213_231 => "123,213,231",
            ConstantFamily::T123_231_312 => "123,231,312",
            ConstantFamily::T132_213_231 => "132,213,231",
        }
    }

    fn r_range(self, k: usize) -> (usize, usize) {
        match self {
            ConstantFamily::T123_132_231 | ConstantFamily::T123_213_231 => (2, k),
            ConstantFamily::T123_231_312 => (1, k - 1),
            ConstantFamily::T132_213_231 => (1, k),
        }
    }

    /// The member of the family with parameter `r`.
    pub fn form(self, k: usize, r: usize) -> Vec<u8> {
        let (k, r) = (k as u8, r as u8);
        let top = (r + 1..=k).rev();
        match self {
            ConstantFamily::T123_132_231 => top.chain((1..r).rev()).chain([r]).collect(),
            ConstantFamily::T123_213_231 => top.chain([1]).chain((2..=r).rev()).collect(),
            ConstantFamily::T123_231_312 => (1..=r).rev().chain(top).collect(),
            ConstantFamily::T132_213_231 => top.chain(1..=r).collect(),
        }
    }

    /// The parameter `r` of `tau`, if `tau` is one of the family's forms.
    pub fn recognize(self, tau: &Permutation) -> Option<usize> {
        let k = tau.len();
        let (lo, hi) = self.r_range(k);
        (lo..=hi).find(|&r| self.form(k, r) == tau.values())
    }
}

/// Steps of the signature: 1 strips a leading maximum, 2 strips a leading
/// `(max - 1, max)`.
pub fn m_signature(tau: &Permutation) -> Result<Vec<u8>> {
    require_avoids(FAMILY_123_132_213, tau)?;
    let mut rest = tau.values();
    let mut out = Vec::new();
    while let Some(&first) = rest.first() {
        let top = rest.len() as u8;
        if first == top {
            out.push(1);
            rest = &rest[1..];
        } else if first + 1 == top && rest.get(1) == Some(&top) {
            out.push(2);
            rest = &rest[2..];
        } else {
            return Err(Error::NotInDomain {
                family: FAMILY_123_132_213,
                tau: tau.to_string(),
                reason: "leading entries are neither the maximum nor (max-1, max)".into(),
            });
        }
    }
    Ok(out)
}

/// Chain with `A_i = v_{m_i}`, `B_i = u_{m_i}` and terminal value `u_{m_r}`.
pub fn gf_123_132_213(tau: &Permutation) -> Result<FormulaSpec> {
    let signature = m_signature(tau)?;
    if tau.is_decreasing() {
        return Err(Error::NotInDomain {
            family: FAMILY_123_132_213,
            tau: tau.to_string(),
            reason: "decreasing".into(),
        });
    }
    let (last, init) = signature.split_last().expect("nonempty signature");
    let steps = init
        .iter()
        .map(|&m| Ok(ChainStep::new(build_v(m as usize)?, build_u(m as usize)?)))
        .collect::<Result<Vec<_>>>()?;
    let gf = chain_solve(&steps, &build_u(*last as usize)?);
    Ok(FormulaSpec::new(
        FormulaKind::RationalGf { gf },
        tau.len(),
        "m-chain/123-132-213",
    ))
}

/// Constant `k - 1` for a member of one of the four constant families.
pub fn canonical_3set(family: ConstantFamily, tau: &Permutation) -> Result<FormulaSpec> {
    require_avoids(family.patterns(), tau)?;
    if family.recognize(tau).is_none() {
        return Err(Error::NotInDomain {
            family: family.patterns(),
            tau: tau.to_string(),
            reason: "not of the family's form within its parameter range".into(),
        });
    }
    Ok(FormulaSpec::new(
        FormulaKind::Constant {
            value: tau.len() as i64 - 1,
        },
        tau.len(),
        match family {
            ConstantFamily::T123_132_231 => "constant/123-132-231",
            ConstantFamily::T123_213_231 => "constant/123-213-231",
            ConstantFamily::T123_231_312 => "constant/123-231-312",
            ConstantFamily::T132_213_231 => "constant/132-213-231",
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, perm, pset};
    use num_bigint::BigInt;

    #[test]
    fn signatures() {
        assert_eq!(m_signature(&perm("3412")).unwrap(), vec![2, 2]);
        assert_eq!(m_signature(&perm("4231")).unwrap(), vec![1, 2, 1]);
        assert_eq!(m_signature(&perm("3421")).unwrap(), vec![2, 1, 1]);
        assert!(m_signature(&perm("2413")).is_err());
        for k in 3..=7 {
            for tau in all_permutations(k) {
                if let Ok(m) = m_signature(&tau) {
                    assert_eq!(m.iter().map(|&s| s as usize).sum::<usize>(), k);
                }
            }
        }
    }

    #[test]
    fn signature_chain_examples() {
        let spec = gf_123_132_213(&perm("3412")).unwrap();
        let ints: Vec<BigInt> = [1, 1, 2, 3, 4, 5].map(BigInt::from).to_vec();
        assert_eq!(spec.values(0, 5).unwrap(), ints);
        for tau in ["4231", "3421"] {
            let spec = gf_123_132_213(&perm(tau)).unwrap();
            assert_eq!(
                spec.values(4, 9).unwrap(),
                vec![BigInt::from(4); 6],
                "{tau}"
            );
        }
        assert!(gf_123_132_213(&perm("4321")).is_err());
    }

    #[test]
    fn constant_family_forms_cover_the_avoiders() {
        for family in ConstantFamily::ALL {
            let set = pset(family.patterns());
            for k in 3..=7 {
                for tau in all_permutations(k) {
                    let monotone_excluded =
                        set.contains_member(&perm("123")) && tau.is_decreasing();
                    let expected = tau.avoids_all(&set) && !monotone_excluded;
                    assert_eq!(
                        family.recognize(&tau).is_some(),
                        expected,
                        "{family:?} {tau}"
                    );
                }
            }
        }
    }

    #[test]
    fn constant_examples() {
        let cases = [
            (ConstantFamily::T123_132_231, "4312"),
            (ConstantFamily::T123_132_231, "4213"),
            (ConstantFamily::T123_132_231, "3214"),
            (ConstantFamily::T123_213_231, "4312"),
            (ConstantFamily::T123_213_231, "4132"),
            (ConstantFamily::T123_213_231, "1432"),
            (ConstantFamily::T123_231_312, "1432"),
            (ConstantFamily::T123_231_312, "2143"),
            (ConstantFamily::T123_231_312, "3214"),
            (ConstantFamily::T132_213_231, "4321"),
            (ConstantFamily::T132_213_231, "4312"),
            (ConstantFamily::T132_213_231, "4123"),
            (ConstantFamily::T132_213_231, "1234"),
        ];
        for (family, tau) in cases {
            let spec = canonical_3set(family, &perm(tau)).unwrap();
            assert_eq!(
                spec.kind,
                FormulaKind::Constant { value: 3 },
                "{family:?} {tau}"
            );
        }
    }
}
