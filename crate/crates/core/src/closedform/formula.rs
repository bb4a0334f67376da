use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::series::RationalGF;

/// The shape of a closed form and its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "parameters", rename_all = "snake_case")]
pub enum FormulaKind {
    /// Coefficient of `x^n` in a rational generating function.
    RationalGf {
        gf: RationalGF,
    },
    /// `slope·n + intercept`.
    Linear {
        slope: i64,
        intercept: i64,
    },
    /// `Σ_{j=0}^{upper} C(n-1, j)`.
    BinomialSum {
        upper: usize,
    },
    Constant {
        value: i64,
    },
    /// `base - [subtract_increasing ∧ τ increasing] - [subtract_decreasing ∧ τ decreasing]`.
    Kronecker {
        base: i64,
        subtract_increasing: bool,
        subtract_decreasing: bool,
        tau_increasing: bool,
        tau_decreasing: bool,
    },
    /// Zero from `threshold` on.
    EventuallyZero {
        threshold: usize,
    },
}

/// Outcome of comparing a closed form with enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Unverified,
    /// Agrees with enumeration for every `validity_from ≤ n ≤` this bound.
    VerifiedTo(usize),
    /// First disagreement: the formula's value and the enumerated count.
    DiscrepantAt {
        n: usize,
        #[serde(serialize_with = "crate::decimal::one")]
        printed: BigInt,
        #[serde(serialize_with = "crate::decimal::one")]
        oracle: BigUint,
    },
}

impl Status {
    pub fn is_discrepant(&self) -> bool {
        matches!(self, Status::DiscrepantAt { .. })
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Unverified => f.write_str("unverified"),
            Status::VerifiedTo(n) => write!(f, "verified_to({n})"),
            Status::DiscrepantAt { n, printed, oracle } => {
                write!(f, "discrepant_at({n}, printed {printed}, oracle {oracle})")
            }
        }
    }
}

/// A closed form for `|S_n(T, τ)|`, claimed from `validity_from` on, with
/// the structural result it came from and its audit status.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaSpec {
    #[serde(flatten)]
    pub kind: FormulaKind,
    pub validity_from: usize,
    pub provenance: &'static str,
    pub status: Status,
}

impl FormulaSpec {
    pub fn new(kind: FormulaKind, validity_from: usize, provenance: &'static str) -> Self {
        FormulaSpec {
            kind,
            validity_from,
            provenance,
            status: Status::Unverified,
        }
    }

    /// The formula's value at `n`, whether or not `n` is in its claimed range.
    pub fn value_at(&self, n: usize) -> Result<BigInt> {
        Ok(match &self.kind {
            FormulaKind::RationalGf { gf } => gf.coefficient(n)?,
            FormulaKind::Linear { slope, intercept } => {
                BigInt::from(*slope) * BigInt::from(n) + BigInt::from(*intercept)
            }
            FormulaKind::BinomialSum { upper } => {
                (0..=*upper).map(|j| binomial(n as i64 - 1, j as i64)).sum()
            }
            FormulaKind::Constant { value } => BigInt::from(*value),
            FormulaKind::Kronecker {
                base,
                subtract_increasing,
                subtract_decreasing,
                tau_increasing,
                tau_decreasing,
            } => {
                let inc = (*subtract_increasing && *tau_increasing) as i64;
                let dec = (*subtract_decreasing && *tau_decreasing) as i64;
                BigInt::from(base - inc - dec)
            }
            FormulaKind::EventuallyZero { .. } => BigInt::zero(),
        })
    }

    /// Values for `lo..=hi`.
    pub fn values(&self, lo: usize, hi: usize) -> Result<Vec<BigInt>> {
        if lo > hi {
            return Ok(Vec::new());
        }
        match &self.kind {
            FormulaKind::RationalGf { gf } => Ok(gf.expand(hi)?.split_off(lo)),
            _ => (lo..=hi).map(|n| self.value_at(n)).collect(),
        }
    }

    /// Compares against `oracle(n)` for `validity_from ≤ n ≤ n_max` and
    /// records the outcome in `status`.
    pub fn verify(
        &mut self,
        n_max: usize,
        mut oracle: impl FnMut(usize) -> Result<BigUint>,
    ) -> Result<&Status> {
        let lo = self.validity_from;
        let printed = self.values(lo, n_max)?;
        self.status = Status::VerifiedTo(n_max);
        for (n, value) in (lo..=n_max).zip(printed) {
            let truth = oracle(n)?;
            if BigInt::from(truth.clone()) != value {
                self.status = Status::DiscrepantAt {
                    n,
                    printed: value,
                    oracle: truth,
                };
                break;
            }
        }
        Ok(&self.status)
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            FormulaKind::RationalGf { gf } => format!("GF {gf}"),
            FormulaKind::Linear { slope, intercept } => match intercept.signum() {
                -1 => format!("{slope}n - {}", -intercept),
                0 => format!("{slope}n"),
                _ => format!("{slope}n + {intercept}"),
            },
            FormulaKind::BinomialSum { upper } => format!("sum_{{j=0}}^{upper} C(n-1,j)"),
            FormulaKind::Constant { value } => value.to_string(),
            FormulaKind::Kronecker { .. } => match self.value_at(self.validity_from) {
                Ok(v) => format!("{v} (Kronecker form)"),
                Err(_) => "Kronecker form".to_string(),
            },
            FormulaKind::EventuallyZero { threshold } => format!("0 for n >= {threshold}"),
        }
    }
}

/// `C(m, j)` with `C(m, 0) = 1` for every `m` and `C(m, j) = 0` whenever
/// `j < 0` or `j > m` (negative `m` included).
pub fn binomial(m: i64, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    if j == 0 {
        return BigInt::one();
    }
    if m < j {
        return BigInt::zero();
    }
    let j = j.min(m - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}
