//! Named sequences used to label Wilf classes.
//!
//! Matching is by exact evaluation on a window; nothing is fitted.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::closedform::binomial;
use crate::series::{build_f, RationalGF};

/// Label returned by [`formula_match`] when no entry reproduces a vector.
pub const UNRECOGNIZED: &str = "unrecognized";

/// A named integer sequence. `eval` returns `None` where the expression is
/// undefined (negative powers of two, for instance).
#[derive(Clone, Copy)]
pub struct ReferenceSequence {
    pub name: &'static str,
    pub eval: fn(usize) -> Option<BigInt>,
}

impl std::fmt::Debug for ReferenceSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ReferenceSequence({})", self.name)
    }
}

impl ReferenceSequence {
    pub fn values(&self, lo: usize, hi: usize) -> Option<Vec<BigInt>> {
        (lo..=hi).map(self.eval).collect()
    }

    /// Whether the sequence equals `vector` at `lo, lo + 1, ...`.
    pub fn matches(&self, vector: &[BigUint], lo: usize) -> bool {
        vector
            .iter()
            .enumerate()
            .all(|(i, v)| (self.eval)(lo + i) == Some(BigInt::from(v.clone())))
    }
}

fn c(m: i64, j: i64) -> BigInt {
    binomial(m, j)
}

fn pow2(e: i64) -> Option<BigInt> {
    (e >= 0).then(|| BigInt::one() << e as usize)
}

pub fn catalan(n: usize) -> BigInt {
    c(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

/// Fibonacci numbers with `f_1 = f_2 = 1` (and `f_0 = 0`).
pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Fibonacci numbers shifted so that `f_0 = f_1 = 1`.
pub fn fibonacci_shifted(n: usize) -> BigInt {
    fibonacci(n + 1)
}

/// Coefficients of `(1 - x)/(1 - 2x + x^4)`: 1, 1, 2, 4, 7, 13, 24, ...
pub fn tribonacci(n: usize) -> BigInt {
    build_f(4)
        .and_then(|f| f.coefficient(n))
        .expect("f_4 has integral coefficients")
}

fn gf_row(n: usize) -> BigInt {
    RationalGF::ratio(&[1, -3, 3, -1], &[1, -4, 5, -3])
        .and_then(|g| g.coefficient(n))
        .expect("integral expansion")
}

fn ni(n: usize) -> i64 {
    n as i64
}

/// Every named formula that labels a class of the `T ⊆ S3`, `τ ∈ S4` table.
pub fn catalog() -> &'static [ReferenceSequence] {
    const ENTRIES: &[ReferenceSequence] = &[
        ReferenceSequence {
            name: "0 (Erdős–Szekeres)",
            eval: |_| Some(BigInt::zero()),
        },
        ReferenceSequence {
            name: "c_n",
            eval: |n| Some(catalan(n)),
        },
        ReferenceSequence {
            name: "f_{2n-2}",
            eval: |n| (n >= 1).then(|| fibonacci_shifted(2 * n - 2)),
        },
        ReferenceSequence {
            name: "1+(n-1)2^(n-2)",
            eval: |n| Some(1 + BigInt::from(ni(n) - 1) * pow2(ni(n) - 2)?),
        },
        ReferenceSequence {
            name: "3*2^(n-1)-C(n+1,2)-1",
            eval: |n| Some(3 * pow2(ni(n) - 1)? - c(ni(n) + 1, 2) - 1),
        },
        ReferenceSequence {
            name: "C(n,4)+2C(n,3)+n",
            eval: |n| Some(c(ni(n), 4) + 2 * c(ni(n), 3) + ni(n)),
        },
        ReferenceSequence {
            name: "(1-x)^3/(1-4x+5x^2-3x^3)",
            eval: |n| Some(gf_row(n)),
        },
        ReferenceSequence {
            name: "C(n,4)+C(n+1,4)+C(n,2)+1",
            eval: |n| Some(c(ni(n), 4) + c(ni(n) + 1, 4) + c(ni(n), 2) + 1),
        },
        ReferenceSequence {
            name: "2^(n+1)-C(n+1,3)-2n-1",
            eval: |n| Some(pow2(ni(n) + 1)? - c(ni(n) + 1, 3) - 2 * ni(n) - 1),
        },
        ReferenceSequence {
            name: "C(n,5)+2C(n,4)+C(n,3)+C(n,2)+1",
            eval: |n| Some(c(ni(n), 5) + 2 * c(ni(n), 4) + c(ni(n), 3) + c(ni(n), 2) + 1),
        },
        ReferenceSequence {
            name: "2^(n-1)",
            eval: |n| pow2(ni(n) - 1),
        },
        ReferenceSequence {
            name: "C(n,2)+1",
            eval: |n| Some(c(ni(n), 2) + 1),
        },
        ReferenceSequence {
            name: "2n-2",
            eval: |n| Some(BigInt::from(2 * ni(n) - 2)),
        },
        ReferenceSequence {
            name: "f_{n+2}-1",
            eval: |n| Some(fibonacci(n + 2) - 1),
        },
        ReferenceSequence {
            name: "3n-5",
            eval: |n| Some(BigInt::from(3 * ni(n) - 5)),
        },
        ReferenceSequence {
            name: "t_n",
            eval: |n| Some(tribonacci(n)),
        },
        ReferenceSequence {
            name: "n",
            eval: |n| Some(BigInt::from(n)),
        },
        ReferenceSequence {
            name: "3",
            eval: |_| Some(BigInt::from(3)),
        },
        ReferenceSequence {
            name: "f_{n+1}",
            eval: |n| Some(fibonacci(n + 1)),
        },
        ReferenceSequence {
            name: "4",
            eval: |_| Some(BigInt::from(4)),
        },
        ReferenceSequence {
            name: "2",
            eval: |_| Some(BigInt::from(2)),
        },
        ReferenceSequence {
            name: "1",
            eval: |_| Some(BigInt::one()),
        },
    ];
    ENTRIES
}

/// Looks up a catalog entry by name.
pub fn reference(name: &str) -> Option<ReferenceSequence> {
    catalog().iter().copied().find(|r| r.name == name)
}

/// The first catalog entry reproducing `vector`, read as the values at
/// `lo, lo + 1, ...`, or [`UNRECOGNIZED`].
pub fn formula_match(vector: &[BigUint], lo: usize) -> &'static str {
    catalog()
        .iter()
        .find(|r| r.matches(vector, lo))
        .map_or(UNRECOGNIZED, |r| r.name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn named_sequences() {
        assert_eq!(catalan(10), 16796.into());
        assert_eq!(
            (0..8).map(fibonacci).collect::<Vec<_>>(),
            [0, 1, 1, 2, 3, 5, 8, 13].map(BigInt::from)
        );
        assert_eq!(fibonacci_shifted(6), 13.into());
        assert_eq!(
            (0..7).map(tribonacci).collect::<Vec<_>>(),
            [1, 1, 2, 4, 7, 13, 24].map(BigInt::from)
        );
    }

    #[test]
    fn entries_are_distinct_on_the_default_window() {
        let rows: Vec<_> = catalog().iter().map(|r| r.values(7, 11).unwrap()).collect();
        for i in 0..rows.len() {
            for j in 0..i {
                assert_ne!(
                    rows[i],
                    rows[j],
                    "{} vs {}",
                    catalog()[i].name,
                    catalog()[j].name
                );
            }
        }
    }

    #[test]
    fn single_pattern_rows_give_thirteen_at_four() {
        for r in &catalog()[2..10] {
            assert_eq!((r.eval)(4), Some(13.into()), "{}", r.name);
        }
    }

    #[test]
    fn matching() {
        assert_eq!(formula_match(&big(&[11, 13, 15, 17]), 8), UNRECOGNIZED);
        assert_eq!(formula_match(&big(&[19, 22, 25, 28]), 8), "3n-5");
        assert_eq!(
            formula_match(&big(&[429, 1430, 4862, 16796, 58786]), 7),
            "c_n"
        );
        assert_eq!(formula_match(&big(&[0, 0, 0]), 7), "0 (Erdős–Szekeres)");
        assert_eq!(formula_match(&big(&[7, 11, 16]), 4), "C(n,2)+1");
    }
}
