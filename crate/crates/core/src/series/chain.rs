//! Solving the linear chain `s_i = A_i·s_{i+1} + B_i` (`1 ≤ i < r`) with
//! terminal value `s_r = h`, two ways: back-substitution, and the
//! determinant of the `r × r` matrix whose first column is
//! `(B_1, ..., B_{r-1}, h)`, whose superdiagonal is `-A_1, ..., -A_{r-1}`
//! and whose remaining diagonal entries are 1.

use serde::Serialize;

use super::RationalGF;

/// One link `s_i = a·s_{i+1} + b` of a chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub a: RationalGF,
    pub b: RationalGF,
}

impl ChainStep {
    pub fn new(a: RationalGF, b: RationalGF) -> Self {
        ChainStep { a, b }
    }
}

/// `s_1` by back-substitution from `s_r = h`. An empty chain yields `h`.
pub fn chain_solve(steps: &[ChainStep], h: &RationalGF) -> RationalGF {
    steps
        .iter()
        .rev()
        .fold(h.clone(), |s, step| &(&step.a * &s) + &step.b)
}

/// The chain's coefficient matrix, first column included.
pub fn chain_matrix(steps: &[ChainStep], h: &RationalGF) -> Vec<Vec<RationalGF>> {
    let r = steps.len() + 1;
    let mut m = vec![vec![RationalGF::zero(); r]; r];
    for (i, step) in steps.iter().enumerate() {
        m[i][0] = step.b.clone();
        m[i][i + 1] = -&step.a;
        if i > 0 {
            m[i][i] = RationalGF::one();
        }
    }
    m[r - 1][0] = h.clone();
    if r > 1 {
        m[r - 1][r - 1] = RationalGF::one();
    }
    m
}

/// `s_1` as the determinant of [`chain_matrix`].
pub fn chain_det(steps: &[ChainStep], h: &RationalGF) -> RationalGF {
    determinant(&chain_matrix(steps, h))
}

/// Determinant by cofactor expansion along the first remaining column,
/// skipping zero entries. Exponential in general; the chain matrices have
/// at most two nonzero entries per column after the first.
pub fn determinant(m: &[Vec<RationalGF>]) -> RationalGF {
    let rows: Vec<usize> = (0..m.len()).collect();
    let cols: Vec<usize> = (0..m.len()).collect();
    minor(m, &rows, &cols)
}

fn minor(m: &[Vec<RationalGF>], rows: &[usize], cols: &[usize]) -> RationalGF {
    let Some((&col, rest_cols)) = cols.split_first() else {
        return RationalGF::one();
    };
    let mut total = RationalGF::zero();
    for (idx, &row) in rows.iter().enumerate() {
        let entry = &m[row][col];
        if entry.is_zero() {
            continue;
        }
        let rest_rows: Vec<usize> = rows.iter().copied().filter(|&r| r != row).collect();
        let term = entry * &minor(m, &rest_rows, rest_cols);
        total = if idx % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::build_g;

    #[test]
    fn degenerate_chains() {
        assert_eq!(chain_solve(&[], &RationalGF::one()), RationalGF::one());
        let h = RationalGF::ratio(&[2, 1], &[1, -1]).unwrap();
        assert_eq!(chain_det(&[], &h), h);
    }

    #[test]
    fn single_step() {
        let g1 = build_g(1).unwrap();
        let steps = [ChainStep::new(g1.clone(), RationalGF::one())];
        let s = chain_solve(&steps, &RationalGF::one());
        assert_eq!(s, RationalGF::ratio(&[1], &[1, -1]).unwrap());
        assert_eq!(chain_det(&steps, &RationalGF::one()), s);

        let a = RationalGF::ratio(&[0, 3], &[1]).unwrap();
        let b = RationalGF::ratio(&[1, 1], &[1]).unwrap();
        let h = RationalGF::ratio(&[5], &[1, 2]).unwrap();
        let steps = [ChainStep::new(a.clone(), b.clone())];
        assert_eq!(chain_det(&steps, &h), &b + &(&a * &h));
    }

    #[test]
    fn geometric_chain() {
        let g = build_g(1).unwrap();
        let steps = vec![ChainStep::new(g, RationalGF::one()); 3];
        let s = chain_solve(&steps, &RationalGF::one());
        assert_eq!(s.coefficient(4).unwrap(), 7.into());
        assert_eq!(chain_det(&steps, &RationalGF::one()), s);
    }

    #[test]
    fn general_determinant() {
        let c = |v: i64| RationalGF::constant(v);
        let m = vec![
            vec![c(2), c(0), c(1)],
            vec![c(1), c(3), c(0)],
            vec![c(0), c(1), c(4)],
        ];
        assert_eq!(determinant(&m), c(25));
    }
}
