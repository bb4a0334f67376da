//! Exact integer polynomials, rational generating functions, and the chain
//! solver that assembles them.

mod chain;
mod gf;
mod poly;

pub use chain::{chain_det, chain_matrix, chain_solve, determinant, ChainStep};
pub use gf::RationalGF;
pub use poly::IntPolynomial;

use crate::error::{Error, Result};

/// `(1 - 2x + x^d)`, the denominator shared by [`build_f`] and [`build_g`].
fn block_denominator(d: usize) -> IntPolynomial {
    let mut coeffs = vec![0i64; d.max(1) + 1];
    coeffs[0] += 1;
    coeffs[1] -= 2;
    coeffs[d] += 1;
    IntPolynomial::from_i64s(&coeffs)
}

fn check_block(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "block size must be at least 1".into(),
        ));
    }
    Ok(())
}

/// `(1 - x)/(1 - 2x + x^d)`, in lowest terms.
pub fn build_f(d: usize) -> Result<RationalGF> {
    check_block(d)?;
    RationalGF::new(IntPolynomial::from_i64s(&[1, -1]), block_denominator(d))
}

/// `x^d/(1 - 2x + x^d)`, in lowest terms.
pub fn build_g(d: usize) -> Result<RationalGF> {
    check_block(d)?;
    RationalGF::new(IntPolynomial::monomial(1.into(), d), block_denominator(d))
}

/// `u_1 = 1`, `u_2 = 1/(1 - x)`.
pub fn build_u(i: usize) -> Result<RationalGF> {
    match i {
        1 => Ok(RationalGF::one()),
        2 => RationalGF::ratio(&[1], &[1, -1]),
        _ => Err(Error::InvalidParameter(format!(
            "u_{i} is defined only for i in {{1, 2}}"
        ))),
    }
}

/// `v_1 = x(1 + x)`, `v_2 = x^2/(1 - x)`.
pub fn build_v(i: usize) -> Result<RationalGF> {
    match i {
        1 => RationalGF::ratio(&[0, 1, 1], &[1]),
        2 => RationalGF::ratio(&[0, 0, 1], &[1, -1]),
        _ => Err(Error::InvalidParameter(format!(
            "v_{i} is defined only for i in {{1, 2}}"
        ))),
    }
}
