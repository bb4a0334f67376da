//! The four canonical two-pattern families.

use serde::Serialize;

use super::formula::{FormulaKind, FormulaSpec};
use crate::error::{Error, Result};
use crate::perm::{pset, Permutation};
use crate::series::{build_f, build_g, chain_solve, ChainStep, RationalGF};

fn not_in_domain(family: &'static str, tau: &Permutation, reason: impl Into<String>) -> Error {
    Error::NotInDomain {
        family,
        tau: tau.to_string(),
        reason: reason.into(),
    }
}

/// Checks that `tau` avoids every pattern of `family` (a set literal).
pub(super) fn require_avoids(family: &'static str, tau: &Permutation) -> Result<()> {
    let set = pset(family);
    if let Some(p) = set.iter().find(|p| tau.contains(p)) {
        return Err(not_in_domain(family, tau, format!("contains {p}")));
    }
    if tau.len() < 3 {
        return Err(not_in_domain(family, tau, "length below 3"));
    }
    Ok(())
}

/// `tau` split into consecutive blocks.
///
/// For `{123,132}` each block is a decreasing run followed by its maximum,
/// `sizes` are the block lengths and `anchors` the block maxima (the value
/// `t_i = k - (r_1 + ... + r_{i-1})`).
///
/// For `{132,213}` each block is an increasing run of consecutive values,
/// `anchors` are the block minima `r_1 > r_2 > ... > r_m = 1` and `sizes`
/// the gaps `r_{i-1} - r_i` with `r_0 = k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub sizes: Vec<usize>,
    pub blocks: Vec<Vec<u8>>,
    pub anchors: Vec<usize>,
}

impl BlockDecomposition {
    pub fn reassemble(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.blocks.concat())
    }

    /// The chain `s_i = g_{d_i}·s_{i+1} + f_{d_i}` ending in `f_{d_m}`,
    /// with `d_i` running over `sizes`.
    pub fn chain(&self) -> Result<(Vec<ChainStep>, RationalGF)> {
        let (last, init) = self.sizes.split_last().expect("decomposition has a block");
        let steps = init
            .iter()
            .map(|&d| Ok(ChainStep::new(build_g(d)?, build_f(d)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok((steps, build_f(*last)?))
    }

    fn gf(&self) -> Result<RationalGF> {
        let (steps, h) = self.chain()?;
        Ok(chain_solve(&steps, &h))
    }
}

const FAMILY_123_132: &str = "123,132";
const FAMILY_123_231: &str = "123,231";
const FAMILY_132_213: &str = "132,213";
const FAMILY_213_231: &str = "213,231";

/// Splits `tau ∈ S_k(123,132)` at successive maxima: each block ends at the
/// largest remaining value and holds the values just below it, decreasing.
pub fn decompose_123_132(tau: &Permutation) -> Result<BlockDecomposition> {
    require_avoids(FAMILY_123_132, tau)?;
    let mut rest = tau.values();
    let mut out = BlockDecomposition {
        sizes: Vec::new(),
        blocks: Vec::new(),
        anchors: Vec::new(),
    };
    while !rest.is_empty() {
        let top = rest.len() as u8;
        let r = rest.iter().position(|&v| v == top).unwrap() + 1;
        let block = &rest[..r];
        let expected: Vec<u8> = (top + 1 - r as u8..top).rev().chain([top]).collect();
        if block != expected.as_slice() {
            return Err(not_in_domain(
                FAMILY_123_132,
                tau,
                "block is not a run ending at its maximum",
            ));
        }
        out.sizes.push(r);
        out.blocks.push(block.to_vec());
        out.anchors.push(top as usize);
        rest = &rest[r..];
    }
    Ok(out)
}

/// Generating function of `|S_n(123,132,τ)|` as the block chain with
/// `A_i = g_{r_i}`, `B_i = f_{r_i}` and terminal value `f_{r_m}`.
pub fn gf_123_132(tau: &Permutation) -> Result<FormulaSpec> {
    let gf = decompose_123_132(tau)?.gf()?;
    Ok(FormulaSpec::new(
        FormulaKind::RationalGf { gf },
        tau.len(),
        "block-chain/123-132",
    ))
}

/// The parameters `(m, r)` of `tau = (k, ..., m, r, ..., 1, m-1, ..., r+1)`,
/// `2 ≤ m ≤ k+1`, `1 ≤ r ≤ m-2`.
pub fn shape_123_231(tau: &Permutation) -> Result<(usize, usize)> {
    require_avoids(FAMILY_123_231, tau)?;
    let v = tau.values();
    let k = v.len();
    let lead = v
        .iter()
        .enumerate()
        .take_while(|&(i, &x)| x as usize == k - i)
        .count();
    if lead == k {
        return Err(not_in_domain(FAMILY_123_231, tau, "decreasing"));
    }
    let m = k + 1 - lead;
    let r = v[lead] as usize;
    let expected: Vec<u8> = (1..=r as u8)
        .rev()
        .chain((r as u8 + 1..m as u8).rev())
        .collect();
    if r + 2 > m || v[lead..] != expected[..] {
        return Err(not_in_domain(
            FAMILY_123_231,
            tau,
            "not of the form (k..m, r..1, m-1..r+1)",
        ));
    }
    Ok((m, r))
}

/// `|S_n(123,231,τ)| = (k-2)n - k(k-3)/2` for `n ≥ k`.
pub fn recognize_123_231(tau: &Permutation) -> Result<FormulaSpec> {
    shape_123_231(tau)?;
    let k = tau.len() as i64;
    Ok(FormulaSpec::new(
        FormulaKind::Linear {
            slope: k - 2,
            intercept: -(k * (k - 3) / 2),
        },
        tau.len(),
        "linear/123-231",
    ))
}

/// Splits `tau ∈ S_k(132,213)` into increasing runs of consecutive values
/// whose starting values decrease.
pub fn decompose_132_213(tau: &Permutation) -> Result<BlockDecomposition> {
    require_avoids(FAMILY_132_213, tau)?;
    let v = tau.values();
    let mut out = BlockDecomposition {
        sizes: Vec::new(),
        blocks: Vec::new(),
        anchors: Vec::new(),
    };
    let mut upper = v.len() + 1;
    let mut pos = 0;
    while pos < v.len() {
        let start = v[pos] as usize;
        let len = upper.saturating_sub(start);
        let block = &v[pos..pos + len.min(v.len() - pos)];
        if len == 0 || !block.iter().copied().eq(start as u8..upper as u8) {
            return Err(not_in_domain(
                FAMILY_132_213,
                tau,
                "block is not a run of consecutive values",
            ));
        }
        out.sizes.push(len);
        out.blocks.push(block.to_vec());
        out.anchors.push(start);
        upper = start;
        pos += len;
    }
    Ok(out)
}

/// Generating function of `|S_n(132,213,τ)|`: the block chain over the gaps.
/// For decreasing `τ` the binomial sum `Σ_{j=0}^{k-2} C(n-1, j)`, valid for
/// every `n ≥ 0`.
pub fn gf_132_213(tau: &Permutation) -> Result<FormulaSpec> {
    let decomposition = decompose_132_213(tau)?;
    if tau.is_decreasing() {
        return Ok(FormulaSpec::new(
            FormulaKind::BinomialSum {
                upper: tau.len() - 2,
            },
            0,
            "binomial-sum/132-213",
        ));
    }
    Ok(FormulaSpec::new(
        FormulaKind::RationalGf {
            gf: decomposition.gf()?,
        },
        tau.len(),
        "block-chain/132-213",
    ))
}

/// The block-chain form for `{132,213}` even when `tau` is decreasing.
pub fn chain_gf_132_213(tau: &Permutation) -> Result<RationalGF> {
    decompose_132_213(tau)?.gf()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Extreme {
    Max,
    Min,
}

/// For each `τ_i`, `i < k`: whether it is the largest or the smallest of
/// `τ_i, ..., τ_k`.
pub fn signature_213_231(tau: &Permutation) -> Result<Vec<Extreme>> {
    require_avoids(FAMILY_213_231, tau)?;
    let v = tau.values();
    let (mut lo, mut hi) = (1u8, v.len() as u8);
    let mut out = Vec::with_capacity(v.len().saturating_sub(1));
    for &x in &v[..v.len() - 1] {
        if x == hi {
            out.push(Extreme::Max);
            hi -= 1;
        } else if x == lo {
            out.push(Extreme::Min);
            lo += 1;
        } else {
            return Err(not_in_domain(
                FAMILY_213_231,
                tau,
                format!("{x} is neither extreme"),
            ));
        }
    }
    Ok(out)
}

/// `Σ_{i=0}^{k-1} g^i` with `g = x/(1-x)`: a chain of `k-1` steps
/// `(A, B) = (g, 1)` ending in 1.
pub fn gf_213_231(tau: &Permutation) -> Result<FormulaSpec> {
    let signature = signature_213_231(tau)?;
    let g = build_g(1)?;
    let steps = vec![ChainStep::new(g, RationalGF::one()); signature.len()];
    Ok(FormulaSpec::new(
        FormulaKind::RationalGf {
            gf: chain_solve(&steps, &RationalGF::one()),
        },
        tau.len(),
        "chain/213-231",
    ))
}
