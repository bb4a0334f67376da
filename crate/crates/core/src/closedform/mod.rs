//! Structural recognition of `τ` relative to `T ⊆ S3` and the closed forms
//! that follow from it.
//!
//! Every pair `(T, τ)` with `|T| ≥ 2` is first mapped by a symmetry onto a
//! canonical case ([`reduce_to_canonical`]); the family functions then read
//! off the structure of the transformed `τ`. Formulas are built exactly as
//! stated by the structure theorems, and [`FormulaSpec::verify`] records
//! where they agree with enumeration and where they do not.

mod canonical;
mod formula;
mod pairs;
mod triples;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{count_avoiders, perm, PatternSet, Permutation};
use crate::series::RationalGF;

pub use canonical::{reduce_to_canonical, CanonicalCase, Reduction};
pub use formula::{binomial, FormulaKind, FormulaSpec, Status};
pub use pairs::{
    chain_gf_132_213, decompose_123_132, decompose_132_213, gf_123_132, gf_132_213, gf_213_231,
    recognize_123_231, shape_123_231, signature_213_231, BlockDecomposition, Extreme,
};
pub use triples::{canonical_3set, gf_123_132_213, m_signature, ConstantFamily};

/// Vanishing threshold `(a-1)(b-1)+1` when `set` has an increasing member
/// of length `a` and a decreasing member of length `b` (smallest such).
/// The empty pattern makes every class empty, so it yields 0.
pub fn es_bound(set: &PatternSet) -> Option<usize> {
    if set.iter().any(Permutation::is_empty) {
        return Some(0);
    }
    let a = set
        .iter()
        .filter(|p| p.is_increasing())
        .map(Permutation::len)
        .min()?;
    let b = set
        .iter()
        .filter(|p| p.is_decreasing())
        .map(Permutation::len)
        .min()?;
    Some((a - 1) * (b - 1) + 1)
}

/// The printed value for `|T| ≥ 4`: `2` minus a Kronecker delta for each
/// monotone `τ` not already excluded by `T`, or 0 when `{123, 321} ⊆ T`.
pub fn formula_t4plus(set: &PatternSet, tau: &Permutation) -> Result<FormulaSpec> {
    if !set.is_subset_of_s3() {
        return Err(Error::NotSubsetOfS3(set.to_string()));
    }
    if set.len() < 4 {
        return Err(Error::InvalidParameter(format!(
            "{set} has fewer than four patterns"
        )));
    }
    let has_inc = set.contains_member(&perm("123"));
    let has_dec = set.contains_member(&perm("321"));
    let kind = FormulaKind::Kronecker {
        base: if has_inc && has_dec { 0 } else { 2 },
        subtract_increasing: !has_inc && !has_dec || has_dec && !has_inc,
        subtract_decreasing: !has_inc && !has_dec || has_inc && !has_dec,
        tau_increasing: tau.is_increasing(),
        tau_decreasing: tau.is_decreasing(),
    };
    Ok(FormulaSpec::new(kind, tau.len(), "kronecker/four-or-more"))
}

fn eventually_zero(set: &PatternSet, tau: &Permutation) -> FormulaSpec {
    let threshold = es_bound(&set.with(tau.clone())).expect("monotone members on both sides");
    FormulaSpec::new(
        FormulaKind::EventuallyZero { threshold },
        threshold,
        "erdos-szekeres",
    )
}

/// The closed form for `|S_n(T, τ)|`, `|T| ≥ 2`, `τ` of length at least 3
/// avoiding `T`.
///
/// Decreasing `τ` in a case containing 123 yields the vanishing bound rather
/// than the chain formulas, which do not cover it.
pub fn formula_for(set: &PatternSet, tau: &Permutation) -> Result<FormulaSpec> {
    if tau.len() < 3 {
        return Err(Error::NotInDomain {
            family: "any",
            tau: tau.to_string(),
            reason: "closed forms need τ of length at least 3".into(),
        });
    }
    if let Some(p) = set.iter().find(|p| tau.contains(p)) {
        return Err(Error::NotInDomain {
            family: "any",
            tau: tau.to_string(),
            reason: format!("τ contains {p} ∈ T, so the class is S_n(T)"),
        });
    }
    let reduction = reduce_to_canonical(set, tau)?;
    let image = &reduction.tau;
    let has_123 = reduction.set.contains_member(&perm("123"));
    if has_123 && image.is_decreasing() && reduction.case != CanonicalCase::FourOrMore {
        return Ok(eventually_zero(&reduction.set, image));
    }
    match reduction.case {
        CanonicalCase::Pair123_132 => gf_123_132(image),
        CanonicalCase::Pair123_231 => recognize_123_231(image),
        CanonicalCase::Pair132_213 => gf_132_213(image),
        CanonicalCase::Pair213_231 => gf_213_231(image),
        CanonicalCase::Triple123_132_213 => gf_123_132_213(image),
        CanonicalCase::Constant(family) => canonical_3set(family, image),
        CanonicalCase::MonotoneClash => Ok(eventually_zero(set, tau)),
        CanonicalCase::FourOrMore => formula_t4plus(set, tau),
    }
}

/// A rational generating function for the class when the closed form is
/// one (the binomial sum is given as its block chain).
pub fn generating_function(set: &PatternSet, tau: &Permutation) -> Result<RationalGF> {
    let spec = formula_for(set, tau)?;
    match spec.kind {
        FormulaKind::RationalGf { gf } => Ok(gf),
        FormulaKind::BinomialSum { .. } => chain_gf_132_213(&reduce_to_canonical(set, tau)?.tau),
        _ => Err(Error::NotInDomain {
            family: spec.provenance,
            tau: tau.to_string(),
            reason: format!(
                "closed form {} is not a generating function",
                spec.describe()
            ),
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    Formula,
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Formula => "formula",
            Method::Both => "both",
        })
    }
}

/// One evaluated count. `printed` is the closed form's value when it was
/// consulted; `agree` is set only when both sides are present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub n: usize,
    pub method: Method,
    #[serde(serialize_with = "option_decimal")]
    pub oracle: Option<BigUint>,
    #[serde(serialize_with = "option_decimal")]
    pub printed: Option<BigInt>,
    pub agree: Option<bool>,
    pub formula: Option<FormulaSpec>,
    /// Why the formula was not consulted, when it was not.
    pub note: Option<String>,
}

fn option_decimal<S: serde::Serializer, T: fmt::Display>(
    value: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

impl Evaluation {
    /// The count: enumeration when available, otherwise the closed form.
    pub fn value(&self) -> BigInt {
        match (&self.oracle, &self.printed) {
            (Some(o), _) => BigInt::from(o.clone()),
            (None, Some(p)) => p.clone(),
            (None, None) => unreachable!("evaluation without a value"),
        }
    }

    pub fn disagrees(&self) -> bool {
        self.agree == Some(false)
    }
}

/// Exact agreement of a printed value with an enumerated count.
pub fn values_agree(printed: &BigInt, oracle: &BigUint) -> bool {
    *printed == BigInt::from(oracle.clone())
}

/// `|S_n(T, τ)|` by enumeration, by closed form, or both.
///
/// The closed form is used only when one exists and `n ≥ validity_from`;
/// otherwise enumeration supplies the value and `note` says why.
pub fn evaluate(
    set: &PatternSet,
    tau: Option<&Permutation>,
    n: usize,
    method: Method,
) -> Result<Evaluation> {
    let formula = match tau {
        Some(tau) if set.len() >= 2 => formula_for(set, tau),
        _ => Err(Error::InvalidParameter(
            "closed forms need at least two patterns in T and a τ".into(),
        )),
    };
    evaluate_with(set, tau, n, method, formula)
}

/// [`evaluate`] with the closed form supplied by the caller.
pub fn evaluate_with(
    set: &PatternSet,
    tau: Option<&Permutation>,
    n: usize,
    method: Method,
    formula: Result<FormulaSpec>,
) -> Result<Evaluation> {
    let (formula, note) = match formula {
        Ok(spec) if n >= spec.validity_from => (Some(spec), None),
        Ok(spec) => {
            let note = format!(
                "n below the closed form's range (from {})",
                spec.validity_from
            );
            (Some(spec), Some(note))
        }
        Err(e) => (None, Some(format!("no closed form: {e}"))),
    };
    let usable = formula.as_ref().filter(|_| note.is_none());
    let printed = match (method, usable) {
        (Method::Oracle, _) | (_, None) => None,
        (_, Some(spec)) => Some(spec.value_at(n)?),
    };
    let oracle = if method == Method::Oracle || method == Method::Both || printed.is_none() {
        Some(count_avoiders(n, set, tau)?)
    } else {
        None
    };
    let agree = match (&printed, &oracle) {
        (Some(p), Some(o)) => Some(values_agree(p, o)),
        _ => None,
    };
    Ok(Evaluation {
        n,
        method,
        oracle,
        printed,
        agree,
        formula: if method == Method::Oracle {
            None
        } else {
            formula
        },
        note: if method == Method::Oracle { None } else { note },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, pset, subsets_of_s3, symmetry_images};

    #[test]
    fn erdos_szekeres_bounds() {
        assert_eq!(es_bound(&pset("123,4321")), Some(7));
        assert_eq!(es_bound(&pset("123,321")), Some(5));
        assert_eq!(es_bound(&pset("132,4321")), None);
        assert_eq!(es_bound(&PatternSet::new([Permutation::empty()])), Some(0));
    }

    #[test]
    fn kronecker_branches() {
        let spec = formula_t4plus(&pset("132,213,231,312"), &perm("1234")).unwrap();
        assert_eq!(spec.value_at(4).unwrap(), 1.into());
        let spec = formula_t4plus(&pset("123,132,213,231"), &perm("4312")).unwrap();
        assert_eq!(spec.value_at(5).unwrap(), 2.into());
        let spec = formula_t4plus(&pset("123,132,213,231"), &perm("4321")).unwrap();
        assert_eq!(spec.value_at(5).unwrap(), 1.into());
        let spec = formula_t4plus(&pset("132,213,231,321"), &perm("1234")).unwrap();
        assert_eq!(spec.value_at(5).unwrap(), 1.into());
        let spec = formula_t4plus(&pset("123,321,132,213"), &perm("3412")).unwrap();
        assert_eq!(spec.value_at(5).unwrap(), 0.into());
    }

    #[test]
    fn dispatch_routes_examples() {
        let spec = formula_for(&pset("123,132"), &perm("3412")).unwrap();
        assert_eq!(spec.value_at(6).unwrap(), 16.into());
        let spec = formula_for(&pset("321,312"), &perm("2134")).unwrap();
        assert_eq!(spec.provenance, "block-chain/123-132");
        let spec = formula_for(&pset("123,132"), &perm("4321")).unwrap();
        assert_eq!(spec.kind, FormulaKind::EventuallyZero { threshold: 7 });
        assert_eq!(spec.validity_from, 7);
        let spec = formula_for(&pset("123,321"), &perm("2143")).unwrap();
        assert_eq!(spec.kind, FormulaKind::EventuallyZero { threshold: 5 });
        assert!(formula_for(&pset("123,132"), &perm("1234")).is_err());
        assert!(formula_for(&pset("123,132"), &perm("21")).is_err());
    }

    #[test]
    fn formulas_exist_for_every_avoiding_tau() {
        for set in subsets_of_s3().into_iter().filter(|s| s.len() >= 2) {
            for k in 3..=5 {
                for tau in all_permutations(k)
                    .into_iter()
                    .filter(|t| t.avoids_all(&set))
                {
                    formula_for(&set, &tau).unwrap_or_else(|e| panic!("{set} {tau}: {e}"));
                }
            }
        }
    }

    #[test]
    fn printed_values_are_symmetry_invariant() {
        for set in subsets_of_s3().into_iter().filter(|s| s.len() >= 2) {
            for tau in all_permutations(4)
                .into_iter()
                .filter(|t| t.avoids_all(&set))
            {
                let base = formula_for(&set, &tau).unwrap();
                let values = base.values(base.validity_from, 9).unwrap();
                for (_, s, t) in symmetry_images(&set, &tau) {
                    let image = formula_for(&s, &t).unwrap();
                    assert_eq!(image.validity_from, base.validity_from);
                    assert_eq!(image.values(image.validity_from, 9).unwrap(), values);
                }
            }
        }
    }

    #[test]
    fn evaluation_modes() {
        let set = pset("123,132");
        let e = evaluate(&set, Some(&perm("3412")), 6, Method::Both).unwrap();
        assert_eq!(e.oracle, Some(16u32.into()));
        assert_eq!(e.printed, Some(16.into()));
        assert_eq!(e.agree, Some(true));
        let e = evaluate(&set, Some(&perm("3421")), 5, Method::Both).unwrap();
        assert_eq!(
            (&e.printed, &e.oracle),
            (&Some(11.into()), &Some(10u32.into()))
        );
        assert!(e.disagrees());
        let e = evaluate(&set, Some(&perm("1234")), 7, Method::Formula).unwrap();
        assert_eq!(e.value(), 64.into());
        assert!(e.note.is_some());
        let e = evaluate(&set, Some(&perm("3412")), 2, Method::Formula).unwrap();
        assert_eq!(e.printed, None);
        assert_eq!(e.value(), 2.into());
        let e = evaluate(&set, Some(&perm("3412")), 8, Method::Formula).unwrap();
        assert_eq!((e.oracle, e.printed), (None, Some(29.into())));
    }

    #[test]
    fn disagreement_is_never_hidden() {
        let set = pset("123,132");
        let tau = perm("3412");
        let mut spec = formula_for(&set, &tau).unwrap();
        let FormulaKind::RationalGf { gf } = &spec.kind else {
            panic!()
        };
        spec.kind = FormulaKind::RationalGf {
            gf: gf * &RationalGF::constant(2),
        };
        for n in 4..=8 {
            let e = evaluate_with(&set, Some(&tau), n, Method::Both, Ok(spec.clone())).unwrap();
            assert_eq!(e.agree, Some(false));
        }
        assert!(!values_agree(&BigInt::from(-3), &BigUint::from(3u32)));
    }
}
