use std::fmt;

use serde::{Serialize, Serializer};

use super::triples::ConstantFamily;
use crate::error::{Error, Result};
use crate::perm::{perm, pset, PatternSet, Permutation, Symmetry};

/// The cases every `T ⊆ S3` with `|T| ≥ 2` is routed to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalCase {
    Pair123_132,
    Pair123_231,
    Pair132_213,
    Pair213_231,
    Triple123_132_213,
    Constant(ConstantFamily),
    /// `T ⊇ {123, 321}` with `|T| ≤ 3`: empty from length 5 on.
    MonotoneClash,
    /// `|T| ≥ 4`, handled on `T` itself.
    FourOrMore,
}

impl CanonicalCase {
    /// Cases reached by a symmetry, with their pattern sets.
    pub const ROUTED: [CanonicalCase; 9] = [
        CanonicalCase::Pair123_132,
        CanonicalCase::Pair123_231,
        CanonicalCase::Pair132_213,
        CanonicalCase::Pair213_231,
        CanonicalCase::Triple123_132_213,
        CanonicalCase::Constant(ConstantFamily::T123_132_231),
        CanonicalCase::Constant(ConstantFamily::T123_213_231),
        CanonicalCase::Constant(ConstantFamily::T123_231_312),
        CanonicalCase::Constant(ConstantFamily::T132_213_231),
    ];

    /// The canonical pattern set, for the routed cases.
    pub fn patterns(self) -> Option<PatternSet> {
        let text = match self {
            CanonicalCase::Pair123_132 => "123,132",
            CanonicalCase::Pair123_231 => "123,231",
            CanonicalCase::Pair132_213 => "132,213",
            CanonicalCase::Pair213_231 => "213,231",
            CanonicalCase::Triple123_132_213 => "123,132,213",
            CanonicalCase::Constant(family) => family.patterns(),
            CanonicalCase::MonotoneClash | CanonicalCase::FourOrMore => return None,
        };
        Some(pset(text))
    }

    pub fn name(self) -> String {
        match self.patterns() {
            Some(set) => set.to_string(),
            None if self == CanonicalCase::MonotoneClash => "monotone-clash".into(),
            None => "four-or-more".into(),
        }
    }
}

impl fmt::Display for CanonicalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for CanonicalCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

/// `(T, τ)` mapped onto a canonical case: `set` and `tau` are the images
/// under `symmetry`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub case: CanonicalCase,
    pub symmetry: Symmetry,
    pub set: PatternSet,
    pub tau: Permutation,
}

/// Routes `(T, τ)` to its canonical case. The first symmetry in
/// [`Symmetry::ALL`] that works is used.
pub fn reduce_to_canonical(set: &PatternSet, tau: &Permutation) -> Result<Reduction> {
    if !set.is_subset_of_s3() {
        return Err(Error::NotSubsetOfS3(set.to_string()));
    }
    if set.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "{set} has fewer than two patterns; no canonical case"
        )));
    }
    let unchanged = |case| Reduction {
        case,
        symmetry: Symmetry::IDENTITY,
        set: set.clone(),
        tau: tau.clone(),
    };
    if set.len() >= 4 {
        return Ok(unchanged(CanonicalCase::FourOrMore));
    }
    if set.contains_member(&perm("123")) && set.contains_member(&perm("321")) {
        return Ok(unchanged(CanonicalCase::MonotoneClash));
    }
    for symmetry in Symmetry::ALL {
        let image = symmetry.apply_set(set);
        if let Some(case) = CanonicalCase::ROUTED
            .into_iter()
            .find(|c| c.patterns().as_ref() == Some(&image))
        {
            return Ok(Reduction {
                case,
                symmetry,
                set: image,
                tau: symmetry.apply(tau),
            });
        }
    }
    unreachable!("{set} lies in no symmetry class of the canonical cases")
}
