use std::fmt;

use serde::{Serialize, Serializer};

use super::{PatternSet, Permutation};

/// An element of the symmetry group of the permutation diagram (dihedral,
/// order 8), generated by reverse, complement and inverse.
///
/// Normal form: apply `inverse` (if set), then `reverse`, then `complement`.
/// Every group element has exactly one normal form because reverse and
/// complement commute and inverse conjugates one into the other.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Symmetry {
    pub inverse: bool,
    pub reverse: bool,
    pub complement: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry::new(false, false, false);
    pub const REVERSE: Symmetry = Symmetry::new(false, true, false);
    pub const COMPLEMENT: Symmetry = Symmetry::new(false, false, true);
    pub const INVERSE: Symmetry = Symmetry::new(true, false, false);

    /// All eight elements; the order here is the search order used when
    /// routing a pattern set to its canonical case.
    pub const ALL: [Symmetry; 8] = [
        Symmetry::new(false, false, false),
        Symmetry::new(false, true, false),
        Symmetry::new(false, false, true),
        Symmetry::new(true, false, false),
        Symmetry::new(false, true, true),
        Symmetry::new(true, true, false),
        Symmetry::new(true, false, true),
        Symmetry::new(true, true, true),
    ];

    pub const fn new(inverse: bool, reverse: bool, complement: bool) -> Self {
        Symmetry {
            inverse,
            reverse,
            complement,
        }
    }

    pub fn apply(&self, p: &Permutation) -> Permutation {
        let mut q = if self.inverse { p.inverse() } else { p.clone() };
        if self.reverse {
            q = q.reverse();
        }
        if self.complement {
            q = q.complement();
        }
        q
    }

    pub fn apply_set(&self, set: &PatternSet) -> PatternSet {
        set.map(|p| self.apply(p))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Symmetry) -> Symmetry {
        // inverse∘reverse = complement∘inverse and inverse∘complement = reverse∘inverse
        let (reverse, complement) = if self.inverse {
            (
                self.reverse ^ other.complement,
                self.complement ^ other.reverse,
            )
        } else {
            (
                self.reverse ^ other.reverse,
                self.complement ^ other.complement,
            )
        };
        Symmetry {
            inverse: self.inverse ^ other.inverse,
            reverse,
            complement,
        }
    }

    pub fn invert(&self) -> Symmetry {
        *Symmetry::ALL
            .iter()
            .find(|s| s.compose(self) == Symmetry::IDENTITY)
            .expect("group element without inverse")
    }

    pub fn name(&self) -> String {
        let mut parts = Vec::new();
        if self.complement {
            parts.push("complement");
        }
        if self.reverse {
            parts.push("reverse");
        }
        if self.inverse {
            parts.push("inverse");
        }
        if parts.is_empty() {
            "identity".to_string()
        } else {
            parts.join("∘")
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symmetry({})", self.name())
    }
}

impl Serialize for Symmetry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

/// Images of `(set, tau)` under all eight symmetries, applied simultaneously
/// to every member. Entries follow [`Symmetry::ALL`]; duplicates are kept.
pub fn symmetry_images(
    set: &PatternSet,
    tau: &Permutation,
) -> Vec<(Symmetry, PatternSet, Permutation)> {
    Symmetry::ALL
        .iter()
        .map(|s| (*s, s.apply_set(set), s.apply(tau)))
        .collect()
}

/// Distinct images of `(set, tau)`, each with the first symmetry producing it.
pub fn orbit(set: &PatternSet, tau: &Permutation) -> Vec<(Symmetry, PatternSet, Permutation)> {
    let mut out: Vec<(Symmetry, PatternSet, Permutation)> = Vec::new();
    for image in symmetry_images(set, tau) {
        if !out.iter().any(|(_, t, p)| *t == image.1 && *p == image.2) {
            out.push(image);
        }
    }
    out
}
