//! Exact counting for permutation classes `S_n(T, τ)` with `T ⊆ S3` and `τ`
//! an arbitrary permutation.
//!
//! * [`perm`]: permutations, containment, symmetries, brute-force enumeration
//!   (the ground truth for everything else).
//! * [`series`]: exact integer polynomials, rational generating functions and
//!   the linear chain solver `s_i = A_i s_{i+1} + B_i`.
//! * [`closedform`]: structural recognition of `τ` for each family of `T` and
//!   the closed forms attached to it, each audited against enumeration.
//! * [`wilf`]: Wilf-class partitions, the `T ⊆ S3`, `τ ∈ S4` table and the
//!   catalog of named sequences used to label classes.

pub mod closedform;
mod decimal;
pub mod error;
pub mod perm;
pub mod series;
pub mod wilf;

pub use closedform::{evaluate, formula_for, Evaluation, FormulaKind, FormulaSpec, Method, Status};
pub use error::{Error, Result};
pub use perm::{PatternSet, Permutation, Symmetry};
pub use series::{ChainStep, IntPolynomial, RationalGF};
pub use wilf::{Pair, PairPopulation, WilfClassReport};
