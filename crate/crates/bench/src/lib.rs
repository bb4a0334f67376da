//! Shared workloads for the criterion benches.

use avoidkit::perm::{pset, Permutation};
use avoidkit::PatternSet;

/// The six singletons of S3, each paired with every pattern of length 4.
pub fn singleton_workload() -> Vec<(PatternSet, Vec<Permutation>)> {
    let taus = avoidkit::perm::all_permutations(4);
    ["123", "132", "213", "231", "312", "321"]
        .iter()
        .map(|b| (pset(b), taus.clone()))
        .collect()
}
