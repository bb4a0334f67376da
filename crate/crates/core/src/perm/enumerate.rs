use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use super::matching::{contains_naive, PatternMatcher};
use super::{all_permutations, PatternSet, Permutation};
use crate::error::{Error, Result};

/// Longest permutations the pruned enumerator accepts.
pub const MAX_ENUMERATION_LENGTH: usize = 13;
/// Longest permutations the filter-everything enumerator accepts.
pub const MAX_NAIVE_LENGTH: usize = 8;
/// Upper bound on the number of permutations materialized or counted by a
/// single enumeration.
pub const MAX_MATERIALIZED: usize = 50_000_000;

fn check_length(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "length {n} exceeds the enumeration cap of {cap}"
        )));
    }
    Ok(())
}

fn overflow(n: usize, set: &PatternSet) -> Error {
    Error::ResourceLimit(format!(
        "S_{n}{set} has more than {MAX_MATERIALIZED} members"
    ))
}

/// Depth-first generation of the avoiders of a fixed set of patterns.
/// Children are visited in increasing value order, so leaves come out in
/// lexicographic order.
struct Walker<'a> {
    n: usize,
    matchers: Vec<PatternMatcher<'a>>,
    produced: &'a AtomicUsize,
}

impl Walker<'_> {
    fn admits(&self, prefix: &[u8]) -> bool {
        self.matchers
            .iter()
            .all(|m| !m.occurs_ending_at_last(prefix))
    }

    fn walk(
        &self,
        prefix: &mut Vec<u8>,
        used: u32,
        visit: &mut dyn FnMut(&[u8]),
    ) -> std::result::Result<(), ()> {
        if prefix.len() == self.n {
            if self.produced.fetch_add(1, Ordering::Relaxed) >= MAX_MATERIALIZED {
                return Err(());
            }
            visit(prefix);
            return Ok(());
        }
        for v in 1..=self.n as u8 {
            if used & (1 << v) != 0 {
                continue;
            }
            prefix.push(v);
            if self.admits(prefix) {
                self.walk(prefix, used | (1 << v), visit)?;
            }
            prefix.pop();
        }
        Ok(())
    }

    /// Runs the subtree rooted at first value `first`.
    fn branch(&self, first: u8, visit: &mut dyn FnMut(&[u8])) -> std::result::Result<(), ()> {
        let mut prefix = Vec::with_capacity(self.n);
        prefix.push(first);
        if !self.admits(&prefix) {
            return Ok(());
        }
        self.walk(&mut prefix, 1 << first, visit)
    }
}

/// The empty pattern occurs in every host, the empty one included.
fn has_empty_pattern(set: &PatternSet) -> bool {
    set.iter().any(Permutation::is_empty)
}

/// `S_n(T)` in lexicographic order, by prefix-pruned depth-first search.
///
/// A prefix containing a pattern cannot extend to an avoider, and a prefix
/// that avoids every pattern can only start containing one through an
/// occurrence that uses the value just appended, so each extension is tested
/// with an anchored search. First-value branches run in parallel and are
/// concatenated in order.
pub fn enumerate_avoiders(n: usize, set: &PatternSet) -> Result<Vec<Permutation>> {
    check_length(n, MAX_ENUMERATION_LENGTH)?;
    if has_empty_pattern(set) {
        return Ok(Vec::new());
    }
    if n == 0 {
        return Ok(vec![Permutation::empty()]);
    }
    let produced = AtomicUsize::new(0);
    let walker = Walker {
        n,
        matchers: set
            .iter()
            .map(|p| PatternMatcher::new(p.values()))
            .collect(),
        produced: &produced,
    };
    let branches: Vec<std::result::Result<Vec<Permutation>, ()>> = (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            walker.branch(first, &mut |p| {
                out.push(Permutation::from_vec_unchecked(p.to_vec()))
            })?;
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for branch in branches {
        all.extend(branch.map_err(|_| overflow(n, set))?);
    }
    Ok(all)
}

fn count_streaming(n: usize, set: &PatternSet, filter: Option<&Permutation>) -> Result<BigUint> {
    if has_empty_pattern(set) {
        return Ok(BigUint::default());
    }
    if n == 0 {
        let survives = filter.is_none_or(|tau| !tau.is_empty());
        return Ok(BigUint::from(survives as u32));
    }
    let produced = AtomicUsize::new(0);
    let walker = Walker {
        n,
        matchers: set
            .iter()
            .map(|p| PatternMatcher::new(p.values()))
            .collect(),
        produced: &produced,
    };
    let tau_matcher = filter.map(|t| PatternMatcher::new(t.values()));
    let counts: Vec<std::result::Result<u64, ()>> = (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            walker.branch(first, &mut |p| {
                if tau_matcher.as_ref().is_none_or(|m| !m.occurs_in(p)) {
                    count += 1;
                }
            })?;
            Ok(count)
        })
        .collect();
    let mut total = BigUint::default();
    for c in counts {
        total += c.map_err(|_| overflow(n, set))?;
    }
    Ok(total)
}

/// `|S_n(T ∪ {τ})|`, computed by walking `S_n(T)` and discarding hosts that
/// contain `τ`. With an empty `T` the walk is pruned by `τ` itself, and with
/// neither the answer is `n!`.
pub fn count_avoiders(n: usize, set: &PatternSet, tau: Option<&Permutation>) -> Result<BigUint> {
    check_length(n, MAX_ENUMERATION_LENGTH)?;
    match (set.is_empty(), tau) {
        (true, None) => Ok((1..=n as u32).fold(BigUint::one(), |acc, i| acc * i)),
        (true, Some(tau)) => count_streaming(n, &PatternSet::new([tau.clone()]), None),
        (false, tau) => count_streaming(n, set, tau),
    }
}

/// `S_n(T)` by filtering all `n!` permutations with the subsequence-scan
/// containment test. Shares no code with [`enumerate_avoiders`] beyond the
/// permutation type.
pub fn naive_enumerate(n: usize, set: &PatternSet) -> Result<Vec<Permutation>> {
    check_length(n, MAX_NAIVE_LENGTH)?;
    Ok(all_permutations(n)
        .into_iter()
        .filter(|host| set.iter().all(|p| !contains_naive(host, p)))
        .collect())
}
