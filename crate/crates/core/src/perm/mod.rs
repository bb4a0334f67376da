//! Permutations in one-line notation, classical pattern containment, the
//! dihedral symmetries of the permutation diagram, and enumeration of
//! avoidance classes. Everything else in the crate is checked against the
//! enumerators in this module.

mod cache;
mod enumerate;
mod matching;
mod symmetry;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use cache::AvoiderCache;
pub use enumerate::{
    count_avoiders, enumerate_avoiders, naive_enumerate, MAX_ENUMERATION_LENGTH, MAX_MATERIALIZED,
    MAX_NAIVE_LENGTH,
};
pub use matching::contains_naive;
pub use symmetry::{orbit, symmetry_images, Symmetry};

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Values are stored as `u8`, so lengths up to 255 are representable. The
/// derived ordering is lexicographic on the value sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Builds a permutation, checking that `values` is exactly `{1, ..., n}`.
    pub fn new(values: Vec<u8>) -> Result<Self> {
        let text = values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        Self::validate(&values).map_err(|reason| Error::MalformedPermutation { text, reason })?;
        Ok(Permutation(values))
    }

    fn validate(values: &[u8]) -> std::result::Result<(), String> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(format!("value {v} out of range 1..={n}"));
            }
            if seen[idx] {
                let missing = (1..=n).find(|&m| !seen[m] && !values.contains(&(m as u8)));
                return Err(match missing {
                    Some(m) => format!("value {v} repeated (value {m} missing)"),
                    None => format!("value {v} repeated"),
                });
            }
            seen[idx] = true;
        }
        Ok(())
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Self::validate(&values).is_ok(), "{values:?}");
        Permutation(values)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    /// `(1, 2, ..., n)`.
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation((1..=n as u8).collect())
    }

    /// `(n, n-1, ..., 1)`.
    pub fn decreasing(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation((1..=n as u8).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn is_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n1 = self.0.len() as u8 + 1;
        Permutation(self.0.iter().map(|&v| n1 - v).collect())
    }

    /// The permutation `σ` with `σ(τ(i)) = i`.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    /// Whether some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        matching::PatternMatcher::new(pattern.values()).occurs_in(&self.0)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn avoids_all(&self, set: &PatternSet) -> bool {
        set.iter().all(|p| !self.contains(p))
    }

    /// Standardizes a sequence of distinct values to a permutation.
    pub fn standardize(values: &[u8]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut out = vec![0u8; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = rank as u8 + 1;
        }
        Permutation(out)
    }
}

impl fmt::Display for Permutation {
    /// Digit string when every value is a single digit, space separated
    /// otherwise. Both forms are accepted by [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a bare digit string (length at most 9) or integers separated
    /// by whitespace and/or commas.
    fn from_str(text: &str) -> Result<Self> {
        let malformed = |reason: String| Error::MalformedPermutation {
            text: text.to_string(),
            reason,
        };
        let trimmed = text.trim();
        let separated = trimmed.contains(|c: char| c.is_whitespace() || c == ',');
        let mut values = Vec::new();
        if separated {
            for token in trimmed.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                let v: u8 = token
                    .parse()
                    .map_err(|_| malformed(format!("`{token}` is not a value in 1..=255")))?;
                values.push(v);
            }
        } else {
            if trimmed.len() > 9 {
                return Err(malformed(
                    "digit strings are limited to length 9; separate longer permutations with spaces"
                        .into(),
                ));
            }
            for c in trimmed.chars() {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| malformed(format!("`{c}` is not a digit")))?;
                values.push(d as u8);
            }
        }
        Self::validate(&values).map_err(malformed)?;
        Ok(Permutation(values))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a permutation, panicking on malformed input. For literals in tests
/// and tables.
pub fn perm(text: &str) -> Permutation {
    text.parse()
        .unwrap_or_else(|e| panic!("bad permutation literal: {e}"))
}

/// A deduplicated set of patterns, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PatternSet(BTreeSet<Permutation>);

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Permutation>>(members: I) -> Self {
        PatternSet(members.into_iter().collect())
    }

    pub fn empty() -> Self {
        PatternSet(BTreeSet::new())
    }

    /// All six permutations of length 3.
    pub fn s3() -> Self {
        PatternSet::new(all_permutations(3))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.0.iter()
    }

    pub fn contains_member(&self, p: &Permutation) -> bool {
        self.0.contains(p)
    }

    pub fn with(&self, p: Permutation) -> Self {
        let mut set = self.0.clone();
        set.insert(p);
        PatternSet(set)
    }

    pub fn map(&self, f: impl Fn(&Permutation) -> Permutation) -> Self {
        PatternSet(self.0.iter().map(f).collect())
    }

    pub fn is_subset_of_s3(&self) -> bool {
        self.0.iter().all(|p| p.len() == 3)
    }

    /// Whether some member of the set occurs in `p`.
    pub fn is_contained_in(&self, p: &Permutation) -> bool {
        self.0.iter().any(|q| p.contains(q))
    }

    /// Pairs `(a, b)` of distinct members where `a` contains `b`. Such a set
    /// is not a minimal basis; `a` is redundant.
    pub fn redundant_members(&self) -> Vec<(Permutation, Permutation)> {
        let mut out = Vec::new();
        for a in &self.0 {
            for b in &self.0 {
                if a != b && a.contains(b) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    /// Members as display strings, in order.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|p| p.to_string()).collect()
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_strings().join(","))
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet{self}")
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated patterns, e.g. `123,132`. Each pattern is a digit
    /// string; the empty string is the empty set.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim().trim_start_matches('{').trim_end_matches('}');
        text.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<BTreeSet<_>>>()
            .map(PatternSet)
    }
}

impl FromIterator<Permutation> for PatternSet {
    fn from_iter<I: IntoIterator<Item = Permutation>>(iter: I) -> Self {
        PatternSet::new(iter)
    }
}

impl Serialize for PatternSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for PatternSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(PatternSet(BTreeSet::deserialize(d)?))
    }
}

/// Parses a comma-separated pattern set literal, panicking on error.
pub fn pset(text: &str) -> PatternSet {
    text.parse()
        .unwrap_or_else(|e| panic!("bad pattern set literal: {e}"))
}

/// All permutations of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![Permutation(current.clone())];
    while next_permutation(&mut current) {
        out.push(Permutation(current.clone()));
    }
    out
}

/// Advances `values` to its lexicographic successor; false when it was the last.
pub(crate) fn next_permutation(values: &mut [u8]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| values[i] < values[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| values[j] > values[i]).unwrap();
    values.swap(i, j);
    values[i + 1..].reverse();
    true
}

/// All subsets of S3, ordered by size and then lexicographically.
pub fn subsets_of_s3() -> Vec<PatternSet> {
    let s3 = all_permutations(3);
    let mut out: Vec<PatternSet> = (0u32..64)
        .map(|mask| {
            s3.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect();
    out.sort_by(|a: &PatternSet, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
