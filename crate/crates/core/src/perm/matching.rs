//! Backtracking occurrence search.
//!
//! Pattern entries are matched left to right. Each new host value must sit
//! strictly between the host values already matched to the pattern entries
//! that are its nearest smaller and nearest larger neighbours among the
//! earlier entries, which prunes most branches immediately.

use super::Permutation;

pub(crate) struct PatternMatcher<'p> {
    pattern: &'p [u8],
    /// Earlier pattern index holding the largest value below `pattern[j]`.
    below: Vec<Option<usize>>,
    /// Earlier pattern index holding the smallest value above `pattern[j]`.
    above: Vec<Option<usize>>,
}

const STACK_SLOTS: usize = 32;

impl<'p> PatternMatcher<'p> {
    pub(crate) fn new(pattern: &'p [u8]) -> Self {
        let mut below = Vec::with_capacity(pattern.len());
        let mut above = Vec::with_capacity(pattern.len());
        for (j, &v) in pattern.iter().enumerate() {
            let earlier = &pattern[..j];
            below.push(
                (0..j)
                    .filter(|&i| earlier[i] < v)
                    .max_by_key(|&i| earlier[i]),
            );
            above.push(
                (0..j)
                    .filter(|&i| earlier[i] > v)
                    .min_by_key(|&i| earlier[i]),
            );
        }
        PatternMatcher {
            pattern,
            below,
            above,
        }
    }

    /// Any occurrence in `host`, a sequence of distinct values.
    pub(crate) fn occurs_in(&self, host: &[u8]) -> bool {
        self.run(host, false)
    }

    /// An occurrence whose last entry is the last entry of `host`. Used to
    /// test prefix extensions: a prefix that avoided the pattern contains it
    /// after appending a value only through an occurrence ending there.
    pub(crate) fn occurs_ending_at_last(&self, host: &[u8]) -> bool {
        self.run(host, true)
    }

    fn run(&self, host: &[u8], anchored: bool) -> bool {
        let k = self.pattern.len();
        if k == 0 {
            return !anchored;
        }
        if k > host.len() {
            return false;
        }
        if k <= STACK_SLOTS {
            let mut slots = [0usize; STACK_SLOTS];
            self.extend(host, &mut slots[..k], 0, 0, anchored)
        } else {
            let mut slots = vec![0usize; k];
            self.extend(host, &mut slots, 0, 0, anchored)
        }
    }

    fn extend(
        &self,
        host: &[u8],
        slots: &mut [usize],
        j: usize,
        start: usize,
        anchored: bool,
    ) -> bool {
        let k = self.pattern.len();
        if j == k {
            return true;
        }
        let n = host.len();
        let lo = self.below[j].map(|i| host[slots[i]]);
        let hi = self.above[j].map(|i| host[slots[i]]);
        let last = n - (k - j);
        let first = if anchored && j == k - 1 { n - 1 } else { start };
        for p in first..=last {
            let v = host[p];
            if lo.is_some_and(|l| v < l) || hi.is_some_and(|h| v > h) {
                continue;
            }
            slots[j] = p;
            if self.extend(host, slots, j + 1, p + 1, anchored) {
                return true;
            }
        }
        false
    }
}

/// Reference containment test: standardize every `k`-subsequence of the
/// host and compare. Exponential; meant for cross-checking on short hosts.
pub fn contains_naive(host: &Permutation, pattern: &Permutation) -> bool {
    let (n, k) = (host.len(), pattern.len());
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let values = host.values();
    loop {
        let chosen: Vec<u8> = idx.iter().map(|&i| values[i]).collect();
        if Permutation::standardize(&chosen) == *pattern {
            return true;
        }
        // next k-combination of 0..n
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
