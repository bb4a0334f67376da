use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;

use super::{count_avoiders, enumerate_avoiders, PatternSet, Permutation};
use crate::error::Result;

type Slot = Arc<OnceLock<Result<Arc<Vec<Permutation>>>>>;

/// Memoized `S_n(T)` lists, shared across threads.
///
/// Each key is populated at most once: concurrent requests for the same
/// `(n, T)` block on a single enumeration and then share its result.
#[derive(Default)]
pub struct AvoiderCache {
    slots: Mutex<HashMap<(usize, PatternSet), Slot>>,
}

impl AvoiderCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn avoiders(&self, n: usize, set: &PatternSet) -> Result<Arc<Vec<Permutation>>> {
        let slot = {
            let mut slots = self.slots.lock().expect("avoider cache poisoned");
            slots.entry((n, set.clone())).or_default().clone()
        };
        slot.get_or_init(|| enumerate_avoiders(n, set).map(Arc::new))
            .clone()
    }

    /// `|S_n(T ∪ {τ})|` from the cached `S_n(T)`. An empty `T` bypasses the
    /// cache, since `S_n(∅)` is all of `S_n`.
    pub fn count(&self, n: usize, set: &PatternSet, tau: Option<&Permutation>) -> Result<BigUint> {
        if set.is_empty() {
            return count_avoiders(n, set, tau);
        }
        let hosts = self.avoiders(n, set)?;
        let survivors = match tau {
            None => hosts.len(),
            Some(tau) => hosts.iter().filter(|h| !h.contains(tau)).count(),
        };
        Ok(BigUint::from(survivors))
    }

    pub fn len(&self) -> usize {
        self.slots.lock().expect("avoider cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
