//! Concurrent profile cache keyed by canonical form.
//!
//! Insert-if-absent semantics; two workers may compute the same profile
//! concurrently, which is harmless because profiles are value-identical
//! for isomorphic graphs.

use std::sync::Arc;

use crate::engine::SubtreeProfile;
use crate::graph::CanonicalForm;

#[cfg(feature = "parallel")]
pub struct ProfileCache {
    map: dashmap::DashMap<CanonicalForm, Arc<SubtreeProfile>>,
}

#[cfg(feature = "parallel")]
impl ProfileCache {
    pub fn new() -> Self {
        ProfileCache {
            map: dashmap::DashMap::new(),
        }
    }

    pub fn get(&self, key: &CanonicalForm) -> Option<Arc<SubtreeProfile>> {
        self.map.get(key).map(|entry| entry.clone())
    }

    pub fn insert(&self, key: CanonicalForm, value: Arc<SubtreeProfile>) {
        self.map.entry(key).or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }
}

#[cfg(not(feature = "parallel"))]
pub struct ProfileCache {
    map: std::sync::Mutex<std::collections::HashMap<CanonicalForm, Arc<SubtreeProfile>>>,
}

#[cfg(not(feature = "parallel"))]
impl ProfileCache {
    pub fn new() -> Self {
        ProfileCache {
            map: std::sync::Mutex::new(std::collections::HashMap::new()),
        }
    }

    pub fn get(&self, key: &CanonicalForm) -> Option<Arc<SubtreeProfile>> {
        self.map.lock().unwrap().get(key).cloned()
    }

    pub fn insert(&self, key: CanonicalForm, value: Arc<SubtreeProfile>) {
        self.map.lock().unwrap().entry(key).or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }
}

impl Default for ProfileCache {
    fn default() -> Self {
        Self::new()
    }
}
