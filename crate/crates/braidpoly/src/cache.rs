use std::collections::HashMap;
use std::sync::RwLock;

use braidpoly_core::{CanonicalKey, LaurentPoly2, PolyCache};

/// Thread-safe memo table shared by parallel workers.
#[derive(Debug, Default)]
pub struct SharedCache {
    map: RwLock<HashMap<CanonicalKey, LaurentPoly2>>,
}

impl SharedCache {
    pub fn new() -> Self {
        Self::default()
    }
}

impl PolyCache for SharedCache {
    fn get(&self, key: &CanonicalKey) -> Option<LaurentPoly2> {
        self.map.read().expect("cache lock").get(key).cloned()
    }

    fn insert(&self, key: CanonicalKey, value: LaurentPoly2) {
        self.map
            .write()
            .expect("cache lock")
            .entry(key)
            .or_insert(value);
    }

    fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }
}
