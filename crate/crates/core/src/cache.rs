//! Bounded memo tables shared across threads.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::symfun::SymmetricPoly;

/// Default number of entries a memo table keeps before evicting.
pub const DEFAULT_CAPACITY: usize = 4096;

/// A FIFO-evicting map behind a read/write lock.
///
/// Concurrent callers may compute the same value twice; the first insert wins
/// and later inserts of the same key are dropped, so readers never observe two
/// different values for one key.
pub struct BoundedCache<K, V> {
    inner: RwLock<Inner<K, V>>,
}

struct Inner<K, V> {
    map: HashMap<K, Arc<V>>,
    order: VecDeque<K>,
    capacity: usize,
}

impl<K: Eq + Hash + Clone, V> BoundedCache<K, V> {
    pub fn with_capacity(capacity: usize) -> Self {
        BoundedCache {
            inner: RwLock::new(Inner { map: HashMap::new(), order: VecDeque::new(), capacity: capacity.max(1) }),
        }
    }

    pub fn get(&self, key: &K) -> Option<Arc<V>> {
        self.inner.read().expect("cache lock poisoned").map.get(key).cloned()
    }

    /// Inserts unless the key is already present; returns the stored value.
    pub fn insert(&self, key: K, value: V) -> Arc<V> {
        let mut guard = self.inner.write().expect("cache lock poisoned");
        if let Some(existing) = guard.map.get(&key) {
            return existing.clone();
        }
        while guard.map.len() >= guard.capacity {
            match guard.order.pop_front() {
                Some(old) => {
                    guard.map.remove(&old);
                }
                None => break,
            }
        }
        let value = Arc::new(value);
        guard.order.push_back(key.clone());
        guard.map.insert(key, value.clone());
        value
    }

    pub fn get_or_try_insert<E>(&self, key: K, compute: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let value = compute()?;
        Ok(self.insert(key, value))
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("cache lock poisoned").map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn set_capacity(&self, capacity: usize) {
        let mut guard = self.inner.write().expect("cache lock poisoned");
        guard.capacity = capacity.max(1);
        while guard.map.len() > guard.capacity {
            match guard.order.pop_front() {
                Some(old) => {
                    guard.map.remove(&old);
                }
                None => break,
            }
        }
    }

    pub fn clear(&self) {
        let mut guard = self.inner.write().expect("cache lock poisoned");
        guard.map.clear();
        guard.order.clear();
    }
}

/// Key of a Jack expansion: partition parts, parameter key, number of variables.
pub type JackKey = (Vec<u32>, String, usize);

/// The memo tables of one coefficient field.
pub struct FieldCaches<F> {
    pub jack: BoundedCache<JackKey, SymmetricPoly<F>>,
    /// Multivariate Laguerre and Jacobi polynomials keyed by a description
    /// of family, partition and parameters.
    pub orthogonal: BoundedCache<String, SymmetricPoly<F>>,
}

impl<F> Default for FieldCaches<F> {
    fn default() -> Self {
        FieldCaches {
            jack: BoundedCache::with_capacity(DEFAULT_CAPACITY),
            orthogonal: BoundedCache::with_capacity(DEFAULT_CAPACITY),
        }
    }
}
