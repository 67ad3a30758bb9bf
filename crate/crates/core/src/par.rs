//! Data-parallel map with a sequential fallback.
//!
//! [`map`] runs on the rayon global pool when the `parallel` feature is on and
//! degrades to [`map_seq`] otherwise. Output order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    map_seq(items, f)
}

/// Whether [`map`] uses worker threads.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
