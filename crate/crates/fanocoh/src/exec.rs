//! Thin switch between rayon-parallel and sequential execution.
//!
//! Every data-parallel loop in the crate goes through [`try_map`], so a build
//! with `--no-default-features` is fully sequential and produces identical
//! results (order is preserved either way; reductions downstream are
//! order-independent merges into ordered maps).

use crate::error::Result;

#[cfg(feature = "parallel")]
pub(crate) fn try_map<T, U, F>(items: Vec<T>, f: F) -> Result<Vec<U>>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Result<U> + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_map<T, U, F>(items: Vec<T>, f: F) -> Result<Vec<U>>
where
    F: Fn(T) -> Result<U>,
{
    items.into_iter().map(f).collect()
}

/// Caps the worker pool at `jobs` threads. Returns `true` if the cap took
/// effect; `false` when the build is sequential or a pool already exists.
pub fn set_parallelism(jobs: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        false
    }
}
