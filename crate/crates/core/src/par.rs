//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the helpers dispatch to rayon; without it (or
//! when a caller asks for sequential execution) they run on the calling
//! thread. Results are identical either way: maps preserve index order and
//! `find_map_first` returns the earliest hit in iteration order.

/// Whether this build can run work on more than one thread.
pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}

/// Sets the global worker count. A no-op without the `parallel` feature or
/// once the pool has been initialised.
pub fn configure_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

/// Runs `f` on a dedicated single-thread pool when parallelism is compiled in.
pub fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    {
        match rayon::ThreadPoolBuilder::new().num_threads(1).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    f()
}

pub(crate) fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_range_with(true, n, f)
}

pub(crate) fn map_range_with<T, F>(parallel: bool, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

pub(crate) fn map_slice_with<I, T, F>(parallel: bool, items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// First `Some` in slice order.
pub(crate) fn find_map_first<I, T, F>(parallel: bool, items: &[I], f: F) -> Option<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.par_iter().find_map_first(f);
    }
    let _ = parallel;
    items.iter().find_map(f)
}
