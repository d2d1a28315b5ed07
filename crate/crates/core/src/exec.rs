//! Sequential / data-parallel execution switch.
//!
//! With the `parallel` feature (on by default) work is spread over the rayon
//! global pool; without it every entry point runs on the calling thread and
//! [`Execution::Parallel`] degrades to sequential.

/// How to run a data-parallel fold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Whether this call will actually fan out: needs the feature, the
    /// `Parallel` strategy and more than one worker thread.
    pub fn is_parallel(self) -> bool {
        #[cfg(feature = "parallel")]
        {
            self == Execution::Parallel && rayon::current_num_threads() > 1
        }
        #[cfg(not(feature = "parallel"))]
        {
            false
        }
    }
}

/// Below this many items the fan-out costs more than it saves.
const MIN_PARALLEL_ITEMS: u64 = 256;

/// `(0..len).map(f).collect()`, fanned out when the range is large enough.
pub(crate) fn map_range<T, F>(len: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if len >= MIN_PARALLEL_ITEMS && Execution::Parallel.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = MIN_PARALLEL_ITEMS;
    (0..len).map(f).collect()
}

/// Order-preserving map over a slice.
pub fn map_slice<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Folds every item into an accumulator, merging per-worker partials.
/// `merge` must be associative and commutative for the result to be
/// schedule-independent.
pub fn fold_items<T, A, Init, Step, Merge>(
    exec: Execution,
    items: &[T],
    init: Init,
    step: Step,
    merge: Merge,
) -> A
where
    T: Sync,
    A: Send,
    Init: Fn() -> A + Sync + Send,
    Step: Fn(A, &T) -> A + Sync + Send,
    Merge: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().fold(&init, &step).reduce(&init, &merge);
    }
    let _ = (exec, &merge);
    items.iter().fold(init(), step)
}

/// Runs `f` on a dedicated pool of `threads` workers, so the parallel paths
/// are exercised even on a single-core host. Without the feature this just
/// calls `f`.
#[doc(hidden)]
pub fn with_workers<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}
