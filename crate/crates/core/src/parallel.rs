//! Data-parallel execution of independent, indexed work items.
//!
//! Everything random in this crate derives a per-index stream, so results
//! are collected by index and aggregates never depend on scheduling. With
//! the `parallel` feature disabled (or `jobs == 1`) the same closures run
//! sequentially and produce bit-identical output.

/// Thread count request; `Auto` defers to the rayon default.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Jobs {
    Auto,
    Count(usize),
}

impl Jobs {
    pub fn from_flag(jobs: usize) -> Self {
        if jobs == 0 {
            Jobs::Auto
        } else {
            Jobs::Count(jobs)
        }
    }
}

#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(count: usize, jobs: Jobs, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    match jobs {
        Jobs::Count(1) => (0..count).map(f).collect(),
        Jobs::Auto => (0..count).into_par_iter().map(f).collect(),
        Jobs::Count(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("failed to build thread pool");
            pool.install(|| (0..count).into_par_iter().map(f).collect())
        }
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(count: usize, _jobs: Jobs, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).map(f).collect()
}
