//! Order-preserving data-parallel map.
//!
//! With the `parallel` feature (default) work runs on a rayon pool sized by
//! `jobs`; `jobs == 1` or a build without the feature takes the sequential
//! path. Results always come back in input order, so output never depends
//! on the worker count.

#[cfg(feature = "parallel")]
use std::sync::Arc;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Environment variable read by [`Executor::from_env`].
pub const JOBS_ENV: &str = "METRIC_LINES_JOBS";

#[derive(Clone)]
pub struct Executor {
    jobs: usize,
    #[cfg(feature = "parallel")]
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl Executor {
    /// `jobs == 0` means one worker per available core.
    pub fn new(jobs: usize) -> Executor {
        let jobs = if jobs == 0 { std::thread::available_parallelism().map_or(1, |n| n.get()) } else { jobs };
        #[cfg(feature = "parallel")]
        {
            let pool = (jobs > 1)
                .then(|| Arc::new(rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("rayon pool")));
            Executor { jobs, pool }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = jobs;
            Executor { jobs: 1 }
        }
    }

    pub fn sequential() -> Executor {
        Executor::new(1)
    }

    /// Reads `METRIC_LINES_JOBS`; unset or unparsable means all cores.
    pub fn from_env() -> Executor {
        let jobs = std::env::var(JOBS_ENV).ok().and_then(|v| v.parse().ok()).unwrap_or(0);
        Executor::new(jobs)
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.install(|| items.par_iter().map(f).collect());
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<U, F>(&self, range: std::ops::Range<u64>, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(u64) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.install(|| range.into_par_iter().map(f).collect());
        }
        range.map(f).collect()
    }
}

impl Default for Executor {
    fn default() -> Self {
        Executor::sequential()
    }
}

impl std::fmt::Debug for Executor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Executor").field("jobs", &self.jobs).finish()
    }
}
