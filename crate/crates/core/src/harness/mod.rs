//! Experiment orchestration on top of the two engines.

mod batch;
mod compare;
pub mod config;
pub mod export;
mod tune;

pub use batch::{run_batch, run_one, ExperimentPlan};
pub use compare::{compare, ComparisonCell, ComparisonReport, Winner};
pub use tune::{tune, tune_from, TuneResult, TuneScore, TuningGrid};

/// Environment variable holding the worker count for batch and tuning runs.
pub const WORKERS_ENV: &str = "VIGPSO_WORKERS";

/// Worker count from [`WORKERS_ENV`], else the number of available cores.
pub fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|n| *n > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

pub(crate) fn thread_pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count())
        .build()
        .expect("failed to build worker pool")
}
