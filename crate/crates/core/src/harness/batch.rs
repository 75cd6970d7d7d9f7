use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::thread_pool;
use crate::benchmarks::{Benchmark, BenchmarkKind};
use crate::error::{Error, Result};
use crate::pso::{pso_run, PsoConfig};
use crate::run::{Algorithm, RunResult};
use crate::vigpso::{vigpso_run, VigpsoConfig};

/// A grid of (function, dim) cells, each run `runs` times by both engines.
///
/// Run `r` of either engine uses seed `base_seed + r`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentPlan {
    pub functions: Vec<String>,
    pub dimensions: Vec<usize>,
    pub runs: usize,
    pub base_seed: u64,
    pub pso_config: PsoConfig,
    pub vigpso_config: VigpsoConfig,
    /// Record every `trace_stride`-th gbest value on export.
    pub trace_stride: usize,
    /// Keep the final interaction graph of every VIGPSO run.
    #[serde(default)]
    pub keep_graphs: bool,
}

impl ExperimentPlan {
    /// One cell with the desk-scale protocol defaults: 100 runs (20 at
    /// d >= 1000) and trace stride 1 (10 at d >= 1000).
    pub fn protocol(function: &str, dim: usize, base_seed: u64) -> Self {
        let large = dim >= 1000;
        Self {
            functions: vec![function.to_string()],
            dimensions: vec![dim],
            runs: if large { 20 } else { 100 },
            base_seed,
            pso_config: PsoConfig::default(),
            vigpso_config: VigpsoConfig::default(),
            trace_stride: if large { 10 } else { 1 },
            keep_graphs: false,
        }
    }

    pub fn validate(&self) -> Result<Vec<BenchmarkKind>> {
        let kinds = self
            .functions
            .iter()
            .map(|f| f.parse::<BenchmarkKind>())
            .collect::<Result<Vec<_>>>()?;
        if kinds.is_empty() || self.dimensions.is_empty() {
            return Err(Error::config("plan needs at least one function and one dimension"));
        }
        if self.dimensions.contains(&0) {
            return Err(Error::config("dimensions must be positive"));
        }
        if self.runs == 0 {
            return Err(Error::config("runs must be positive"));
        }
        if self.trace_stride == 0 {
            return Err(Error::config("trace_stride must be positive"));
        }
        self.pso_config.validate()?;
        self.vigpso_config.validate()?;
        Ok(kinds)
    }
}

/// Runs one engine once.
pub fn run_one(
    algorithm: Algorithm,
    pso: &PsoConfig,
    vigpso: &VigpsoConfig,
    objective: &Benchmark,
    seed: u64,
) -> Result<RunResult> {
    match algorithm {
        Algorithm::Pso => pso_run(pso, objective, seed),
        Algorithm::Vigpso => vigpso_run(vigpso, objective, seed),
    }
}

/// Executes every run of the plan across the worker pool.
///
/// The result is sorted by (algorithm, function, dim, seed) and does not
/// depend on the number of workers.
pub fn run_batch(plan: &ExperimentPlan) -> Result<Vec<RunResult>> {
    let kinds = plan.validate()?;
    let mut jobs = Vec::new();
    for &kind in &kinds {
        for &dim in &plan.dimensions {
            for algorithm in [Algorithm::Pso, Algorithm::Vigpso] {
                for r in 0..plan.runs {
                    jobs.push((algorithm, kind, dim, plan.base_seed.wrapping_add(r as u64)));
                }
            }
        }
    }
    let mut results = thread_pool().install(|| {
        jobs.par_iter()
            .map(|&(algorithm, kind, dim, seed)| {
                let objective = Benchmark::new(kind, dim)?;
                let mut result =
                    run_one(algorithm, &plan.pso_config, &plan.vigpso_config, &objective, seed)?;
                if !plan.keep_graphs {
                    result.graph = None;
                }
                Ok(result)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    results.sort_by(|a, b| {
        (a.algorithm, &a.function, a.dim, a.seed).cmp(&(b.algorithm, &b.function, b.dim, b.seed))
    });
    Ok(results)
}
