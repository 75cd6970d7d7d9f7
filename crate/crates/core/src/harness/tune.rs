use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::batch::run_one;
use super::thread_pool;
use crate::benchmarks::Benchmark;
use crate::error::{Error, Result};
use crate::run::Algorithm;
use crate::vigpso::VigpsoConfig;

/// Candidate values for grid search. PSO only varies `omega`, `c1` and `c2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TuningGrid {
    pub omega_values: Vec<f64>,
    /// Used for both `c1` and `c2`.
    pub c_values: Vec<f64>,
    pub tau1_values: Vec<f64>,
    pub tau2_values: Vec<f64>,
    pub interval_values: Vec<usize>,
    pub tuning_iterations: usize,
    pub tuning_runs: usize,
}

impl Default for TuningGrid {
    fn default() -> Self {
        Self {
            omega_values: vec![0.4, 0.5, 0.6, 0.8],
            c_values: vec![1.0, 1.5, 2.0, 2.5],
            tau1_values: vec![0.3, 0.5, 0.7],
            tau2_values: vec![0.3, 0.5, 0.7],
            interval_values: vec![5, 10, 15],
            tuning_iterations: 100,
            tuning_runs: 5,
        }
    }
}

fn sorted_unique(values: &[f64], name: &str) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(Error::config(format!("tuning grid axis `{name}` is empty")));
    }
    if values.iter().any(|v| v.is_nan()) {
        return Err(Error::config(format!("tuning grid axis `{name}` contains NaN")));
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    v.dedup();
    Ok(v)
}

impl TuningGrid {
    /// Admissible combinations in ascending lexicographic order of
    /// (omega, c1, c2, tau1, tau2, interval); pairs with `tau2 > tau1` are
    /// skipped.
    pub fn combinations(&self, algorithm: Algorithm, template: &VigpsoConfig) -> Result<Vec<TuneScore>> {
        if self.tuning_iterations == 0 || self.tuning_runs == 0 {
            return Err(Error::config("tuning_iterations and tuning_runs must be positive"));
        }
        let omegas = sorted_unique(&self.omega_values, "omega_values")?;
        let cs = sorted_unique(&self.c_values, "c_values")?;
        let learn_axes = match algorithm {
            Algorithm::Pso => vec![(
                template.learn.tau1,
                template.learn.tau2,
                template.learn.update_interval,
            )],
            Algorithm::Vigpso => {
                let tau1s = sorted_unique(&self.tau1_values, "tau1_values")?;
                let tau2s = sorted_unique(&self.tau2_values, "tau2_values")?;
                let mut ks = self.interval_values.clone();
                if ks.is_empty() {
                    return Err(Error::config("tuning grid axis `interval_values` is empty"));
                }
                ks.sort_unstable();
                ks.dedup();
                let mut axes = Vec::new();
                for &tau1 in &tau1s {
                    for &tau2 in tau2s.iter().filter(|t| **t <= tau1) {
                        for &k in &ks {
                            axes.push((tau1, tau2, k));
                        }
                    }
                }
                axes
            }
        };
        let mut out = Vec::new();
        for &omega in &omegas {
            for &c1 in &cs {
                for &c2 in &cs {
                    for &(tau1, tau2, update_interval) in &learn_axes {
                        out.push(TuneScore {
                            omega,
                            c1,
                            c2,
                            tau1,
                            tau2,
                            update_interval,
                            mean_final: f64::NAN,
                        });
                    }
                }
            }
        }
        if out.is_empty() {
            return Err(Error::config("tuning grid has no admissible combination"));
        }
        Ok(out)
    }
}

/// One grid point and its mean final value over the tuning runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TuneScore {
    pub omega: f64,
    pub c1: f64,
    pub c2: f64,
    pub tau1: f64,
    pub tau2: f64,
    pub update_interval: usize,
    pub mean_final: f64,
}

impl TuneScore {
    fn apply(&self, template: &VigpsoConfig) -> VigpsoConfig {
        let mut cfg = template.clone();
        cfg.base.omega = self.omega;
        cfg.base.c1 = self.c1;
        cfg.base.c2 = self.c2;
        cfg.learn.tau1 = self.tau1;
        cfg.learn.tau2 = self.tau2;
        cfg.learn.update_interval = self.update_interval;
        cfg
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TuneResult {
    pub algorithm: Algorithm,
    pub function: String,
    pub dim: usize,
    /// Winning parameters on top of the template, keeping the template's
    /// iteration budget. For PSO only `best.base` is meaningful.
    pub best: VigpsoConfig,
    pub best_score: TuneScore,
    /// Every combination in evaluation order.
    pub table: Vec<TuneScore>,
}

/// Grid search starting from the default configuration.
pub fn tune(
    grid: &TuningGrid,
    algorithm: Algorithm,
    function: &str,
    dim: usize,
    seed: u64,
) -> Result<TuneResult> {
    tune_from(grid, &VigpsoConfig::default(), algorithm, function, dim, seed)
}

/// Grid search over `template`.
///
/// Each combination runs `tuning_runs` times for `tuning_iterations`
/// iterations with seeds `seed, seed + 1, ...`; the score is the mean final
/// value. The lowest score wins and ties go to the lexicographically
/// smallest (omega, c1, c2, tau1, tau2, interval).
pub fn tune_from(
    grid: &TuningGrid,
    template: &VigpsoConfig,
    algorithm: Algorithm,
    function: &str,
    dim: usize,
    seed: u64,
) -> Result<TuneResult> {
    let objective = Benchmark::by_name(function, dim)?;
    let mut short = template.clone();
    short.base.max_iterations = grid.tuning_iterations;
    let mut table = grid.combinations(algorithm, &short)?;

    let scores = thread_pool().install(|| {
        table
            .par_iter()
            .map(|point| {
                let cfg = point.apply(&short);
                let mut total = 0.0;
                for r in 0..grid.tuning_runs {
                    let run_seed = seed.wrapping_add(r as u64);
                    total += run_one(algorithm, &cfg.base, &cfg, &objective, run_seed)?.final_value;
                }
                Ok(total / grid.tuning_runs as f64)
            })
            .collect::<Result<Vec<f64>>>()
    })?;
    for (point, score) in table.iter_mut().zip(scores) {
        point.mean_final = score;
    }

    let mut best = 0;
    for (i, point) in table.iter().enumerate().skip(1) {
        if point.mean_final < table[best].mean_final {
            best = i;
        }
    }
    let best_score = table[best].clone();
    Ok(TuneResult {
        algorithm,
        function: function.to_string(),
        dim,
        best: best_score.apply(template),
        best_score,
        table,
    })
}
