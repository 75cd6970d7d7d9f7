use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::run::{Algorithm, RunResult};
use crate::stats::{mann_whitney_u, summarize, LowerSample, MannWhitneyResult, SampleSummary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Winner {
    #[serde(rename = "PSO")]
    Pso,
    #[serde(rename = "VIGPSO")]
    Vigpso,
    #[serde(rename = "--")]
    None,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::Pso => "PSO",
            Winner::Vigpso => "VIGPSO",
            Winner::None => "--",
        })
    }
}

/// One (function, dim) row. The test takes the PSO sample first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonCell {
    pub function: String,
    pub dim: usize,
    pub pso_summary: SampleSummary,
    pub vigpso_summary: SampleSummary,
    pub test: MannWhitneyResult,
    pub winner: Winner,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub cells: Vec<ComparisonCell>,
}

impl ComparisonReport {
    pub fn cell(&self, function: &str, dim: usize) -> Option<&ComparisonCell> {
        self.cells
            .iter()
            .find(|c| c.function == function && c.dim == dim)
    }

    /// Fixed-width table with p-values rounded to five decimals.
    pub fn format_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<14} {:>5} {:>12} {:>12} {:>12} {:>12} {:>9} {:>8}",
            "function", "dim", "pso_median", "vig_median", "pso_mean", "vig_mean", "p-value", "lower"
        );
        for c in &self.cells {
            let _ = writeln!(
                out,
                "{:<14} {:>5} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e} {:>9.5} {:>8}",
                c.function,
                c.dim,
                c.pso_summary.median,
                c.vigpso_summary.median,
                c.pso_summary.mean,
                c.vigpso_summary.mean,
                c.test.p_value,
                c.winner
            );
        }
        out
    }
}

/// Summaries and a Mann-Whitney verdict for every (function, dim) present.
pub fn compare(results: &[RunResult]) -> Result<ComparisonReport> {
    let mut cells: BTreeMap<(&str, usize), (Vec<f64>, Vec<f64>)> = BTreeMap::new();
    for r in results {
        let entry = cells.entry((r.function.as_str(), r.dim)).or_default();
        match r.algorithm {
            Algorithm::Pso => entry.0.push(r.final_value),
            Algorithm::Vigpso => entry.1.push(r.final_value),
        }
    }
    if cells.is_empty() {
        return Err(Error::argument("no results to compare"));
    }
    let mut out = Vec::with_capacity(cells.len());
    for ((function, dim), (pso, vig)) in cells {
        for (algorithm, sample) in [(Algorithm::Pso, &pso), (Algorithm::Vigpso, &vig)] {
            if sample.len() < 2 {
                return Err(Error::MissingCell {
                    algorithm: algorithm.to_string(),
                    function: function.to_string(),
                    dim,
                    reason: format!("need at least 2 runs, found {}", sample.len()),
                });
            }
        }
        let test = mann_whitney_u(&pso, &vig)?;
        let winner = match test.lower {
            LowerSample::First => Winner::Pso,
            LowerSample::Second => Winner::Vigpso,
            LowerSample::None => Winner::None,
        };
        out.push(ComparisonCell {
            function: function.to_string(),
            dim,
            pso_summary: summarize(&pso)?,
            vigpso_summary: summarize(&vig)?,
            test,
            winner,
        });
    }
    Ok(ComparisonReport { cells: out })
}
