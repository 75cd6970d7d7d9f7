use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vig::InteractionGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Pso,
    Vigpso,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Pso => "pso",
            Algorithm::Vigpso => "vigpso",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pso" => Ok(Algorithm::Pso),
            "vigpso" => Ok(Algorithm::Vigpso),
            other => Err(Error::argument(format!("unknown algorithm `{other}`"))),
        }
    }
}

/// Outcome of one seeded run.
///
/// `trace[t]` is the global best value after `t` iterations, so the trace has
/// `max_iterations + 1` entries and `final_value` equals its last entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub algorithm: Algorithm,
    pub function: String,
    pub dim: usize,
    pub seed: u64,
    pub trace: Vec<f64>,
    pub final_value: f64,
    pub final_position: Vec<f64>,
    pub wall_time_seconds: f64,
    #[serde(skip)]
    pub graph: Option<InteractionGraph>,
}
