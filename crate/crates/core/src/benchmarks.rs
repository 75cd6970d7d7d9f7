//! The eight benchmark functions, all minimized over `[-5, 5]^d`.
//!
//! Indexed sums and products (Sum Squares, Dixon-Price, Griewank) use the
//! 1-based index `i` of the textbook formulas.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::swarm::{Objective, SearchSpace};

pub const LOWER_BOUND: f64 = -5.0;
pub const UPPER_BOUND: f64 = 5.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Separability {
    Separable,
    PartiallySeparable,
    NonSeparable,
}

impl fmt::Display for Separability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Separability::Separable => "separable",
            Separability::PartiallySeparable => "partially_separable",
            Separability::NonSeparable => "non_separable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchmarkKind {
    Sphere,
    SumSquares,
    #[serde(rename = "schwefel_2_22")]
    Schwefel222,
    DixonPrice,
    Rastrigin,
    Rosenbrock,
    Griewank,
    Alpine,
}

impl BenchmarkKind {
    pub const ALL: [BenchmarkKind; 8] = [
        BenchmarkKind::Sphere,
        BenchmarkKind::SumSquares,
        BenchmarkKind::Schwefel222,
        BenchmarkKind::DixonPrice,
        BenchmarkKind::Rastrigin,
        BenchmarkKind::Rosenbrock,
        BenchmarkKind::Griewank,
        BenchmarkKind::Alpine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchmarkKind::Sphere => "sphere",
            BenchmarkKind::SumSquares => "sum_squares",
            BenchmarkKind::Schwefel222 => "schwefel_2_22",
            BenchmarkKind::DixonPrice => "dixon_price",
            BenchmarkKind::Rastrigin => "rastrigin",
            BenchmarkKind::Rosenbrock => "rosenbrock",
            BenchmarkKind::Griewank => "griewank",
            BenchmarkKind::Alpine => "alpine",
        }
    }

    pub fn separability(self) -> Separability {
        match self {
            BenchmarkKind::Sphere | BenchmarkKind::SumSquares | BenchmarkKind::Schwefel222 => {
                Separability::Separable
            }
            BenchmarkKind::DixonPrice | BenchmarkKind::Rastrigin => {
                Separability::PartiallySeparable
            }
            BenchmarkKind::Rosenbrock | BenchmarkKind::Griewank | BenchmarkKind::Alpine => {
                Separability::NonSeparable
            }
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            BenchmarkKind::Sphere => "sum x_i^2",
            BenchmarkKind::SumSquares => "sum i*x_i^2",
            BenchmarkKind::Schwefel222 => "sum |x_i| + prod |x_i|",
            BenchmarkKind::DixonPrice => "(x_1-1)^2 + sum_{i>=2} i*(2x_i^2 - x_{i-1})^2",
            BenchmarkKind::Rastrigin => "10n + sum [x_i^2 - 10cos(2*pi*x_i)]",
            BenchmarkKind::Rosenbrock => "sum_{i<n} [100(x_{i+1} - x_i^2)^2 + (1-x_i)^2]",
            BenchmarkKind::Griewank => "1 + sum x_i^2/4000 - prod cos(x_i/sqrt(i))",
            BenchmarkKind::Alpine => "sum |x_i sin(x_i) + 0.1x_i|",
        }
    }

    pub fn known_optimum_value(self) -> f64 {
        0.0
    }

    /// A global minimizer in `dim` dimensions.
    pub fn optimum_point(self, dim: usize) -> Vec<f64> {
        match self {
            BenchmarkKind::Rosenbrock => vec![1.0; dim],
            // x_i = 2^{-(2^i - 2) / 2^i}
            BenchmarkKind::DixonPrice => (1..=dim)
                .map(|i| {
                    let p = 2f64.powi(i as i32);
                    2f64.powf(-(p - 2.0) / p)
                })
                .collect(),
            _ => vec![0.0; dim],
        }
    }

    /// Evaluates without input validation; the engines' hot path.
    pub fn value(self, x: &[f64]) -> f64 {
        match self {
            BenchmarkKind::Sphere => x.iter().map(|v| v * v).sum(),
            BenchmarkKind::SumSquares => x
                .iter()
                .enumerate()
                .map(|(i, v)| (i + 1) as f64 * v * v)
                .sum(),
            BenchmarkKind::Schwefel222 => {
                let sum: f64 = x.iter().map(|v| v.abs()).sum();
                let prod: f64 = x.iter().map(|v| v.abs()).product();
                sum + prod
            }
            BenchmarkKind::DixonPrice => {
                let head = (x[0] - 1.0).powi(2);
                let tail: f64 = x
                    .windows(2)
                    .enumerate()
                    .map(|(k, w)| (k + 2) as f64 * (2.0 * w[1] * w[1] - w[0]).powi(2))
                    .sum();
                head + tail
            }
            BenchmarkKind::Rastrigin => {
                10.0 * x.len() as f64
                    + x.iter()
                        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos())
                        .sum::<f64>()
            }
            BenchmarkKind::Rosenbrock => x
                .windows(2)
                .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (1.0 - w[0]).powi(2))
                .sum(),
            BenchmarkKind::Griewank => {
                let sum: f64 = x.iter().map(|v| v * v / 4000.0).sum();
                let prod: f64 = x
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
                    .product();
                1.0 + sum - prod
            }
            BenchmarkKind::Alpine => x.iter().map(|v| (v * v.sin() + 0.1 * v).abs()).sum(),
        }
    }
}

impl fmt::Display for BenchmarkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchmarkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BenchmarkKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownFunction(s.to_string()))
    }
}

/// Checked evaluation by registry name.
pub fn evaluate(name: &str, x: &[f64]) -> Result<f64> {
    let kind: BenchmarkKind = name.parse()?;
    if x.is_empty() {
        return Err(Error::argument("benchmark input must be non-empty"));
    }
    if x.iter().any(|v| v.is_nan()) {
        return Err(Error::argument("benchmark input contains NaN"));
    }
    Ok(kind.value(x))
}

/// A benchmark bound to a dimension; implements [`Objective`].
#[derive(Clone, Debug)]
pub struct Benchmark {
    kind: BenchmarkKind,
    space: SearchSpace,
}

impl Benchmark {
    pub fn new(kind: BenchmarkKind, dim: usize) -> Result<Self> {
        Ok(Self {
            kind,
            space: SearchSpace::uniform(dim, LOWER_BOUND, UPPER_BOUND)?,
        })
    }

    pub fn by_name(name: &str, dim: usize) -> Result<Self> {
        Self::new(name.parse()?, dim)
    }

    pub fn kind(&self) -> BenchmarkKind {
        self.kind
    }
}

impl Objective for Benchmark {
    fn name(&self) -> &str {
        self.kind.name()
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        self.kind.value(x)
    }
}
