//! Shared domain types: the search box, the objective abstraction and the
//! per-run swarm state.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Axis-aligned box `[lower_i, upper_i]` over `dim` decision variables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::argument("search space needs at least one dimension"));
        }
        if lower.len() != upper.len() {
            return Err(Error::argument(format!(
                "bound length mismatch: {} lower vs {} upper",
                lower.len(),
                upper.len()
            )));
        }
        if let Some(i) = (0..lower.len()).find(|&i| !(lower[i] < upper[i])) {
            return Err(Error::argument(format!(
                "dimension {i}: lower {} must be below upper {}",
                lower[i], upper[i]
            )));
        }
        Ok(Self { lower, upper })
    }

    /// Same bounds on every dimension.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| *lo <= *v && *v <= *hi)
    }

    /// Half of the widest dimension's range.
    pub fn half_range(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| (hi - lo) / 2.0)
            .fold(0.0, f64::max)
    }
}

/// A function to minimize over a [`SearchSpace`].
///
/// `evaluate` must be deterministic and total on the box; engines call it
/// from many runs at once, hence `Sync`.
pub trait Objective: Sync {
    fn name(&self) -> &str;
    fn space(&self) -> &SearchSpace;
    fn evaluate(&self, x: &[f64]) -> f64;
}

/// Wraps a closure as an [`Objective`].
pub struct FnObjective<F> {
    name: String,
    space: SearchSpace,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    pub fn new(name: impl Into<String>, space: SearchSpace, f: F) -> Self {
        Self {
            name: name.into(),
            space,
            f,
        }
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }
}

/// Dense row-major matrix; rows are particles, columns are dimensions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::argument("ragged rows"));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Element-wise `self - other`.
    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::argument(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }
}

/// How initial velocities are drawn.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VelocityInit {
    /// Uniform in `[-v_clamp, v_clamp]`.
    #[default]
    Uniform,
    Zero,
}

/// Everything one run mutates.
#[derive(Clone, Debug, PartialEq)]
pub struct SwarmState {
    pub positions: Matrix,
    pub velocities: Matrix,
    pub pbest_pos: Matrix,
    pub pbest_val: Vec<f64>,
    pub gbest_pos: Vec<f64>,
    pub gbest_val: f64,
    pub iteration: usize,
}

impl SwarmState {
    pub fn swarm_size(&self) -> usize {
        self.positions.rows()
    }

    pub fn dim(&self) -> usize {
        self.positions.cols()
    }

    /// Offers particle `i`'s current position as a new personal and global
    /// best. Both comparisons are strict.
    #[inline]
    pub(crate) fn record(&mut self, i: usize, value: f64) {
        if value < self.pbest_val[i] {
            self.pbest_val[i] = value;
            self.pbest_pos.row_mut(i).copy_from_slice(self.positions.row(i));
            if value < self.gbest_val {
                self.gbest_val = value;
                self.gbest_pos.copy_from_slice(self.positions.row(i));
            }
        }
    }
}

/// Draws the initial swarm.
///
/// Draw order: for each particle, all position coordinates, then all
/// velocity coordinates (skipped for [`VelocityInit::Zero`]).
pub fn init_swarm(
    objective: &dyn Objective,
    swarm_size: usize,
    v_clamp: f64,
    velocity_init: VelocityInit,
    rng: &mut RngStream,
) -> Result<SwarmState> {
    if swarm_size < 2 {
        return Err(Error::config(format!(
            "swarm_size must be at least 2, got {swarm_size}"
        )));
    }
    if !(v_clamp > 0.0) {
        return Err(Error::config(format!("v_clamp must be positive, got {v_clamp}")));
    }
    let space = objective.space();
    let dim = space.dim();
    let mut positions = Matrix::zeros(swarm_size, dim);
    let mut velocities = Matrix::zeros(swarm_size, dim);
    for i in 0..swarm_size {
        let row = positions.row_mut(i);
        for (j, x) in row.iter_mut().enumerate() {
            *x = rng.uniform_unchecked(space.lower()[j], space.upper()[j]);
        }
        if velocity_init == VelocityInit::Uniform {
            for v in velocities.row_mut(i) {
                *v = rng.uniform_unchecked(-v_clamp, v_clamp);
            }
        }
    }

    let pbest_val: Vec<f64> = (0..swarm_size)
        .map(|i| objective.evaluate(positions.row(i)))
        .collect();
    let mut best = 0;
    for i in 1..swarm_size {
        if pbest_val[i] < pbest_val[best] {
            best = i;
        }
    }
    Ok(SwarmState {
        pbest_pos: positions.clone(),
        gbest_pos: positions.row(best).to_vec(),
        gbest_val: pbest_val[best],
        pbest_val,
        positions,
        velocities,
        iteration: 0,
    })
}
