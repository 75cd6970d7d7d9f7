//! Variable interaction graph learned from particle movements.
//!
//! Edge weights are absolute Pearson correlations between the movements of two
//! dimensions across the swarm. Correlations above `tau1` set the edge,
//! correlations below `tau2` remove it, and anything in between leaves the
//! current weight alone.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::swarm::Matrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VigLearnConfig {
    pub tau1: f64,
    pub tau2: f64,
    pub update_interval: usize,
}

impl Default for VigLearnConfig {
    fn default() -> Self {
        Self {
            tau1: 0.5,
            tau2: 0.3,
            update_interval: 10,
        }
    }
}

impl VigLearnConfig {
    /// `tau1 >= 1` is accepted and disables edge creation entirely.
    pub fn validate(&self) -> Result<()> {
        if !(self.tau2 > 0.0 && self.tau2 < 1.0) {
            return Err(Error::config(format!("tau2 must lie in (0, 1), got {}", self.tau2)));
        }
        if !(self.tau1 >= self.tau2) || !self.tau1.is_finite() {
            return Err(Error::config(format!(
                "tau1 ({}) must be finite and at least tau2 ({})",
                self.tau1, self.tau2
            )));
        }
        if self.update_interval == 0 {
            return Err(Error::config("update_interval must be positive"));
        }
        Ok(())
    }
}

/// Symmetric `dim x dim` weight matrix with zero diagonal and weights in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InteractionGraph {
    dim: usize,
    weights: Vec<f64>,
}

impl InteractionGraph {
    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            weights: vec![0.0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[i * self.dim + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_edge(&mut self, i: usize, j: usize, weight: f64) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::argument(format!(
                "edge ({i}, {j}) out of range for dim {}",
                self.dim
            )));
        }
        if i == j && weight != 0.0 {
            return Err(Error::argument("diagonal weights must stay zero"));
        }
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::argument(format!("weight {weight} outside [0, 1]")));
        }
        self.put(i, j, weight);
        Ok(())
    }

    #[inline]
    fn put(&mut self, i: usize, j: usize, weight: f64) {
        self.weights[i * self.dim + j] = weight;
        self.weights[j * self.dim + i] = weight;
    }

    pub fn row(&self, d: usize) -> &[f64] {
        &self.weights[d * self.dim..(d + 1) * self.dim]
    }

    /// Every `(j, weight)` with positive weight in row `d`, ascending in `j`.
    pub fn neighbors(&self, d: usize) -> Result<Vec<(usize, f64)>> {
        if d >= self.dim {
            return Err(Error::argument(format!(
                "dimension {d} out of range for dim {}",
                self.dim
            )));
        }
        Ok(positive_entries(self.row(d)))
    }

    /// Neighbor lists for every dimension.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        (0..self.dim).map(|d| positive_entries(self.row(d))).collect()
    }

    /// `(i, j, weight)` for `i < j` and positive weight.
    pub fn edges(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let w = self.weight(i, j);
                if w > 0.0 {
                    out.push((i, j, w));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn is_well_formed(&self) -> bool {
        (0..self.dim).all(|i| {
            self.weight(i, i) == 0.0
                && (0..self.dim).all(|j| {
                    let w = self.weight(i, j);
                    w == self.weight(j, i) && (0.0..=1.0).contains(&w)
                })
        })
    }
}

fn positive_entries(row: &[f64]) -> Vec<(usize, f64)> {
    row.iter()
        .enumerate()
        .filter(|(_, w)| **w > 0.0)
        .map(|(j, w)| (j, *w))
        .collect()
}

/// Mean-centered copy of a sample plus its sum of squares. `None` marks a
/// constant sample.
struct Centered {
    values: Vec<f64>,
    sum_sq: f64,
}

impl Centered {
    fn new(xs: impl Iterator<Item = f64> + Clone) -> Option<Self> {
        let mut it = xs.clone();
        let first = it.next()?;
        if it.all(|x| x == first) {
            return None;
        }
        let n = xs.clone().count() as f64;
        let mean = xs.clone().sum::<f64>() / n;
        let values: Vec<f64> = xs.map(|x| x - mean).collect();
        let sum_sq = values.iter().map(|x| x * x).sum();
        Some(Self { values, sum_sq })
    }

    fn correlation(&self, other: &Centered) -> f64 {
        let cross: f64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .sum();
        (cross / (self.sum_sq * other.sum_sq).sqrt()).clamp(-1.0, 1.0)
    }
}

/// Pearson correlation; 0 when either sample is constant.
pub fn pearson(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::argument(format!(
            "length mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    if a.len() < 2 {
        return Err(Error::argument("pearson needs at least two observations"));
    }
    match (
        Centered::new(a.iter().copied()),
        Centered::new(b.iter().copied()),
    ) {
        (Some(x), Some(y)) => Ok(x.correlation(&y)),
        _ => Ok(0.0),
    }
}

/// Applies one learning pass from a movement matrix (`S` particles by `d`
/// dimensions).
pub fn update_graph(
    graph: &mut InteractionGraph,
    delta_x: &Matrix,
    config: &VigLearnConfig,
) -> Result<()> {
    if delta_x.cols() != graph.dim() {
        return Err(Error::argument(format!(
            "movement matrix has {} columns, graph has dim {}",
            delta_x.cols(),
            graph.dim()
        )));
    }
    if delta_x.rows() < 2 {
        return Err(Error::argument("need movements from at least two particles"));
    }
    let columns: Vec<Option<Centered>> = (0..delta_x.cols())
        .map(|j| Centered::new((0..delta_x.rows()).map(move |i| delta_x.get(i, j))))
        .collect();
    for i in 0..graph.dim() {
        for j in i + 1..graph.dim() {
            let rho = match (&columns[i], &columns[j]) {
                (Some(a), Some(b)) => a.correlation(b).abs(),
                _ => 0.0,
            };
            if rho > config.tau1 {
                graph.put(i, j, rho);
            } else if rho < config.tau2 {
                graph.put(i, j, 0.0);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn learn(tau1: f64, tau2: f64) -> VigLearnConfig {
        VigLearnConfig {
            tau1,
            tau2,
            update_interval: 1,
        }
    }

    #[test]
    fn pearson_examples() {
        assert!((pearson(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]).unwrap() - 1.0).abs() < 1e-15);
        assert!((pearson(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap() + 1.0).abs() < 1e-15);
        assert_eq!(pearson(&[1.0, 2.0, 3.0], &[5.0, 5.0, 5.0]).unwrap(), 0.0);
    }

    #[test]
    fn pearson_errors() {
        assert!(pearson(&[1.0, 2.0], &[1.0]).is_err());
        assert!(pearson(&[1.0], &[1.0]).is_err());
    }

    #[test]
    fn constant_column_with_inexact_mean_is_zero_variance() {
        // 0.1 * 3 / 3 != 0.1 in floating point
        assert_eq!(pearson(&[0.1, 0.1, 0.1], &[1.0, 2.0, 4.0]).unwrap(), 0.0);
    }

    #[test]
    fn correlated_columns_add_edge() {
        let dx = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0], vec![3.0, 6.0]]).unwrap();
        let mut g = InteractionGraph::empty(2);
        update_graph(&mut g, &dx, &learn(0.7, 0.3)).unwrap();
        assert!((g.weight(0, 1) - 1.0).abs() < 1e-15);
        assert_eq!(g.weight(0, 1), g.weight(1, 0));
    }

    #[test]
    fn weak_correlation_prunes() {
        // centered columns (-1.5,-0.5,0.5,1.5) and (1,-1,-1,1) are orthogonal
        let dx = Matrix::from_rows(&[
            vec![1.0, 1.0],
            vec![2.0, -1.0],
            vec![3.0, -1.0],
            vec![4.0, 1.0],
        ])
        .unwrap();
        let mut g = InteractionGraph::empty(2);
        g.set_edge(0, 1, 0.8).unwrap();
        update_graph(&mut g, &dx, &learn(0.7, 0.3)).unwrap();
        assert_eq!(g.weight(0, 1), 0.0);
    }

    #[test]
    fn hysteresis_band_keeps_weight() {
        // centered (-1,0,1) and (0,-1,1): rho = 1 / (sqrt2 * sqrt2) = 0.5
        let dx = Matrix::from_rows(&[vec![1.0, 1.0], vec![2.0, 0.0], vec![3.0, 2.0]]).unwrap();
        let rho = pearson(&[1.0, 2.0, 3.0], &[1.0, 0.0, 2.0]).unwrap();
        assert!((rho - 0.5).abs() < 1e-12);
        let mut g = InteractionGraph::empty(2);
        g.set_edge(0, 1, 0.8).unwrap();
        update_graph(&mut g, &dx, &learn(0.7, 0.3)).unwrap();
        assert_eq!(g.weight(0, 1), 0.8);
    }

    #[test]
    fn stalled_dimension_sheds_edges() {
        let dx = Matrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 2.0], vec![0.0, 3.0]]).unwrap();
        let mut g = InteractionGraph::empty(2);
        g.set_edge(0, 1, 0.9).unwrap();
        update_graph(&mut g, &dx, &learn(0.7, 0.3)).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn update_rejects_shape_mismatch() {
        let mut g = InteractionGraph::empty(3);
        let dx = Matrix::zeros(4, 2);
        assert!(update_graph(&mut g, &dx, &learn(0.7, 0.3)).is_err());
        let dx = Matrix::zeros(1, 3);
        assert!(update_graph(&mut g, &dx, &learn(0.7, 0.3)).is_err());
    }

    #[test]
    fn neighbor_readout() {
        let g = InteractionGraph::empty(4);
        assert!(g.neighbors(2).unwrap().is_empty());
        assert!(g.neighbors(4).is_err());

        let mut g = InteractionGraph::empty(2);
        g.set_edge(0, 1, 0.9).unwrap();
        assert_eq!(g.neighbors(0).unwrap(), vec![(1, 0.9)]);

        let mut g = InteractionGraph::empty(6);
        g.set_edge(2, 0, 0.4).unwrap();
        g.set_edge(2, 5, 0.6).unwrap();
        assert_eq!(g.neighbors(2).unwrap(), vec![(0, 0.4), (5, 0.6)]);
        assert_eq!(g.edges(), vec![(0, 2, 0.4), (2, 5, 0.6)]);
    }

    #[test]
    fn set_edge_validation() {
        let mut g = InteractionGraph::empty(3);
        assert!(g.set_edge(1, 1, 0.5).is_err());
        assert!(g.set_edge(0, 3, 0.5).is_err());
        assert!(g.set_edge(0, 1, 1.5).is_err());
        assert!(g.is_well_formed());
    }

    #[test]
    fn learn_config_validation() {
        assert!(learn(0.7, 0.3).validate().is_ok());
        assert!(learn(1.01, 0.3).validate().is_ok());
        assert!(learn(0.3, 0.5).validate().is_err());
        assert!(learn(0.5, 0.0).validate().is_err());
        let zero_interval = VigLearnConfig { update_interval: 0, ..learn(0.5, 0.3) };
        assert!(zero_interval.validate().is_err());
    }
}
