//! Two-sided Mann-Whitney U test.
//!
//! `U` is reported for the first sample: the number of pairs `(a_i, b_j)` with
//! `a_i > b_j`, tied pairs counting one half. Small tie-free samples
//! (`n_a + n_b <= 16`) get the exact null distribution; everything else uses
//! the normal approximation with tie-corrected variance and a 0.5 continuity
//! correction.

use serde::{Deserialize, Serialize};

use super::summary::summarize;
use crate::error::{Error, Result};

pub const SIGNIFICANCE_LEVEL: f64 = 0.05;

/// Largest combined sample size handled by exact enumeration.
pub const EXACT_MAX_TOTAL: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerSample {
    First,
    Second,
    /// Not significant, or no direction.
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PValueMethod {
    Exact,
    Normal,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MannWhitneyResult {
    pub u_statistic: f64,
    pub p_value: f64,
    pub significant: bool,
    pub lower: LowerSample,
    pub method: PValueMethod,
}

/// Midranks (1-based) of the pooled sample and the tie-group sizes.
fn pooled_ranks(a: &[f64], b: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let mut pooled: Vec<(f64, usize)> = a.iter().chain(b).copied().zip(0..).collect();
    pooled.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut ranks = vec![0.0; pooled.len()];
    let mut ties = Vec::new();
    let mut start = 0;
    while start < pooled.len() {
        let mut end = start + 1;
        while end < pooled.len() && pooled[end].0 == pooled[start].0 {
            end += 1;
        }
        let midrank = (start + end + 1) as f64 / 2.0;
        for &(_, idx) in &pooled[start..end] {
            ranks[idx] = midrank;
        }
        if end - start > 1 {
            ties.push(end - start);
        }
        start = end;
    }
    (ranks, ties)
}

/// Number of arrangements giving each `U` value, `U = 0..=n_a*n_b`.
fn u_distribution(n_a: usize, n_b: usize) -> Vec<f64> {
    // f(m, n, u) = f(m-1, n, u-n) + f(m, n-1, u), splitting on whether the
    // largest pooled value belongs to the first sample
    let max_u = n_a * n_b;
    let mut table = vec![vec![vec![0.0f64; max_u + 1]; n_b + 1]; n_a + 1];
    for m in 0..=n_a {
        for n in 0..=n_b {
            if m == 0 || n == 0 {
                table[m][n][0] = 1.0;
                continue;
            }
            for u in 0..=m * n {
                let with_a_largest = if u >= n { table[m - 1][n][u - n] } else { 0.0 };
                table[m][n][u] = with_a_largest + table[m][n - 1][u];
            }
        }
    }
    table.swap_remove(n_a).swap_remove(n_b)
}

/// Exact two-sided p-value of an integer `u` under the tie-free null.
pub fn exact_p_value(u: f64, n_a: usize, n_b: usize) -> f64 {
    let counts = u_distribution(n_a, n_b);
    let total: f64 = counts.iter().sum();
    let k = u.round() as usize;
    let low: f64 = counts[..=k.min(counts.len() - 1)].iter().sum();
    let high: f64 = counts[k.min(counts.len())..].iter().sum();
    (2.0 * low.min(high) / total).min(1.0)
}

/// Normal-approximation two-sided p-value. `tie_groups` lists the sizes of
/// tied groups in the pooled sample.
pub fn normal_p_value(u: f64, n_a: usize, n_b: usize, tie_groups: &[usize]) -> f64 {
    let (na, nb) = (n_a as f64, n_b as f64);
    let n = na + nb;
    let tie_term: f64 = tie_groups
        .iter()
        .map(|&t| {
            let t = t as f64;
            t * t * t - t
        })
        .sum();
    let variance = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if !(variance > 0.0) {
        return 1.0;
    }
    let mean = na * nb / 2.0;
    let z = ((u - mean).abs() - 0.5).max(0.0) / variance.sqrt();
    libm::erfc(z / std::f64::consts::SQRT_2).min(1.0)
}

pub fn mann_whitney_u(a: &[f64], b: &[f64]) -> Result<MannWhitneyResult> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::argument(format!(
            "Mann-Whitney needs at least two values per sample, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    if a.iter().chain(b).any(|x| x.is_nan()) {
        return Err(Error::argument("sample contains NaN"));
    }
    let (n_a, n_b) = (a.len(), b.len());
    let (ranks, ties) = pooled_ranks(a, b);
    let rank_sum: f64 = ranks[..n_a].iter().sum();
    let u = rank_sum - (n_a * (n_a + 1)) as f64 / 2.0;

    let (p_value, method) = if ties.is_empty() && n_a + n_b <= EXACT_MAX_TOTAL {
        (exact_p_value(u, n_a, n_b), PValueMethod::Exact)
    } else {
        (normal_p_value(u, n_a, n_b, &ties), PValueMethod::Normal)
    };
    let significant = p_value < SIGNIFICANCE_LEVEL;
    let lower = if significant {
        let (ma, mb) = (summarize(a)?.median, summarize(b)?.median);
        if ma < mb || (ma == mb && u < (n_a * n_b) as f64 / 2.0) {
            LowerSample::First
        } else {
            LowerSample::Second
        }
    } else {
        LowerSample::None
    };
    Ok(MannWhitneyResult {
        u_statistic: u,
        p_value,
        significant,
        lower,
        method,
    })
}
