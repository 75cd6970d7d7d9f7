//! Test-only oracles, written independently of the library's engine code.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use vigpso::stats::mann_whitney_u;
use vigpso::{
    alpha_schedule, blend_velocity, init_swarm, pso_step, update_graph,
    vigpso_run, vigpso_step, Benchmark, BenchmarkKind, InteractionGraph, Matrix, Objective,
    PsoConfig, RngStream, VelocityInit, VigLearnConfig, VigpsoConfig,
};

// ---------------------------------------------------------------------------
// Decaying-inertia PSO, written from scratch against the documented draw order
// ---------------------------------------------------------------------------

pub struct ReferenceRun {
    pub trace: Vec<f64>,
    pub positions: Vec<Vec<f64>>,
    pub gbest: Vec<f64>,
}

pub fn reference_decaying_pso(cfg: &VigpsoConfig, obj: &dyn Objective, seed: u64) -> ReferenceRun {
    let base = &cfg.base;
    let (lo, hi) = (obj.space().lower().to_vec(), obj.space().upper().to_vec());
    let d = lo.len();
    let s = base.swarm_size;
    let mut rng = RngStream::new(seed);
    let mut x = vec![vec![0.0; d]; s];
    let mut v = vec![vec![0.0; d]; s];
    for i in 0..s {
        for j in 0..d {
            x[i][j] = rng.uniform(lo[j], hi[j]).unwrap();
        }
        for j in 0..d {
            v[i][j] = rng.uniform(-base.v_clamp, base.v_clamp).unwrap();
        }
    }
    let mut pbest = x.clone();
    let mut pval: Vec<f64> = x.iter().map(|p| obj.evaluate(p)).collect();
    let mut g = 0;
    for i in 1..s {
        if pval[i] < pval[g] {
            g = i;
        }
    }
    let mut gbest = x[g].clone();
    let mut gval = pval[g];
    let mut trace = vec![gval];
    let t_max = base.max_iterations;
    for t in 0..t_max {
        let progress = t as f64 / t_max as f64;
        let w = base.omega * (1.0 - cfg.inertia_decay * progress);
        for i in 0..s {
            for j in 0..d {
                let r1 = rng.uniform(0.0, 1.0).unwrap();
                let r2 = rng.uniform(0.0, 1.0).unwrap();
                let vel = w * v[i][j]
                    + base.c1 * r1 * (pbest[i][j] - x[i][j])
                    + base.c2 * r2 * (gbest[j] - x[i][j]);
                v[i][j] = vel.max(-base.v_clamp).min(base.v_clamp);
                x[i][j] = (x[i][j] + v[i][j]).max(lo[j]).min(hi[j]);
            }
            let f = obj.evaluate(&x[i]);
            if f < pval[i] {
                pval[i] = f;
                pbest[i] = x[i].clone();
                if f < gval {
                    gval = f;
                    gbest = x[i].clone();
                }
            }
        }
        trace.push(gval);
    }
    ReferenceRun {
        trace,
        positions: x,
        gbest,
    }
}

// ---------------------------------------------------------------------------
// Mann-Whitney by brute-force enumeration of rank arrangements
// ---------------------------------------------------------------------------

/// Every way to pick `n_a` of the `n_a + n_b` pooled ranks for the first
/// sample, as bitmasks.
pub fn arrangements(n_a: usize, n_b: usize) -> Vec<u32> {
    let n = n_a + n_b;
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == n_a)
        .collect()
}

/// U of the first sample for an arrangement: pairs with a above b.
pub fn u_of(mask: u32, n: usize) -> usize {
    let mut u = 0;
    let mut bs_below = 0;
    for pos in 0..n {
        if mask & (1 << pos) != 0 {
            u += bs_below;
        } else {
            bs_below += 1;
        }
    }
    u
}

/// U of every arrangement.
pub fn u_distribution(n_a: usize, n_b: usize) -> Vec<usize> {
    let n = n_a + n_b;
    arrangements(n_a, n_b).iter().map(|&m| u_of(m, n)).collect()
}

/// Exact two-sided p-value of `u` against the U values of all arrangements.
pub fn p_from_distribution(u: usize, us: &[usize]) -> f64 {
    let total = us.len() as f64;
    let low = us.iter().filter(|&&x| x <= u).count() as f64;
    let high = us.iter().filter(|&&x| x >= u).count() as f64;
    (2.0 * low.min(high) / total).min(1.0)
}

/// Exact two-sided p-value of `u` by counting arrangements.
pub fn enumerated_p(u: usize, n_a: usize, n_b: usize) -> f64 {
    p_from_distribution(u, &u_distribution(n_a, n_b))
}

/// Samples realizing an arrangement with values `1..=n`.
pub fn samples_of(mask: u32, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for pos in 0..n {
        let value = (pos + 1) as f64;
        if mask & (1 << pos) != 0 {
            a.push(value);
        } else {
            b.push(value);
        }
    }
    (a, b)
}

// ---------------------------------------------------------------------------
// Property checks shared by the proptest suite and the acceptance gate
// ---------------------------------------------------------------------------

fn kind_strategy() -> impl Strategy<Value = BenchmarkKind> {
    prop::sample::select(BenchmarkKind::ALL.to_vec())
}

/// (swarm size, dim, movements, tau1, tau2, prior-graph seed)
pub fn movement_strategy() -> impl Strategy<Value = (usize, usize, Vec<f64>, f64, f64, u64)> {
    (2usize..30, 1usize..12)
        .prop_flat_map(|(s, d)| {
            (
                Just(s),
                Just(d),
                prop::collection::vec(-3.0f64..3.0, s * d),
                0.05f64..0.95,
                0.0f64..1.0,
                any::<u64>(),
            )
        })
        .prop_map(|(s, d, v, tau2, frac, seed)| {
            let tau1 = tau2 + frac * (0.99 - tau2);
            (s, d, v, tau1, tau2, seed)
        })
}

pub fn check_graph_update(
    (s, d, values, tau1, tau2, seed): (usize, usize, Vec<f64>, f64, f64, u64),
) -> Result<(), TestCaseError> {
    let rows: Vec<Vec<f64>> = values.chunks(d).map(|c| c.to_vec()).collect();
    let dx = Matrix::from_rows(&rows).unwrap();
    let learn = VigLearnConfig {
        tau1,
        tau2,
        update_interval: 1,
    };
    // random prior graph
    let mut rng = RngStream::new(seed);
    let mut graph = InteractionGraph::empty(d);
    for i in 0..d {
        for j in i + 1..d {
            if rng.unit() < 0.5 {
                graph.set_edge(i, j, rng.unit()).unwrap();
            }
        }
    }
    let prior = graph.clone();
    update_graph(&mut graph, &dx, &learn).unwrap();
    prop_assert!(graph.is_well_formed());
    for i in 0..d {
        for j in i + 1..d {
            let col = |k: usize| (0..s).map(|r| rows[r][k]).collect::<Vec<_>>();
            let rho = vigpso::pearson(&col(i), &col(j)).unwrap().abs();
            let w = graph.weight(i, j);
            if rho > tau1 {
                prop_assert_eq!(w, rho);
            } else if rho < tau2 {
                prop_assert_eq!(w, 0.0);
            } else {
                prop_assert_eq!(w, prior.weight(i, j));
            }
        }
    }
    let mut twice = graph.clone();
    update_graph(&mut twice, &dx, &learn).unwrap();
    prop_assert_eq!(twice, graph);
    Ok(())
}

pub fn engine_strategy() -> impl Strategy<Value = (BenchmarkKind, usize, usize, usize, f64, f64, f64, f64, f64, usize, u64)>
{
    (
        kind_strategy(),
        1usize..8,
        2usize..12,
        1usize..20,
        0.1f64..1.0,
        0.1f64..2.5,
        0.1f64..2.5,
        0.1f64..5.0,
        0.05f64..0.9,
        1usize..6,
        any::<u64>(),
    )
}

/// Runs both engines step by step and checks the swarm invariants after
/// every step.
pub fn check_engine_invariants(
    (kind, d, s, t_max, omega, c1, c2, v_clamp, tau, k, seed): (
        BenchmarkKind,
        usize,
        usize,
        usize,
        f64,
        f64,
        f64,
        f64,
        f64,
        usize,
        u64,
    ),
) -> Result<(), TestCaseError> {
    let obj = Benchmark::new(kind, d).unwrap();
    let base = PsoConfig {
        omega,
        c1,
        c2,
        swarm_size: s,
        max_iterations: t_max,
        v_clamp,
        velocity_init: VelocityInit::Uniform,
    };
    let cfg = VigpsoConfig {
        base: base.clone(),
        learn: VigLearnConfig {
            tau1: tau,
            tau2: tau,
            update_interval: k,
        },
        ..VigpsoConfig::default()
    };
    for vig in [false, true] {
        let mut rng = RngStream::new(seed);
        let mut state = init_swarm(&obj, s, v_clamp, VelocityInit::Uniform, &mut rng).unwrap();
        let mut graph = InteractionGraph::empty(d);
        let mut last = state.gbest_val;
        check_state(&state, &obj, v_clamp)?;
        for _ in 0..t_max {
            if vig {
                vigpso_step(&mut state, &mut graph, &cfg, &obj, &mut rng).unwrap();
                prop_assert!(graph.is_well_formed());
            } else {
                pso_step(&mut state, &base, &obj, &mut rng).unwrap();
            }
            prop_assert!(state.gbest_val <= last);
            last = state.gbest_val;
            check_state(&state, &obj, v_clamp)?;
        }
    }
    Ok(())
}

fn check_state(
    state: &vigpso::SwarmState,
    obj: &dyn Objective,
    v_clamp: f64,
) -> Result<(), TestCaseError> {
    for i in 0..state.swarm_size() {
        prop_assert!(obj.space().contains(state.positions.row(i)));
        prop_assert!(state.velocities.row(i).iter().all(|v| v.abs() <= v_clamp));
        prop_assert_eq!(state.pbest_val[i], obj.evaluate(state.pbest_pos.row(i)));
        prop_assert!(state.gbest_val <= state.pbest_val[i]);
    }
    prop_assert!((0..state.swarm_size()).any(|i| state.pbest_val[i] == state.gbest_val
        && state.pbest_pos.row(i) == state.gbest_pos.as_slice()));
    Ok(())
}

pub fn alpha_strategy() -> impl Strategy<Value = (usize, usize, f64, f64)> {
    (1usize..2000, 0.01f64..0.99, 0.01f64..10.0)
        .prop_flat_map(|(t_max, cap, rate)| (0..t_max, Just(t_max), Just(cap), Just(rate)))
}

pub fn check_alpha((t, t_max, cap, rate): (usize, usize, f64, f64)) -> Result<(), TestCaseError> {
    let a = alpha_schedule(t, t_max, cap, rate);
    let next = alpha_schedule(t + 1, t_max, cap, rate);
    prop_assert!(a >= 0.0 && a < cap);
    prop_assert!(next > a);
    prop_assert!(next <= cap);
    Ok(())
}

pub fn blend_strategy() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, f64)> {
    (2usize..10).prop_flat_map(|d| {
        (
            prop::collection::vec(-10.0f64..10.0, d),
            prop::collection::vec(prop_oneof![Just(0.0), 0.01f64..1.0], d * (d - 1) / 2),
            0.0f64..0.99,
        )
    })
}

/// Before clipping the blend is a convex combination of `v_s[d]` and the
/// weighted neighbor mean; the clip is checked against a huge clamp.
pub fn check_blend((v, upper, alpha): (Vec<f64>, Vec<f64>, f64)) -> Result<(), TestCaseError> {
    let d = v.len();
    let mut graph = InteractionGraph::empty(d);
    let mut it = upper.iter();
    for i in 0..d {
        for j in i + 1..d {
            graph.set_edge(i, j, *it.next().unwrap()).unwrap();
        }
    }
    let out = blend_velocity(&v, &graph, alpha, 1e9).unwrap();
    for k in 0..d {
        let nbrs = graph.neighbors(k).unwrap();
        if nbrs.is_empty() {
            prop_assert_eq!(out[k], v[k]);
            continue;
        }
        let den: f64 = nbrs.iter().map(|(_, w)| w).sum();
        let v_vig: f64 = nbrs.iter().map(|(n, w)| w * v[*n]).sum::<f64>() / den;
        let (lo, hi) = (v[k].min(v_vig), v[k].max(v_vig));
        let eps = 1e-12 * (1.0 + lo.abs().max(hi.abs()));
        prop_assert!(out[k] >= lo - eps && out[k] <= hi + eps);
    }
    let clipped = blend_velocity(&v, &graph, alpha, 1.0).unwrap();
    prop_assert!(clipped.iter().all(|x| x.abs() <= 1.0));
    Ok(())
}

pub fn sample_pair_strategy() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (
        prop::collection::vec(prop_oneof![-100.0f64..100.0, Just(1.0)], 2..40),
        prop::collection::vec(prop_oneof![-100.0f64..100.0, Just(1.0)], 2..40),
    )
}

pub fn check_u_complement((a, b): (Vec<f64>, Vec<f64>)) -> Result<(), TestCaseError> {
    let ab = mann_whitney_u(&a, &b).unwrap();
    let ba = mann_whitney_u(&b, &a).unwrap();
    prop_assert_eq!(ab.u_statistic + ba.u_statistic, (a.len() * b.len()) as f64);
    prop_assert!((ab.p_value - ba.p_value).abs() < 1e-12);
    prop_assert!((0.0..=1.0).contains(&ab.p_value));
    Ok(())
}

pub fn determinism_strategy() -> impl Strategy<Value = (BenchmarkKind, usize, u64)> {
    (kind_strategy(), 1usize..6, any::<u64>())
}

pub fn check_determinism((kind, d, seed): (BenchmarkKind, usize, u64)) -> Result<(), TestCaseError> {
    let obj = Benchmark::new(kind, d).unwrap();
    let mut cfg = VigpsoConfig::default();
    cfg.base.swarm_size = 8;
    cfg.base.max_iterations = 12;
    cfg.learn.update_interval = 3;
    let a = vigpso_run(&cfg, &obj, seed).unwrap();
    let b = vigpso_run(&cfg, &obj, seed).unwrap();
    prop_assert_eq!(&a.trace, &b.trace);
    prop_assert_eq!(&a.graph, &b.graph);
    let p = vigpso::pso_run(&cfg.base, &obj, seed).unwrap();
    let q = vigpso::pso_run(&cfg.base, &obj, seed).unwrap();
    prop_assert_eq!(p.trace, q.trace);
    Ok(())
}

pub fn init_strategy() -> impl Strategy<Value = (Vec<(f64, f64)>, usize, u64)> {
    (
        prop::collection::vec((-1e3f64..1e3, 1e-6f64..1e3), 1..10),
        2usize..40,
        any::<u64>(),
    )
}

pub fn check_init_in_bounds(
    (bounds, s, seed): (Vec<(f64, f64)>, usize, u64),
) -> Result<(), TestCaseError> {
    let lower: Vec<f64> = bounds.iter().map(|b| b.0).collect();
    let upper: Vec<f64> = bounds.iter().map(|b| b.0 + b.1).collect();
    let space = vigpso::SearchSpace::new(lower, upper).unwrap();
    let obj = vigpso::FnObjective::new("sum", space, |x: &[f64]| x.iter().sum());
    let state = init_swarm(&obj, s, 1.0, VelocityInit::Uniform, &mut RngStream::new(seed)).unwrap();
    for i in 0..s {
        prop_assert!(obj.space().contains(state.positions.row(i)));
        prop_assert!(state.gbest_val <= state.pbest_val[i]);
    }
    Ok(())
}
