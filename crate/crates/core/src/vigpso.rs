//! PSO with velocities blended across a learned variable interaction graph.
//!
//! Each iteration `t` (counted from 0):
//!
//! 1. inertia `w_t = w * (1 - decay * t/T)` and blend weight
//!    `alpha_t = cap * (1 - exp(-rate * t/T))`;
//! 2. for each particle, the standard velocity `v_s` is computed for every
//!    dimension first, then each dimension `d` with graph neighbors `N_d` gets
//!    `v'_d = (1 - alpha) v_s[d] + alpha * sum(w_n v_s[n]) / sum(w_n)`,
//!    clipped to `[-v_clamp, v_clamp]`;
//! 3. position update, box clamp, and immediate pbest/gbest update;
//! 4. when the completed iteration count is a multiple of the update interval,
//!    the movement of this iteration feeds [`update_graph`].
//!
//! With an empty graph the engine draws the same random numbers in the same
//! order as [`crate::pso::step_with_inertia`], so a run whose graph never
//! gains an edge matches decaying-inertia PSO bit for bit.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pso::{standard_velocity, PsoConfig};
use crate::rng::RngStream;
use crate::run::{Algorithm, RunResult};
use crate::swarm::{init_swarm, Objective, SwarmState};
use crate::vig::{update_graph, InteractionGraph, VigLearnConfig};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VigpsoConfig {
    pub base: PsoConfig,
    pub learn: VigLearnConfig,
    pub alpha_cap: f64,
    pub alpha_rate: f64,
    pub inertia_decay: f64,
}

impl Default for VigpsoConfig {
    fn default() -> Self {
        Self {
            base: PsoConfig::default(),
            learn: VigLearnConfig::default(),
            alpha_cap: 0.3,
            alpha_rate: 2.0,
            inertia_decay: 0.6,
        }
    }
}

impl VigpsoConfig {
    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        self.learn.validate()?;
        if !(self.alpha_cap > 0.0 && self.alpha_cap < 1.0) {
            return Err(Error::config(format!(
                "alpha_cap must lie in (0, 1), got {}",
                self.alpha_cap
            )));
        }
        if !(self.alpha_rate > 0.0) || !self.alpha_rate.is_finite() {
            return Err(Error::config(format!(
                "alpha_rate must be positive, got {}",
                self.alpha_rate
            )));
        }
        if !(self.inertia_decay >= 0.0 && self.inertia_decay < 1.0) {
            return Err(Error::config(format!(
                "inertia_decay must lie in [0, 1), got {}",
                self.inertia_decay
            )));
        }
        Ok(())
    }

    pub fn inertia_at(&self, t: usize) -> f64 {
        inertia_schedule(self.base.omega, t, self.base.max_iterations, self.inertia_decay)
    }

    pub fn alpha_at(&self, t: usize) -> f64 {
        alpha_schedule(t, self.base.max_iterations, self.alpha_cap, self.alpha_rate)
    }
}

/// `cap * (1 - exp(-rate * t / t_max))`.
pub fn alpha_schedule(t: usize, t_max: usize, cap: f64, rate: f64) -> f64 {
    let progress = t as f64 / t_max as f64;
    cap * (1.0 - (-rate * progress).exp())
}

/// `omega * (1 - decay * t / t_max)`.
pub fn inertia_schedule(omega: f64, t: usize, t_max: usize, decay: f64) -> f64 {
    let progress = t as f64 / t_max as f64;
    omega * (1.0 - decay * progress)
}

fn blend_into(
    v_std: &[f64],
    adjacency: &[Vec<(usize, f64)>],
    alpha: f64,
    v_clamp: f64,
    out: &mut [f64],
) {
    for (d, (slot, neighbors)) in out.iter_mut().zip(adjacency).enumerate() {
        let v = if neighbors.is_empty() {
            v_std[d]
        } else {
            let (num, den) = neighbors
                .iter()
                .fold((0.0, 0.0), |(num, den), &(n, w)| (num + w * v_std[n], den + w));
            (1.0 - alpha) * v_std[d] + alpha * (num / den)
        };
        *slot = v.clamp(-v_clamp, v_clamp);
    }
}

/// Blends a particle's standard velocity vector across `graph`.
///
/// Every dimension reads from the unmodified `v_std`, so the result does not
/// depend on dimension order.
pub fn blend_velocity(
    v_std: &[f64],
    graph: &InteractionGraph,
    alpha: f64,
    v_clamp: f64,
) -> Result<Vec<f64>> {
    if v_std.len() != graph.dim() {
        return Err(Error::argument(format!(
            "velocity has {} components, graph has dim {}",
            v_std.len(),
            graph.dim()
        )));
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::argument(format!("alpha must lie in [0, 1), got {alpha}")));
    }
    let mut out = vec![0.0; v_std.len()];
    blend_into(v_std, &graph.adjacency(), alpha, v_clamp, &mut out);
    Ok(out)
}

/// Advances the swarm by one iteration and, on update ticks, the graph.
pub fn vigpso_step(
    state: &mut SwarmState,
    graph: &mut InteractionGraph,
    config: &VigpsoConfig,
    objective: &dyn Objective,
    rng: &mut RngStream,
) -> Result<()> {
    let base = &config.base;
    if state.iteration >= base.max_iterations {
        return Err(Error::argument(format!(
            "iteration {} already reached max_iterations {}",
            state.iteration, base.max_iterations
        )));
    }
    let dim = state.dim();
    if dim != objective.space().dim() || dim != graph.dim() {
        return Err(Error::argument(format!(
            "dimension mismatch: swarm {dim}, objective {}, graph {}",
            objective.space().dim(),
            graph.dim()
        )));
    }

    let t = state.iteration;
    let omega = config.inertia_at(t);
    let alpha = config.alpha_at(t);
    let learns = (t + 1) % config.learn.update_interval == 0;
    let x_old = learns.then(|| state.positions.clone());
    let adjacency = graph.adjacency();
    let space = objective.space();
    let (lower, upper) = (space.lower(), space.upper());
    let mut v_std = vec![0.0; dim];

    for i in 0..state.swarm_size() {
        {
            let x = state.positions.row_mut(i);
            let v = state.velocities.row_mut(i);
            let p = state.pbest_pos.row(i);
            let g = &state.gbest_pos;
            for j in 0..dim {
                v_std[j] = standard_velocity(v[j], x[j], p[j], g[j], omega, base.c1, base.c2, rng);
            }
            blend_into(&v_std, &adjacency, alpha, base.v_clamp, v);
            for j in 0..dim {
                x[j] = (x[j] + v[j]).clamp(lower[j], upper[j]);
            }
        }
        let value = objective.evaluate(state.positions.row(i));
        state.record(i, value);
    }
    state.iteration += 1;

    if let Some(x_old) = x_old {
        let delta = state.positions.sub(&x_old)?;
        update_graph(graph, &delta, &config.learn)?;
    }
    Ok(())
}

pub fn vigpso_run(config: &VigpsoConfig, objective: &dyn Objective, seed: u64) -> Result<RunResult> {
    config.validate()?;
    let started = Instant::now();
    let base = &config.base;
    let mut rng = RngStream::new(seed);
    let mut state = init_swarm(
        objective,
        base.swarm_size,
        base.v_clamp,
        base.velocity_init,
        &mut rng,
    )?;
    let mut graph = InteractionGraph::empty(state.dim());
    let mut trace = Vec::with_capacity(base.max_iterations + 1);
    trace.push(state.gbest_val);
    while state.iteration < base.max_iterations {
        vigpso_step(&mut state, &mut graph, config, objective, &mut rng)?;
        trace.push(state.gbest_val);
    }
    Ok(RunResult {
        algorithm: Algorithm::Vigpso,
        function: objective.name().to_string(),
        dim: state.dim(),
        seed,
        trace,
        final_value: state.gbest_val,
        final_position: state.gbest_pos,
        wall_time_seconds: started.elapsed().as_secs_f64(),
        graph: Some(graph),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::{Benchmark, BenchmarkKind};
    use crate::pso::{run_with_inertia, step_with_inertia};
    use crate::swarm::VelocityInit;

    #[test]
    fn alpha_values() {
        assert_eq!(alpha_schedule(0, 300, 0.3, 2.0), 0.0);
        assert!((alpha_schedule(300, 300, 0.3, 2.0) - 0.259399).abs() < 1e-6);
        assert!((alpha_schedule(150, 300, 0.3, 2.0) - 0.189636).abs() < 1e-6);
    }

    #[test]
    fn inertia_values() {
        assert_eq!(inertia_schedule(0.6, 0, 300, 0.6), 0.6);
        assert!((inertia_schedule(0.6, 300, 300, 0.6) - 0.24).abs() < 1e-15);
        assert!((inertia_schedule(0.4, 150, 300, 0.6) - 0.28).abs() < 1e-15);
    }

    #[test]
    fn blend_worked_example() {
        let mut g = InteractionGraph::empty(3);
        g.set_edge(0, 1, 0.8).unwrap();
        g.set_edge(0, 2, 0.2).unwrap();
        let out = blend_velocity(&[2.0, 1.0, -1.0], &g, 0.2, 5.0).unwrap();
        assert!((out[0] - 1.72).abs() < 1e-12);
        // dimensions 1 and 2 each have the single neighbor 0
        assert!((out[1] - (0.8 * 1.0 + 0.2 * 2.0)).abs() < 1e-12);
        assert!((out[2] - (0.8 * -1.0 + 0.2 * 2.0)).abs() < 1e-12);
    }

    #[test]
    fn blend_degenerate_cases() {
        let v = [7.0, -0.5, 1.25];
        let empty = InteractionGraph::empty(3);
        assert_eq!(blend_velocity(&v, &empty, 0.25, 5.0).unwrap(), vec![5.0, -0.5, 1.25]);
        let mut g = InteractionGraph::empty(3);
        g.set_edge(0, 2, 0.9).unwrap();
        assert_eq!(blend_velocity(&v, &g, 0.0, 5.0).unwrap(), vec![5.0, -0.5, 1.25]);
        assert!(blend_velocity(&v, &g, 1.0, 5.0).is_err());
        assert!(blend_velocity(&v[..2], &g, 0.1, 5.0).is_err());
    }

    #[test]
    fn reduces_to_decaying_inertia_pso() {
        let obj = Benchmark::new(BenchmarkKind::Rosenbrock, 8).unwrap();
        let mut cfg = VigpsoConfig::default();
        cfg.base.max_iterations = 40;
        cfg.learn.tau1 = 1.01;
        cfg.learn.update_interval = 3;
        let vig = vigpso_run(&cfg, &obj, 17).unwrap();
        let reference = run_with_inertia(&cfg.base, &obj, 17, |t| cfg.inertia_at(t)).unwrap();
        assert_eq!(vig.trace, reference.trace);
        assert_eq!(vig.final_position, reference.final_position);
        assert_eq!(vig.graph.unwrap().edge_count(), 0);
    }

    #[test]
    fn step_by_step_matches_reference_state() {
        let obj = Benchmark::new(BenchmarkKind::Sphere, 5).unwrap();
        let mut cfg = VigpsoConfig::default();
        cfg.base.max_iterations = 10;
        cfg.learn.tau1 = 1.01;
        let mut rng_a = RngStream::new(4);
        let mut rng_b = RngStream::new(4);
        let mut a = init_swarm(&obj, 50, 5.0, VelocityInit::Uniform, &mut rng_a).unwrap();
        let mut b = init_swarm(&obj, 50, 5.0, VelocityInit::Uniform, &mut rng_b).unwrap();
        let mut g = InteractionGraph::empty(5);
        for t in 0..10 {
            vigpso_step(&mut a, &mut g, &cfg, &obj, &mut rng_a).unwrap();
            step_with_inertia(&mut b, &cfg.base, cfg.inertia_at(t), &obj, &mut rng_b).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn graph_learns_on_ticks_only() {
        let obj = Benchmark::new(BenchmarkKind::Rosenbrock, 6).unwrap();
        let mut cfg = VigpsoConfig::default();
        cfg.learn = VigLearnConfig { tau1: 0.3, tau2: 0.3, update_interval: 4 };
        let mut rng = RngStream::new(2);
        let mut s = init_swarm(&obj, 50, 5.0, VelocityInit::Uniform, &mut rng).unwrap();
        let mut g = InteractionGraph::empty(6);
        for _ in 0..3 {
            vigpso_step(&mut s, &mut g, &cfg, &obj, &mut rng).unwrap();
            assert_eq!(g.edge_count(), 0);
        }
        vigpso_step(&mut s, &mut g, &cfg, &obj, &mut rng).unwrap();
        assert!(g.is_well_formed());
    }

    #[test]
    fn run_is_deterministic_and_monotone() {
        let obj = Benchmark::new(BenchmarkKind::Sphere, 10).unwrap();
        let cfg = VigpsoConfig::default();
        let a = vigpso_run(&cfg, &obj, 9).unwrap();
        let b = vigpso_run(&cfg, &obj, 9).unwrap();
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.trace.len(), 301);
        assert!(a.trace.windows(2).all(|w| w[1] <= w[0]));
        assert!(a.final_value < a.trace[0]);
        assert_eq!(a.algorithm, Algorithm::Vigpso);
    }

    #[test]
    fn invalid_configs() {
        let ok = VigpsoConfig::default();
        assert!(ok.validate().is_ok());
        for bad in [
            VigpsoConfig { alpha_cap: 1.0, ..ok.clone() },
            VigpsoConfig { alpha_rate: 0.0, ..ok.clone() },
            VigpsoConfig { inertia_decay: 1.0, ..ok.clone() },
        ] {
            assert!(bad.validate().is_err());
        }
    }
}
