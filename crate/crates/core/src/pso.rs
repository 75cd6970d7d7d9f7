//! Global-best particle swarm optimization with a fixed inertia weight.
//!
//! Per particle and per dimension the engine draws `r1` then `r2` from the
//! run's [`RngStream`] and applies
//!
//! ```text
//! v = w*v + c1*r1*(pbest - x) + c2*r2*(gbest - x)
//! ```
//!
//! The velocity is clipped to `[-v_clamp, v_clamp]` and the new position is
//! clamped to the search box. Personal and global bests update right after
//! each particle moves, so later particles in the same iteration already see
//! the improved global best.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::run::{Algorithm, RunResult};
use crate::swarm::{init_swarm, Objective, SwarmState, VelocityInit};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PsoConfig {
    pub omega: f64,
    pub c1: f64,
    pub c2: f64,
    pub swarm_size: usize,
    pub max_iterations: usize,
    pub v_clamp: f64,
    #[serde(default)]
    pub velocity_init: VelocityInit,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self {
            omega: 0.6,
            c1: 1.5,
            c2: 1.5,
            swarm_size: 50,
            max_iterations: 300,
            v_clamp: 5.0,
            velocity_init: VelocityInit::Uniform,
        }
    }
}

impl PsoConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.omega > 0.0 && self.omega <= 1.0) {
            return Err(Error::config(format!("omega must lie in (0, 1], got {}", self.omega)));
        }
        if !(self.c1 > 0.0) || !(self.c2 > 0.0) {
            return Err(Error::config(format!(
                "c1 and c2 must be positive, got {} and {}",
                self.c1, self.c2
            )));
        }
        if !(self.v_clamp > 0.0) || !self.v_clamp.is_finite() {
            return Err(Error::config(format!("v_clamp must be positive, got {}", self.v_clamp)));
        }
        if self.swarm_size < 2 {
            return Err(Error::config(format!(
                "swarm_size must be at least 2, got {}",
                self.swarm_size
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::config("max_iterations must be positive"));
        }
        Ok(())
    }
}

/// Standard velocity for one coordinate, unclipped.
#[inline]
pub(crate) fn standard_velocity(
    v: f64,
    x: f64,
    pbest: f64,
    gbest: f64,
    omega: f64,
    c1: f64,
    c2: f64,
    rng: &mut RngStream,
) -> f64 {
    let r1 = rng.unit();
    let r2 = rng.unit();
    omega * v + c1 * r1 * (pbest - x) + c2 * r2 * (gbest - x)
}

fn check_step(state: &SwarmState, config: &PsoConfig, objective: &dyn Objective) -> Result<()> {
    if state.iteration >= config.max_iterations {
        return Err(Error::argument(format!(
            "iteration {} already reached max_iterations {}",
            state.iteration, config.max_iterations
        )));
    }
    if state.dim() != objective.space().dim() {
        return Err(Error::argument(format!(
            "swarm has {} dimensions, objective has {}",
            state.dim(),
            objective.space().dim()
        )));
    }
    Ok(())
}

/// One iteration using `omega` in place of `config.omega`.
pub fn step_with_inertia(
    state: &mut SwarmState,
    config: &PsoConfig,
    omega: f64,
    objective: &dyn Objective,
    rng: &mut RngStream,
) -> Result<()> {
    check_step(state, config, objective)?;
    let space = objective.space();
    let (lower, upper) = (space.lower(), space.upper());
    let vmax = config.v_clamp;
    for i in 0..state.swarm_size() {
        {
            let x = state.positions.row_mut(i);
            let v = state.velocities.row_mut(i);
            let p = state.pbest_pos.row(i);
            let g = &state.gbest_pos;
            for j in 0..x.len() {
                let vs = standard_velocity(v[j], x[j], p[j], g[j], omega, config.c1, config.c2, rng);
                v[j] = vs.clamp(-vmax, vmax);
                x[j] = (x[j] + v[j]).clamp(lower[j], upper[j]);
            }
        }
        let value = objective.evaluate(state.positions.row(i));
        state.record(i, value);
    }
    state.iteration += 1;
    Ok(())
}

/// One iteration of fixed-inertia PSO.
pub fn pso_step(
    state: &mut SwarmState,
    config: &PsoConfig,
    objective: &dyn Objective,
    rng: &mut RngStream,
) -> Result<()> {
    step_with_inertia(state, config, config.omega, objective, rng)
}

/// Runs PSO with an inertia weight chosen per iteration by `inertia(t)`.
pub fn run_with_inertia<F>(
    config: &PsoConfig,
    objective: &dyn Objective,
    seed: u64,
    inertia: F,
) -> Result<RunResult>
where
    F: Fn(usize) -> f64,
{
    config.validate()?;
    let started = Instant::now();
    let mut rng = RngStream::new(seed);
    let mut state = init_swarm(
        objective,
        config.swarm_size,
        config.v_clamp,
        config.velocity_init,
        &mut rng,
    )?;
    let mut trace = Vec::with_capacity(config.max_iterations + 1);
    trace.push(state.gbest_val);
    while state.iteration < config.max_iterations {
        let omega = inertia(state.iteration);
        step_with_inertia(&mut state, config, omega, objective, &mut rng)?;
        trace.push(state.gbest_val);
    }
    Ok(RunResult {
        algorithm: Algorithm::Pso,
        function: objective.name().to_string(),
        dim: state.dim(),
        seed,
        trace,
        final_value: state.gbest_val,
        final_position: state.gbest_pos,
        wall_time_seconds: started.elapsed().as_secs_f64(),
        graph: None,
    })
}

pub fn pso_run(config: &PsoConfig, objective: &dyn Objective, seed: u64) -> Result<RunResult> {
    run_with_inertia(config, objective, seed, |_| config.omega)
}
