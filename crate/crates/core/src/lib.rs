//! Particle swarm optimization with a learned variable interaction graph.
//!
//! Two engines share one swarm representation and one seeded random stream:
//!
//! - [`pso`]: global-best PSO with fixed inertia, the baseline;
//! - [`vigpso`]: PSO whose per-dimension velocities are blended with those of
//!   correlated dimensions, the correlations being learned on the fly into an
//!   [`vig::InteractionGraph`].
//!
//! [`benchmarks`] holds the eight test functions, [`stats`] the Mann-Whitney
//! machinery and [`harness`] batch execution, grid-search tuning, comparison
//! reports and CSV/JSON export.

pub mod benchmarks;
pub mod error;
pub mod harness;
pub mod pso;
pub mod rng;
pub mod run;
pub mod stats;
pub mod swarm;
pub mod vig;
pub mod vigpso;

pub use benchmarks::{Benchmark, BenchmarkKind, Separability};
pub use error::{Error, Result};
pub use pso::{pso_run, pso_step, PsoConfig};
pub use rng::RngStream;
pub use run::{Algorithm, RunResult};
pub use swarm::{init_swarm, FnObjective, Matrix, Objective, SearchSpace, SwarmState, VelocityInit};
pub use vig::{pearson, update_graph, InteractionGraph, VigLearnConfig};
pub use vigpso::{
    alpha_schedule, blend_velocity, inertia_schedule, vigpso_run, vigpso_step, VigpsoConfig,
};
