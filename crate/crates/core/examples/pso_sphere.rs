//! Baseline PSO on Sphere with the default parameters.

use vigpso::{pso_run, Benchmark, BenchmarkKind, PsoConfig};

fn main() -> vigpso::Result<()> {
    let objective = Benchmark::new(BenchmarkKind::Sphere, 30)?;
    let config = PsoConfig {
        omega: 0.6,
        c1: 2.0,
        c2: 1.0,
        ..PsoConfig::default()
    };
    let result = pso_run(&config, &objective, 42)?;
    for (t, value) in result.trace.iter().enumerate().step_by(50) {
        println!("iteration {t:>3}: gbest {value:.6e}");
    }
    println!("final {:.6e} in {:.3}s", result.final_value, result.wall_time_seconds);
    Ok(())
}
