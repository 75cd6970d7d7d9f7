//! VIGPSO and PSO side by side on the same seeds.

use vigpso::{pso_run, vigpso_run, Benchmark, BenchmarkKind, VigpsoConfig};

fn main() -> vigpso::Result<()> {
    let objective = Benchmark::new(BenchmarkKind::Sphere, 30)?;
    let mut config = VigpsoConfig::default();
    config.base.omega = 0.4;
    config.base.c2 = 2.0;
    config.learn.tau1 = 0.3;
    config.learn.tau2 = 0.3;
    for seed in 0..5 {
        let pso = pso_run(&config.base, &objective, seed)?;
        let vig = vigpso_run(&config, &objective, seed)?;
        let edges = vig.graph.as_ref().map_or(0, |g| g.edge_count());
        println!(
            "seed {seed}: pso {:.4e}  vigpso {:.4e}  ({edges} edges at the end)",
            pso.final_value, vig.final_value
        );
    }
    Ok(())
}
