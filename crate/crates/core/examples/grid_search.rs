//! Grid search over a reduced grid, then a full-length run with the winner.

use vigpso::harness::{run_one, tune, TuningGrid};
use vigpso::{Algorithm, Benchmark};

fn main() -> vigpso::Result<()> {
    let grid = TuningGrid {
        omega_values: vec![0.4, 0.6],
        c_values: vec![1.5, 2.0],
        tau1_values: vec![0.3, 0.5],
        tau2_values: vec![0.3],
        interval_values: vec![5, 10],
        tuning_iterations: 60,
        tuning_runs: 3,
    };
    let result = tune(&grid, Algorithm::Vigpso, "sum_squares", 10, 7)?;
    let mut table = result.table.clone();
    table.sort_by(|a, b| a.mean_final.total_cmp(&b.mean_final));
    for s in table.iter().take(5) {
        println!(
            "w={} c1={} c2={} tau1={} tau2={} k={}  mean {:.4e}",
            s.omega, s.c1, s.c2, s.tau1, s.tau2, s.update_interval, s.mean_final
        );
    }
    let objective = Benchmark::by_name("sum_squares", 10)?;
    let run = run_one(Algorithm::Vigpso, &result.best.base, &result.best, &objective, 100)?;
    println!("full run with the winner: {:.4e}", run.final_value);
    Ok(())
}
