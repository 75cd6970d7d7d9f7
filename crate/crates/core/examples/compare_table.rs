//! A small comparison grid: both engines, several cells, one report table.

use vigpso::harness::{compare, run_batch, ExperimentPlan};

fn main() -> vigpso::Result<()> {
    let mut plan = ExperimentPlan::protocol("sphere", 10, 1000);
    plan.functions = vec!["sphere".into(), "rosenbrock".into(), "rastrigin".into()];
    plan.dimensions = vec![5, 10];
    plan.runs = 15;
    plan.pso_config.max_iterations = 150;
    plan.vigpso_config.base.max_iterations = 150;
    let results = run_batch(&plan)?;
    print!("{}", compare(&results)?.format_table());
    Ok(())
}
