//! Runs a batch and writes traces, finals, the report and one graph to a
//! directory (first argument, default `vigpso-out`).

use std::path::PathBuf;

use vigpso::harness::export::{export_finals, export_graph, export_report, export_traces, Format};
use vigpso::harness::{compare, run_batch, ExperimentPlan};
use vigpso::Error;

fn main() -> vigpso::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "vigpso-out".into()));
    std::fs::create_dir_all(&dir).map_err(|source| Error::Io { path: dir.clone(), source })?;

    let mut plan = ExperimentPlan::protocol("dixon_price", 10, 0);
    plan.runs = 5;
    plan.trace_stride = 10;
    plan.keep_graphs = true;
    let results = run_batch(&plan)?;

    export_traces(&results, plan.trace_stride, &dir.join("traces.csv"), Format::Csv)?;
    export_finals(&results, &dir.join("finals.json"), Format::Json)?;
    export_report(&compare(&results)?, &dir.join("report.csv"), Format::Csv)?;
    if let Some(graph) = results.iter().find_map(|r| r.graph.as_ref()) {
        export_graph(graph, &dir.join("graph.csv"))?;
    }
    println!("wrote {}", dir.display());
    Ok(())
}
