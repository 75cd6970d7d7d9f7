use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use vigpso::benchmarks::{LOWER_BOUND, UPPER_BOUND};
use vigpso::harness::config::{load_grid, load_pso_config, load_vigpso_config, ConfigFile};
use vigpso::harness::export::{export_finals, export_graph, export_report, export_traces, write_rows, Format};
use vigpso::harness::{compare, run_batch, run_one, tune, worker_count, ExperimentPlan, TuningGrid};
use vigpso::stats::summarize;
use vigpso::{Algorithm, Benchmark, BenchmarkKind, Error, PsoConfig, Result, VigpsoConfig};

#[derive(Parser)]
#[command(name = "vigpso", version, about = "PSO and VIGPSO experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the benchmark functions.
    Bench,
    /// Run one algorithm on one function.
    Run {
        #[arg(long)]
        algo: Algorithm,
        #[arg(long)]
        function: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        runs: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long)]
        trace_stride: Option<usize>,
        /// Write the final graph of every VIGPSO run.
        #[arg(long)]
        export_graph: bool,
    },
    /// Run both algorithms over a grid of cells and test the difference.
    Compare {
        #[arg(long, value_delimiter = ',', required = true)]
        functions: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long)]
        runs: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        pso_config: Option<PathBuf>,
        #[arg(long)]
        vigpso_config: Option<PathBuf>,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Grid-search the parameters of one algorithm.
    Tune {
        #[arg(long)]
        algo: Algorithm,
        #[arg(long)]
        function: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        grid: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
}

fn create_dir(path: &Path) -> Result<()> {
    std::fs::create_dir_all(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn bench() {
    println!("{:<14} {:<20} {:<16} formula", "name", "class", "bounds");
    for kind in BenchmarkKind::ALL {
        println!(
            "{:<14} {:<20} {:<16} {}",
            kind.name(),
            kind.separability().to_string(),
            format!("[{LOWER_BOUND}, {UPPER_BOUND}]^d"),
            kind.formula()
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn run(
    algo: Algorithm,
    function: &str,
    dim: usize,
    runs: Option<usize>,
    seed: u64,
    config: Option<&Path>,
    out: Option<&Path>,
    format: Format,
    trace_stride: Option<usize>,
    graphs: bool,
) -> Result<()> {
    let protocol = ExperimentPlan::protocol(function, dim, seed);
    let runs = runs.unwrap_or(protocol.runs);
    let stride = trace_stride.unwrap_or(protocol.trace_stride);
    if runs == 0 || stride == 0 {
        return Err(Error::Argument("--runs and --trace-stride must be positive".into()));
    }
    let (pso, vig) = match config {
        Some(path) => (load_pso_config(path)?, load_vigpso_config(path)?),
        None => (PsoConfig::default(), VigpsoConfig::default()),
    };
    pso.validate()?;
    vig.validate()?;
    let objective = Benchmark::by_name(function, dim)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count())
        .build()
        .expect("failed to build worker pool");
    let results = pool.install(|| {
        (0..runs as u64)
            .into_par_iter()
            .map(|r| run_one(algo, &pso, &vig, &objective, seed.wrapping_add(r)))
            .collect::<Result<Vec<_>>>()
    })?;

    let finals: Vec<f64> = results.iter().map(|r| r.final_value).collect();
    let s = summarize(&finals)?;
    println!(
        "{algo} {function} d={dim}: {runs} runs, mean {:.6e}, std {:.6e}, median {:.6e}, best {:.6e}",
        s.mean, s.std_dev, s.median, s.min
    );

    if let Some(dir) = out {
        create_dir(dir)?;
        export_traces(&results, stride, &dir.join(format!("traces.{format}")), format)?;
        export_finals(&results, &dir.join(format!("finals.{format}")), format)?;
        if graphs {
            for r in &results {
                if let Some(graph) = &r.graph {
                    export_graph(graph, &dir.join(format!("graph_seed{}.csv", r.seed)))?;
                }
            }
        }
        println!("wrote {}", dir.display());
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn compare_cmd(
    functions: Vec<String>,
    dims: Vec<usize>,
    runs: Option<usize>,
    seed: u64,
    pso_config: Option<&Path>,
    vigpso_config: Option<&Path>,
    out: &Path,
    format: Format,
) -> Result<()> {
    // the largest dimension decides the run count and trace stride defaults
    let largest = dims.iter().copied().max().unwrap_or(0);
    let mut plan = ExperimentPlan::protocol("", largest, seed);
    plan.functions = functions;
    plan.dimensions = dims;
    if let Some(runs) = runs {
        plan.runs = runs;
    }
    if let Some(path) = pso_config {
        plan.pso_config = load_pso_config(path)?;
    }
    if let Some(path) = vigpso_config {
        plan.vigpso_config = load_vigpso_config(path)?;
    }
    let results = run_batch(&plan)?;
    let report = compare(&results)?;
    print!("{}", report.format_table());
    create_dir(out)?;
    export_report(&report, &out.join(format!("report.{format}")), format)?;
    export_finals(&results, &out.join(format!("finals.{format}")), format)?;
    export_traces(&results, plan.trace_stride, &out.join(format!("traces.{format}")), format)?;
    println!("wrote {}", out.display());
    Ok(())
}

fn tune_cmd(
    algo: Algorithm,
    function: &str,
    dim: usize,
    grid: Option<&Path>,
    seed: u64,
    out: &Path,
) -> Result<()> {
    let grid = match grid {
        Some(path) => load_grid(path)?,
        None => TuningGrid::default(),
    };
    let result = tune(&grid, algo, function, dim, seed)?;
    let best = &result.best_score;
    let config = match algo {
        Algorithm::Pso => ConfigFile::from_pso(&result.best.base),
        Algorithm::Vigpso => ConfigFile::from_vigpso(&result.best),
    };
    println!(
        "{algo} {function} d={dim}: {} combinations, best mean {:.6e}",
        result.table.len(),
        best.mean_final
    );
    print!("{}", config.to_toml());
    create_dir(out)?;
    let best_path = out.join(format!("best_{algo}_{function}_{dim}.toml"));
    std::fs::write(&best_path, config.to_toml()).map_err(|source| Error::Io {
        path: best_path.clone(),
        source,
    })?;
    write_rows(&result.table, &out.join(format!("scores_{algo}_{function}_{dim}.csv")), Format::Csv)?;
    println!("wrote {}", out.display());
    Ok(())
}

fn main() -> ExitCode {
    let outcome = match Cli::parse().command {
        Command::Bench => {
            bench();
            Ok(())
        }
        Command::Run {
            algo,
            function,
            dim,
            runs,
            seed,
            config,
            out,
            format,
            trace_stride,
            export_graph,
        } => run(
            algo,
            &function,
            dim,
            runs,
            seed,
            config.as_deref(),
            out.as_deref(),
            format,
            trace_stride,
            export_graph,
        ),
        Command::Compare {
            functions,
            dims,
            runs,
            seed,
            pso_config,
            vigpso_config,
            out,
            format,
        } => compare_cmd(
            functions,
            dims,
            runs,
            seed,
            pso_config.as_deref(),
            vigpso_config.as_deref(),
            &out,
            format,
        ),
        Command::Tune {
            algo,
            function,
            dim,
            grid,
            seed,
            out,
        } => tune_cmd(algo, &function, dim, grid.as_deref(), seed, &out),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
