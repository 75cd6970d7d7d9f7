//! CSV and JSON export of run traces, final values, comparison reports and
//! interaction graphs.
//!
//! Floats are written in shortest round-trip form; rounding only happens in
//! [`super::ComparisonReport::format_table`].

use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::compare::{ComparisonReport, Winner};
use crate::error::{Error, Result};
use crate::run::{Algorithm, RunResult};
use crate::vig::InteractionGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::argument(format!("unknown export format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub algorithm: Algorithm,
    pub function: String,
    pub dim: usize,
    pub seed: u64,
    pub iteration: usize,
    pub gbest: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FinalRow {
    pub algorithm: Algorithm,
    pub function: String,
    pub dim: usize,
    pub seed: u64,
    pub final_value: f64,
    pub wall_time_seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub function: String,
    pub dim: usize,
    pub pso_mean: f64,
    pub pso_std: f64,
    pub vigpso_mean: f64,
    pub vigpso_std: f64,
    pub u_statistic: f64,
    pub p_value: f64,
    pub winner: Winner,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeRow {
    pub i: usize,
    pub j: usize,
    pub weight: f64,
}

/// Gbest values at iterations `0, stride, 2*stride, ...` of every run.
pub fn trace_rows(results: &[RunResult], stride: usize) -> Vec<TraceRow> {
    let stride = stride.max(1);
    results
        .iter()
        .flat_map(|r| {
            r.trace
                .iter()
                .enumerate()
                .step_by(stride)
                .map(move |(iteration, &gbest)| TraceRow {
                    algorithm: r.algorithm,
                    function: r.function.clone(),
                    dim: r.dim,
                    seed: r.seed,
                    iteration,
                    gbest,
                })
        })
        .collect()
}

pub fn final_rows(results: &[RunResult]) -> Vec<FinalRow> {
    results
        .iter()
        .map(|r| FinalRow {
            algorithm: r.algorithm,
            function: r.function.clone(),
            dim: r.dim,
            seed: r.seed,
            final_value: r.final_value,
            wall_time_seconds: r.wall_time_seconds,
        })
        .collect()
}

pub fn report_rows(report: &ComparisonReport) -> Vec<ReportRow> {
    report
        .cells
        .iter()
        .map(|c| ReportRow {
            function: c.function.clone(),
            dim: c.dim,
            pso_mean: c.pso_summary.mean,
            pso_std: c.pso_summary.std_dev,
            vigpso_mean: c.vigpso_summary.mean,
            vigpso_std: c.vigpso_summary.std_dev,
            u_statistic: c.test.u_statistic,
            p_value: c.test.p_value,
            winner: c.winner,
        })
        .collect()
}

pub fn edge_rows(graph: &InteractionGraph) -> Vec<EdgeRow> {
    graph
        .edges()
        .into_iter()
        .map(|(i, j, weight)| EdgeRow { i, j, weight })
        .collect()
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
}

/// Writes rows as CSV with a header line, or as a JSON array.
pub fn write_rows<T: Serialize>(rows: &[T], path: &Path, format: Format) -> Result<()> {
    let mut out = create(path)?;
    match format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(&mut out);
            for row in rows {
                writer.serialize(row).map_err(|source| Error::Csv {
                    path: path.to_path_buf(),
                    source,
                })?;
            }
            writer.flush().map_err(|source| Error::Io {
                path: path.to_path_buf(),
                source,
            })?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows).map_err(|source| Error::Json {
                path: path.to_path_buf(),
                source,
            })?;
        }
    }
    out.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_rows<T: DeserializeOwned>(path: &Path, format: Format) -> Result<Vec<T>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    match format {
        Format::Csv => csv::Reader::from_reader(BufReader::new(file))
            .deserialize()
            .collect::<std::result::Result<Vec<T>, _>>()
            .map_err(|source| Error::Csv {
                path: path.to_path_buf(),
                source,
            }),
        Format::Json => serde_json::from_reader(BufReader::new(file)).map_err(|source| Error::Json {
            path: path.to_path_buf(),
            source,
        }),
    }
}

pub fn export_traces(results: &[RunResult], stride: usize, path: &Path, format: Format) -> Result<()> {
    write_rows(&trace_rows(results, stride), path, format)
}

pub fn export_finals(results: &[RunResult], path: &Path, format: Format) -> Result<()> {
    write_rows(&final_rows(results), path, format)
}

pub fn export_report(report: &ComparisonReport, path: &Path, format: Format) -> Result<()> {
    write_rows(&report_rows(report), path, format)
}

/// `i,j,weight` for every edge with `i < j`.
pub fn export_graph(graph: &InteractionGraph, path: &Path) -> Result<()> {
    write_rows(&edge_rows(graph), path, Format::Csv)
}
