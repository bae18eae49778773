//! CSV and JSON export of experiment results.
//!
//! * runs CSV: `run_index,seed,best_objective,violation,evals_used`
//! * trace CSV: `run_index,generation,best_objective`
//! * JSON: the whole [`ExperimentOutcome`], including the configuration, so a
//!   file is enough to rerun the experiment.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::experiment::ExperimentOutcome;
use crate::search::RunRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown export format `{other}`"))),
        }
    }
}

#[derive(Serialize)]
struct RunRow {
    run_index: usize,
    seed: u64,
    best_objective: f64,
    violation: f64,
    evals_used: u64,
}

#[derive(Serialize)]
struct TraceRow {
    run_index: usize,
    generation: u64,
    best_objective: f64,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path, err: csv::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source: std::io::Error::other(err),
    }
}

pub fn runs_csv<W: Write>(records: &[RunRecord], out: W) -> std::result::Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record([
        "run_index",
        "seed",
        "best_objective",
        "violation",
        "evals_used",
    ])?;
    for r in records {
        w.serialize(RunRow {
            run_index: r.run_index,
            seed: r.rng_seed,
            best_objective: r.best.objective,
            violation: r.best.violation.total,
            evals_used: r.evals_used,
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn trace_csv<W: Write>(records: &[RunRecord], out: W) -> std::result::Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(["run_index", "generation", "best_objective"])?;
    for r in records {
        for t in &r.trace {
            w.serialize(TraceRow {
                run_index: r.run_index,
                generation: t.generation,
                best_objective: t.best_objective,
            })?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn to_json(outcome: &ExperimentOutcome) -> Result<String> {
    Ok(serde_json::to_string_pretty(outcome)?)
}

pub fn from_json(text: &str) -> Result<ExperimentOutcome> {
    Ok(serde_json::from_str(text)?)
}

/// Writes `outcome` to `path` as runs CSV or JSON.
pub fn export_results(outcome: &ExperimentOutcome, format: Format, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(io_err(path))?;
    let mut out = BufWriter::new(file);
    match format {
        Format::Csv => runs_csv(&outcome.records, &mut out).map_err(|e| csv_err(path, e))?,
        Format::Json => {
            let text = to_json(outcome)?;
            out.write_all(text.as_bytes()).map_err(io_err(path))?;
            out.write_all(b"\n").map_err(io_err(path))?;
        }
    }
    out.flush().map_err(io_err(path))
}

pub fn export_trace(records: &[RunRecord], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(io_err(path))?;
    let mut out = BufWriter::new(file);
    trace_csv(records, &mut out).map_err(|e| csv_err(path, e))?;
    out.flush().map_err(io_err(path))
}
