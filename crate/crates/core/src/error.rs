use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the optimizer, problem catalog or harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown problem `{name}`; valid names: {}", valid.join(", "))]
    UnknownProblem {
        name: String,
        valid: Vec<&'static str>,
    },

    #[error("dimension mismatch: problem expects {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("levy step: |v|^(1/beta) vanished on {0} consecutive draws")]
    LevyRetryExhausted(usize),

    #[error("cannot compute statistics over an empty record set")]
    EmptyRecords,

    #[error("reference entry is for `{reference}` but statistics are for `{stats}`")]
    ProblemMismatch { stats: String, reference: String },

    #[error("no reference data for problem `{0}`")]
    NoReference(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
