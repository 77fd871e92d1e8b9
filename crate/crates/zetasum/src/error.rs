//! Error type shared across the crate.
//!
//! Exit-code mapping for the CLI: I/O failures are 2, numerical-consistency
//! failures are 3, everything else (domain, validation, coverage, resource)
//! is 1.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested at the pole s = 1.
    #[error("pole at s = 1")]
    Pole,

    /// Evaluation too close to a pole (zero of ζ or s = 1).
    #[error("input within {distance:.3e} of a pole (threshold {threshold:.1e}); shift the point or window")]
    PoleProximity { distance: f64, threshold: f64 },

    /// A height beyond what the zero table covers.
    #[error("height {requested} exceeds table coverage (max_height = {max_height})")]
    Coverage { requested: f64, max_height: f64 },

    /// Malformed input file; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    /// A zeros file with no ordinates.
    #[error("zero table is empty")]
    EmptyTable,

    /// Zero count disagrees with the Riemann-von Mangoldt count.
    #[error(
        "completeness check failed on [{lo:.3}, {hi:.3}]: found {found} zeros below {hi:.3}, \
         smooth count predicts {expected:.3}; a close pair may have been missed"
    )]
    Completeness {
        lo: f64,
        hi: f64,
        found: usize,
        expected: f64,
    },

    /// Two routes to the same quantity disagree beyond tolerance.
    #[error("numerical consistency failure: {0}")]
    Consistency(String),

    /// A work guard tripped before the computation got out of hand.
    #[error("resource guard: {0}")]
    Resource(String),

    /// Invalid argument or configuration value.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// CLI exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } => 2,
            Error::Consistency(_) => 3,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
