use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the detection library.
#[derive(Debug, Error)]
pub enum Error {
    /// An observation or parameter vector has the wrong length.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The caller violated an API precondition (empty input, stepping a
    /// stopped detector, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// A windowed estimator was queried before its warm-up completed.
    #[error("not ready: {0}")]
    NotReady(String),

    /// The window is too small for the estimated post-change drift to be
    /// positive, so the delay bound is undefined.
    #[error("infeasible window w={window}: estimated post-change drift {ihat0} is not positive")]
    InfeasibleWindow { window: usize, ihat0: f64 },

    /// A configuration file or flag set could not be interpreted.
    #[error("config error: {0}")]
    Config(String),

    /// A text input (observation file, CSV) failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An I/O failure, annotated with the path involved.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
