//! Error type shared across the crate.

use std::path::PathBuf;

/// Crate-wide error enum. Variants map onto the CLI exit-code families:
/// configuration (2), data (3), numerics (4).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{path}:{line}: parse error: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("data error: {0}")]
    Data(String),

    #[error("numerical divergence: {0}")]
    Numerics(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code family for this error (0 is success, handled by the CLI).
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Config(_) | Error::Validation(_) => 2,
            Error::Precondition(_) | Error::Parse { .. } | Error::Data(_) | Error::Io { .. } => 3,
            Error::Numerics(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
