use std::io;

use thiserror::Error;

/// Failures that end a run, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("cannot write JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => 2,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 2,
        }
    }
}

impl From<intermean_core::Error> for CliError {
    fn from(e: intermean_core::Error) -> Self {
        match e {
            intermean_core::Error::Usage(msg) => CliError::Usage(msg.into()),
            intermean_core::Error::Domain(msg) => CliError::Domain(msg.into()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
