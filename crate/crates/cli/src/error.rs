use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cdsreg_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("methods disagree: {0}")]
    Mismatch(String),
}

impl CliError {
    /// 2 for empty input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(cdsreg_core::Error::EmptyInput) => 2,
            _ => 1,
        }
    }
}
