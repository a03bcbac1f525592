use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON in {what}: {source}")]
    Json {
        what: String,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Toric(#[from] toric::Error),
    #[error("methods disagree: {0}")]
    Mismatch(String),
    #[error("wall-clock budget of {0} s exceeded")]
    Timeout(u64),
    #[error("{failed} of {total} fixtures failed")]
    FixturesFailed { failed: usize, total: usize },
}

impl CliError {
    /// Process exit code: 2 for usage problems, 3 for budget overruns, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Json { .. } | CliError::Io { .. } => 2,
            CliError::Timeout(_) | CliError::Toric(toric::Error::BudgetExceeded(_)) => 3,
            _ => 1,
        }
    }
}
