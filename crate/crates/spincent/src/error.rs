use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("N = {n} exceeds the size guard {max} (raise --max-n or SPINCENT_MAX_N)")]
    Guard { n: usize, max: usize },
    #[error(transparent)]
    Core(#[from] spincent_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("parse: {0}")]
    Parse(String),
}

impl CliError {
    /// `2` for usage and guard problems; computation errors count as failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
