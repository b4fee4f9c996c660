use std::path::PathBuf;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use spincent_core::centralizer::Backend;

use crate::error::{CliError, Result};

pub const DEFAULT_MAX_N: usize = 128;
pub const MAX_N_ENV: &str = "SPINCENT_MAX_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelArg {
    Plus,
    Minus,
}

impl From<LabelArg> for spincent_core::real_form::Label {
    fn from(l: LabelArg) -> Self {
        match l {
            LabelArg::Plus => Self::Plus,
            LabelArg::Minus => Self::Minus,
        }
    }
}

/// Options shared by every command, after flags and environment are merged.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub r: Option<usize>,
    pub m: Option<usize>,
    pub m2: Option<usize>,
    pub backend: BackendArg,
    pub max_n: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub label: Option<LabelArg>,
}

impl RunConfig {
    pub fn new(command: &str) -> Self {
        RunConfig {
            command: command.to_string(),
            r: None,
            m: None,
            m2: None,
            backend: BackendArg::Exact,
            max_n: DEFAULT_MAX_N,
            format: OutputFormat::Json,
            out: None,
            seed: 0,
            label: None,
        }
    }

    /// Errors with [`CliError::Guard`] when `n` exceeds the configured guard.
    pub fn check_size(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(CliError::Guard { n, max: self.max_n });
        }
        Ok(())
    }

    pub fn require_r(&self) -> Result<usize> {
        self.r.ok_or_else(|| CliError::Usage(format!("{} needs --r", self.command)))
    }
}

/// The guard from `--max-n`, else `SPINCENT_MAX_N`, else 128.
pub fn resolve_max_n(flag: Option<usize>, env: Option<&str>) -> Result<usize> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_N_ENV}={v:?} is not a non-negative integer"))),
        None => Ok(DEFAULT_MAX_N),
    }
}
