use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Syntax { path: PathBuf, source: blockgap::Error },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("{context}: {source}")]
    Precondition { context: String, source: blockgap::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
    #[error("{0} invariant check(s) failed")]
    Verification(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Read { .. } | CliError::Syntax { .. } | CliError::Argument(_) => 2,
            CliError::Precondition { .. } => 3,
            CliError::Write(_) | CliError::Verification(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Attaches a context to library errors, which all signal a violated
/// precondition.
pub trait Context<T> {
    fn context(self, what: impl Into<String>) -> CliResult<T>;
}

impl<T> Context<T> for blockgap::Result<T> {
    fn context(self, what: impl Into<String>) -> CliResult<T> {
        self.map_err(|source| CliError::Precondition { context: what.into(), source })
    }
}
