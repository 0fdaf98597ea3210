use std::path::PathBuf;

use thiserror::Error;

/// Failure of a subcommand, carrying its exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Network(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) | CliError::Io { .. } => 1,
            CliError::Usage(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Network(_) => 4,
        }
    }

    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
