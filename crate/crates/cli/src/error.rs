use std::process::ExitCode;

use spinterf_core::Error as CoreError;
use thiserror::Error;

/// Failure classes, each with its own process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad usage, configuration or plan: exit 2.
    #[error("{0}")]
    Config(String),
    /// Valid input outside the model's domain: exit 3.
    #[error("{0}")]
    Domain(String),
    /// Exit 4.
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Config(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 4,
        })
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        let msg = err.to_string();
        match err {
            CoreError::InvalidParameter { .. }
            | CoreError::InvalidGrid(_)
            | CoreError::Plan(_)
            | CoreError::Plot(_) => CliError::Config(msg),
            CoreError::Domain(_) | CoreError::NotNested(_) | CoreError::InsufficientData(_) => {
                CliError::Domain(msg)
            }
            CoreError::Io { .. } | CoreError::Format(_) => CliError::Io(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}
