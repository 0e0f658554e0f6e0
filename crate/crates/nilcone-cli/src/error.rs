use std::fmt::Display;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or input that fails validation; exit code 2.
    #[error("{0}")]
    Invalid(String),
    /// A computation that should not fail did; exit code 1.
    #[error("internal: {0}")]
    Internal(String),
}

impl CliError {
    pub fn invalid(e: impl Display) -> Self {
        CliError::Invalid(e.to_string())
    }

    pub fn internal(e: impl Display) -> Self {
        CliError::Internal(e.to_string())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}
