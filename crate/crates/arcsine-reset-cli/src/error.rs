//! CLI error type and the exit-code contract.
//!
//! Exit codes are part of the interface and scripts depend on them:
//! 0 success, 2 usage or invalid parameters, 3 numeric convergence failure,
//! 4 validation threshold exceeded, 5 fit divergence. No other values are
//! produced (clap itself exits 2 on flag parse errors).

use arcsine_reset::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("config file {path}: {message}")]
    Config { path: String, message: String },

    #[error("{0}")]
    Core(#[from] CoreError),

    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),

    #[error("validation failed: {violations} of {checks} checks exceeded their threshold")]
    ValidationFailed { violations: usize, checks: usize },
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Config { .. } | CliError::Io(_) => 2,
            CliError::Core(CoreError::Convergence { .. }) => 3,
            CliError::Core(CoreError::FitDiverged { .. }) => 5,
            // Domain, invalid-parameter, budget, and insufficient-data errors
            // all trace back to what the user asked for.
            CliError::Core(_) => 2,
            CliError::ValidationFailed { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
