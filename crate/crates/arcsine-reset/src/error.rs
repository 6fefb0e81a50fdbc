use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error in {op}: {message}")]
    Domain {
        op: &'static str,
        message: String,
    },

    /// A series or continued fraction failed to reach the requested
    /// tolerance within its term cap. Never silently degraded.
    #[error("{op} did not converge within {max_terms} terms (x = {x})")]
    Convergence {
        op: &'static str,
        x: f64,
        max_terms: usize,
    },

    /// A model, grid, or control parameter violates its invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An ensemble request exceeds the configured step budget.
    #[error("ensemble needs {required} path steps, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    /// A statistic was requested on too few samples.
    #[error("insufficient data: got {got} samples, need at least {need}")]
    InsufficientData { got: usize, need: usize },

    /// Every optimizer start hit the iteration cap before the simplex
    /// contracted to tolerance.
    #[error("fit diverged: best residual norm {best_residual}")]
    FitDiverged { best_residual: f64 },
}

impl Error {
    pub(crate) fn domain(op: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            op,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
