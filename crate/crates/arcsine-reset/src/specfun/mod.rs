//! Special-function kernel.
//!
//! Everything transcendental the closed-form laws need, self-contained:
//!
//! | function | definition |
//! |----------|------------|
//! | [`ln_gamma`] | `ln Γ(x)`, `x > 0` |
//! | [`beta_fn`] | `B(α,β) = Γ(α)Γ(β)/Γ(α+β)` |
//! | [`bessel_j`] | `J_ν(x)`, real order `ν ≥ 0` |
//! | [`bessel_i`] | `I_ν(x)`, real order `ν ≥ 0` |
//! | [`lower_incomplete_gamma`] | `γ(s,x) = ∫₀ˣ t^{s−1} e^{−t} dt` |
//! | [`hyp_pfq_regularized`] | `pFq(a;b;z) / ∏ Γ(bᵢ)` |
//!
//! All series follow one truncation policy ([`SeriesControl`]): stop when
//! `|term| ≤ rel_tol·|partial sum|`, and fail with a convergence error
//! rather than return a silently truncated value.

mod bessel;
mod gamma;
mod hyper;
mod incgamma;

pub use bessel::{bessel_i, bessel_j};
pub use gamma::{beta_fn, ln_gamma};
pub use hyper::{hyp1f2_regularized, hyp2f2_regularized, hyp_pfq_regularized};
pub use incgamma::lower_incomplete_gamma;

use crate::{Error, Result};

/// Truncation policy for series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// Stop once `|term| ≤ rel_tol · |partial sum|`. Must lie in `(0, 1e-6]`.
    pub rel_tol: f64,
    /// Hard cap on the number of summed terms. Must be ≥ 50.
    pub max_terms: usize,
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-6) {
            return Err(Error::InvalidParameter(format!(
                "series rel_tol must lie in (0, 1e-6], got {rel_tol}"
            )));
        }
        if max_terms < 50 {
            return Err(Error::InvalidParameter(format!(
                "series max_terms must be >= 50, got {max_terms}"
            )));
        }
        Ok(SeriesControl { rel_tol, max_terms })
    }
}

impl Default for SeriesControl {
    /// Full f64 accuracy: `rel_tol = 1e-16`, `max_terms = 1000`.
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-16,
            max_terms: 1000,
        }
    }
}
