//! Regularized generalized hypergeometric series
//! `ₚF̃_q(a; b; z) = Σ_n (a_1)_n ⋯ (a_p)_n / ((b_1)_n ⋯ (b_q)_n) · z^n / n!
//! / (Γ(b_1) ⋯ Γ(b_q))`
//! with the standard rising-factorial Pochhammer symbol.

use super::SeriesControl;
use crate::{Error, Result};

/// Generic series engine. All lower parameters must be positive (the only
/// regime this crate needs; it keeps the term recurrence free of poles).
/// With `p ≤ q` the series is entire and the recurrence terminates for any
/// finite `z` within the default term budget.
pub fn hyp_pfq_regularized(a: &[f64], b: &[f64], z: f64, ctl: SeriesControl) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::domain(
            "hyp_pfq_regularized",
            format!("requires finite argument, got {z}"),
        ));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::domain(
            "hyp_pfq_regularized",
            "upper parameters must be finite".to_string(),
        ));
    }
    let mut ln_norm = 0.0;
    for &bj in b {
        if !(bj > 0.0) || !bj.is_finite() {
            return Err(Error::domain(
                "hyp_pfq_regularized",
                format!("lower parameters must be positive, got {bj}"),
            ));
        }
        ln_norm += super::ln_gamma(bj)?;
    }
    let norm = (-ln_norm).exp();

    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..ctl.max_terms {
        let nf = n as f64;
        let mut ratio = z / (nf + 1.0);
        for &ai in a {
            ratio *= ai + nf;
        }
        for &bj in b {
            ratio /= bj + nf;
        }
        term *= ratio;
        sum += term;
        if term.abs() <= ctl.rel_tol * sum.abs().max(f64::MIN_POSITIVE) {
            return Ok(norm * sum);
        }
    }
    Err(Error::Convergence {
        op: "hypergeometric series",
        x: z,
        max_terms: ctl.max_terms,
    })
}

/// `₁F̃₂(a₁; b₁, b₂; z)`.
pub fn hyp1f2_regularized(a1: f64, b1: f64, b2: f64, z: f64, ctl: SeriesControl) -> Result<f64> {
    hyp_pfq_regularized(&[a1], &[b1, b2], z, ctl)
}

/// `₂F̃₂(a₁, a₂; b₁, b₂; z)`.
pub fn hyp2f2_regularized(
    a1: f64,
    a2: f64,
    b1: f64,
    b2: f64,
    z: f64,
    ctl: SeriesControl,
) -> Result<f64> {
    hyp_pfq_regularized(&[a1, a2], &[b1, b2], z, ctl)
}
