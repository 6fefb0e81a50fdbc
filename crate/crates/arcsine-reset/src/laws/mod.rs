//! Closed-form densities, characteristic functions, and moments for the
//! occupation time and the last zero of reset Brownian motion on [0, 1],
//! plus the classical arcsine baseline both laws collapse to at rate 0.

pub mod last_zero;
pub mod occupation;

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Physical parameters of the process. The derivations behind this crate
/// fix the horizon to 1 and the reset target to the starting point 0; both
/// are carried as fields so downstream records are self-describing, but no
/// constructor produces other values (rescale inputs instead).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResetModel {
    /// Poisson resetting rate `r ≥ 0` per unit horizon.
    pub rate: f64,
    /// Observation window length (always 1).
    pub horizon: f64,
    /// Position the process is returned to at each reset (always 0).
    pub reset_point: f64,
}

impl ResetModel {
    /// A model with rate `r ≥ 0` on the unit horizon.
    pub fn new(rate: f64) -> Result<Self> {
        if !(rate >= 0.0) || !rate.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "resetting rate must be finite and >= 0, got {rate}"
            )));
        }
        Ok(ResetModel {
            rate,
            horizon: 1.0,
            reset_point: 0.0,
        })
    }
}

/// A characteristic-function evaluation point: frequency ω for the law of
/// the occupation time conditioned on `k` resets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CFQuery {
    /// Fourier frequency; any finite real.
    pub omega: f64,
    /// Conditioning reset count.
    pub k: u32,
}

impl CFQuery {
    pub fn new(omega: f64, k: u32) -> Result<Self> {
        if !omega.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "frequency must be finite, got {omega}"
            )));
        }
        Ok(CFQuery { omega, k })
    }
}

/// Classical arcsine density `1/(π√(t(1−t)))` on the open unit interval.
pub fn arcsine_pdf(t: f64) -> Result<f64> {
    check_unit_open("arcsine_pdf", t)?;
    Ok(1.0 / (PI * (t * (1.0 - t)).sqrt()))
}

/// Classical arcsine CDF `(2/π)·asin(√t)`, clamped outside [0, 1].
pub fn arcsine_cdf(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else if t >= 1.0 {
        1.0
    } else {
        2.0 / PI * t.sqrt().asin()
    }
}

/// Shared domain check for densities on the open unit interval.
pub(crate) fn check_unit_open(op: &'static str, t: f64) -> Result<()> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::domain(
            op,
            format!("density is defined on the open interval (0,1), got t = {t}"),
        ));
    }
    Ok(())
}
