//! Law of the last zero: the final time in [0, 1] at which the reset
//! Brownian path touches the origin.
//!
//! The density is an explicit two-component mixture: with probability
//! `e^{−r}` no reset occurs and the classical arcsine law applies; the
//! complementary component accounts for paths whose last zero is at or
//! after the final reset.

use super::{check_unit_open, ResetModel};
use crate::specfun::{hyp2f2_regularized, ln_gamma, lower_incomplete_gamma, SeriesControl};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Below this rate the closed-form mean/variance switch to Taylor
/// expansions: both divide exponential differences by powers of `r` and
/// shed all significant digits as `r → 0`.
const SMALL_RATE: f64 = 1e-3;

/// Density of the last zero at `t ∈ (0,1)`:
/// `e^{−r}/(π√(t(1−t))) + √r·e^{r(t−1)}/(π√(1−t))·γ(1/2, rt)`.
pub fn pdf(t: f64, model: ResetModel) -> Result<f64> {
    check_unit_open("last_zero pdf", t)?;
    let r = model.rate;
    let no_reset = (-r).exp() / (PI * (t * (1.0 - t)).sqrt());
    if r == 0.0 {
        return Ok(no_reset);
    }
    let after_reset = r.sqrt() * (r * (t - 1.0)).exp() / (PI * (1.0 - t).sqrt())
        * lower_incomplete_gamma(0.5, r * t)?;
    Ok(no_reset + after_reset)
}

/// `E[L] = 1 + (e^{−r} − 1)/(2r)`, with a 4-term Taylor expansion below
/// [`SMALL_RATE`]. Rises from the arcsine mean 1/2 toward 1.
pub fn mean(model: ResetModel) -> f64 {
    let r = model.rate;
    if r < SMALL_RATE {
        return 0.5 + r * (0.25 + r * (-1.0 / 12.0 + r / 48.0));
    }
    1.0 + (-r).exp_m1() / (2.0 * r)
}

/// `Var[L] = (2 − e^{−r}(1 + 3r) − e^{−2r})/(4r²)`, Taylor-expanded below
/// [`SMALL_RATE`]. Decays from the arcsine variance 1/8 toward 0.
pub fn variance(model: ResetModel) -> f64 {
    let r = model.rate;
    if r < SMALL_RATE {
        return 0.125 + r * r * (-5.0 / 96.0 + r * (3.0 / 80.0 - r * 47.0 / 2880.0));
    }
    let e1 = (-r).exp();
    let e2 = (-2.0 * r).exp();
    (2.0 - e1 * (1.0 + 3.0 * r) - e2) / (4.0 * r * r)
}

/// Raw moment `E[L^n]` for `n ≥ 1`:
/// `e^{−r}·[ Γ(n+1/2)/(√π·Γ(n+1)) + r·Γ(n+3/2)·₂F̃₂(1, n+3/2; 3/2, n+2; r) ]`.
pub fn raw_moment(n: u32, model: ResetModel) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "raw moment order must be a positive integer".to_string(),
        ));
    }
    let r = model.rate;
    let nf = f64::from(n);
    let ctl = SeriesControl::default();
    let arcsine_part = (ln_gamma(0.5 + nf)? - 0.5 * PI.ln() - ln_gamma(1.0 + nf)?).exp();
    let reset_part = r
        * ln_gamma(1.5 + nf)?.exp()
        * hyp2f2_regularized(1.0, 1.5 + nf, 1.5, 2.0 + nf, r, ctl)?;
    Ok((-r).exp() * (arcsine_part + reset_part))
}

/// Density of the mixture component carried by paths with at least one
/// reset: `√r·e^{rt}/(π(e^r − 1)√(1−t))·γ(1/2, rt)`, written against
/// `1 − e^{−r}` so large rates cannot overflow. Satisfies
/// `pdf = e^{−r}·arcsine + (1 − e^{−r})·reset_component_pdf` identically.
/// As `r → 0` it approaches the density `(2/π)√(t/(1−t))`.
pub fn reset_component_pdf(t: f64, model: ResetModel) -> Result<f64> {
    check_unit_open("last_zero reset_component_pdf", t)?;
    let r = model.rate;
    if r <= 0.0 {
        return Err(Error::domain(
            "last_zero reset_component_pdf",
            "requires a positive rate; at rate 0 the component has zero mixture weight".to_string(),
        ));
    }
    let weight = -(-r).exp_m1();
    Ok(r.sqrt() * (r * (t - 1.0)).exp() / (PI * (1.0 - t).sqrt() * weight)
        * lower_incomplete_gamma(0.5, r * t)?)
}
