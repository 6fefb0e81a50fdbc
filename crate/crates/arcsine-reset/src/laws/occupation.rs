//! Law of the occupation fraction: the time the reset Brownian path spends
//! at or above the origin within the unit window.
//!
//! Conditioned on `k` resets the fraction follows a symmetric Beta law with
//! both parameters `(k+1)/2`; mixing over the Poisson reset count gives the
//! closed-form unconditional density and central moments below.

use super::{check_unit_open, CFQuery, ResetModel};
use crate::specfun::{bessel_i, bessel_j, hyp1f2_regularized, ln_gamma, SeriesControl};
use crate::Result;
use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};

/// Density at `t ∈ (0,1)` of the occupation fraction given exactly `k`
/// resets: `Beta((k+1)/2, (k+1)/2)`, evaluated in log space so large `k`
/// degrades to underflow in the tails rather than overflow in the
/// normalizer.
pub fn pdf_given_k(t: f64, k: u32) -> Result<f64> {
    check_unit_open("occupation pdf_given_k", t)?;
    let a = 0.5 * (f64::from(k) + 1.0);
    let ln_beta = 2.0 * ln_gamma(a)? - ln_gamma(f64::from(k) + 1.0)?;
    Ok(((a - 1.0) * (t * (1.0 - t)).ln() - ln_beta).exp())
}

/// Characteristic function `E[e^{iωT} | k resets]`.
///
/// The law is a shifted/scaled symmetric Beta, so the value factors as
/// `e^{iω/2}·A(ω)` with real `A`. For `ω²/16 ≤ k/2 + 1` the Γ prefactors
/// cancel the Bessel series scale exactly (Legendre duplication) and `A` is
/// a bare ₀F₁ sum whose terms decrease from the first, with no cancellation
/// and no extreme magnitudes at any `k`. Beyond that the value oscillates
/// and `A` is assembled from `J_{k/2}(ω/2)` with the prefactor combined in
/// log space.
pub fn cf_given_k(q: CFQuery) -> Result<Complex64> {
    if q.omega == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if q.omega < 0.0 {
        // Real-valued density: Hermitian symmetry.
        let mirrored = cf_given_k(CFQuery {
            omega: -q.omega,
            ..q
        })?;
        return Ok(mirrored.conj());
    }
    let ctl = SeriesControl::default();
    let omega = q.omega;
    let nu = f64::from(q.k) / 2.0;
    let z = omega * omega / 16.0;
    let a = if z <= nu + 1.0 {
        hyp0f1_plain(nu + 1.0, -z, ctl)?
    } else {
        let j = bessel_j(nu, 0.5 * omega, ctl)?;
        if j == 0.0 {
            0.0
        } else {
            let ln_pref = ln_gamma(f64::from(q.k) + 1.0)? + 0.5 * PI.ln()
                - ln_gamma(nu + 0.5)?
                - nu * omega.ln();
            j.signum() * (ln_pref + j.abs().ln()).exp()
        }
    };
    let half = 0.5 * omega;
    Ok(Complex64::new(a * half.cos(), a * half.sin()))
}

/// Unconditional density of the occupation fraction at resetting rate
/// `model.rate`:
/// `e^{−r}(t(1−t))^{−1/2}·[ r√(t(1−t))·I₀(2r√(t(1−t))) +
/// ₁F̃₂(1; 1/2, 1/2; r²t(1−t)) ]`.
/// At `r = 0` the bracket collapses to `1/π` and the arcsine density
/// returns without any special casing.
pub fn pdf(t: f64, model: ResetModel) -> Result<f64> {
    check_unit_open("occupation pdf", t)?;
    let r = model.rate;
    let ctl = SeriesControl::default();
    let prod = t * (1.0 - t);
    let root = prod.sqrt();
    let bessel_part = r * root * bessel_i(0.0, 2.0 * r * root, ctl)?;
    let hyper_part = hyp1f2_regularized(1.0, 0.5, 0.5, r * r * prod, ctl)?;
    Ok((-r).exp() / root * (bessel_part + hyper_part))
}

/// Central moment `E[(T − 1/2)^j]`.
///
/// Zero for odd `j` (the law is symmetric about 1/2). For even `j`:
/// `e^{−r}·Γ((j+1)/2)/2^j·[ (2/r)^{(j−1)/2} I_{(j+1)/2}(r) +
/// ₁F̃₂(1; 1/2, 1+j/2; (r/2)²) ]`,
/// with the first bracket term folded through the Bessel series scale into
/// `(r/2)·₀F₁((j+3)/2; (r/2)²)/Γ((j+3)/2)`, which removes the 0·∞ form at
/// `r = 0` analytically (the arcsine moments come out of the same
/// expression).
pub fn central_moment(j: u32, model: ResetModel) -> Result<f64> {
    if j == 0 {
        return Ok(1.0);
    }
    if j % 2 == 1 {
        return Ok(0.0);
    }
    let r = model.rate;
    let jf = f64::from(j);
    let half = 0.5 * (jf + 1.0);
    let ctl = SeriesControl::default();
    let quarter = 0.25 * r * r;
    let bessel_term =
        0.5 * r * hyp0f1_plain(half + 1.0, quarter, ctl)? / ln_gamma(half + 1.0)?.exp();
    let hyper_term = hyp1f2_regularized(1.0, 0.5, 1.0 + 0.5 * jf, quarter, ctl)?;
    let pref = (-r).exp() * (ln_gamma(half)? - jf * LN_2).exp();
    Ok(pref * (bessel_term + hyper_term))
}

/// Unregularized `₀F₁(b; z) = Σ z^n/((b)_n n!)` in plain f64. Only called
/// where term magnitudes cannot cancel: `z ≥ 0`, or `|z| ≤ b`.
fn hyp0f1_plain(b: f64, z: f64, ctl: SeriesControl) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..ctl.max_terms {
        let nf = n as f64;
        term *= z / ((b + nf) * (nf + 1.0));
        sum += term;
        if term.abs() <= ctl.rel_tol * sum.abs().max(f64::MIN_POSITIVE) {
            return Ok(sum);
        }
    }
    Err(crate::Error::Convergence {
        op: "confluent limit series",
        x: z,
        max_terms: ctl.max_terms,
    })
}
