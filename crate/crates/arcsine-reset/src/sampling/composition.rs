//! Composition samplers: exact-in-distribution draws of the occupation
//! time and the last zero that need no path discretization.
//!
//! Between consecutive resets the process is an independent Brownian
//! stretch, so the occupation time decomposes into a length-weighted sum of
//! independent arcsine variables, and the last zero into the last reset
//! plus an arcsine-scaled remainder.

use super::rng::{draw_reset_times, sample_arcsine, trajectory_rng};
use crate::laws::ResetModel;
use crate::{Error, Result};
use rand::Rng;
use rayon::prelude::*;

/// One occupation-time draw: `T = Σᵢ (τᵢ₊₁ − τᵢ)·Aᵢ` over the partition
/// `0 = τ₀ < τ₁ < … < τ_k < τ_{k+1} = 1` of reset times, with `Aᵢ` iid
/// arcsine. Rate 0 degenerates to a single arcsine draw.
pub fn sample_occupation_composition<R: Rng + ?Sized>(model: ResetModel, rng: &mut R) -> f64 {
    let resets = draw_reset_times(model, rng);
    let mut total = 0.0;
    let mut prev = 0.0;
    for &tau in resets.iter().chain(std::iter::once(&1.0)) {
        total += (tau - prev) * sample_arcsine(rng);
        prev = tau;
    }
    total.min(1.0)
}

/// One last-zero draw: `L = τ_k + (1 − τ_k)·A` with `τ_k` the final reset
/// time (0 when none) and `A` arcsine: the post-reset stretch restarts at
/// the origin, so its own last zero is arcsine over the remainder.
pub fn sample_last_zero_composition<R: Rng + ?Sized>(model: ResetModel, rng: &mut R) -> f64 {
    let resets = draw_reset_times(model, rng);
    let last = resets.last().copied().unwrap_or(0.0);
    last + (1.0 - last) * sample_arcsine(rng)
}

/// `n` occupation-time draws with the same per-index stream derivation the
/// path engine uses: sample `i` is a pure function of `(master_seed, i)`.
pub fn occupation_composition_ensemble(
    model: ResetModel,
    n: usize,
    master_seed: u64,
) -> Result<Vec<f64>> {
    indexed_draws(n, master_seed, move |rng| {
        sample_occupation_composition(model, rng)
    })
}

/// `n` last-zero draws, seeded identically to
/// [`occupation_composition_ensemble`].
pub fn last_zero_composition_ensemble(
    model: ResetModel,
    n: usize,
    master_seed: u64,
) -> Result<Vec<f64>> {
    indexed_draws(n, master_seed, move |rng| {
        sample_last_zero_composition(model, rng)
    })
}

fn indexed_draws<F>(n: usize, master_seed: u64, draw: F) -> Result<Vec<f64>>
where
    F: Fn(&mut rand_chacha::ChaCha8Rng) -> f64 + Sync,
{
    if n == 0 {
        return Err(Error::InvalidParameter(
            "ensemble size must be at least 1".to_string(),
        ));
    }
    Ok((0..n as u64)
        .into_par_iter()
        .map(|i| draw(&mut trajectory_rng(master_seed, i)))
        .collect())
}
