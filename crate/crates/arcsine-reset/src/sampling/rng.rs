//! Stream derivation and elementary draws shared by both samplers.

use crate::laws::ResetModel;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Odd multiplier of the Weyl sequence feeding the mix (2^64/φ).
const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64 finalizer: bijective avalanche on 64 bits.
fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The per-trajectory stream: ChaCha8 keyed by a fixed mix of the master
/// seed and the trajectory index. The mix is injective in the index for a
/// fixed seed, so streams never collide within an ensemble, and the
/// function is pure, so any worker can derive any stream.
pub fn trajectory_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mixed = splitmix64(master_seed.wrapping_add(index.wrapping_mul(GOLDEN_GAMMA)));
    ChaCha8Rng::seed_from_u64(mixed)
}

/// Event times of a Poisson process of intensity `model.rate` on [0, 1):
/// cumulative exponential gaps, truncated at the horizon, strictly
/// increasing. Rate 0 returns an empty list without touching the stream.
pub fn draw_reset_times<R: Rng + ?Sized>(model: ResetModel, rng: &mut R) -> Vec<f64> {
    let mut times = Vec::new();
    if model.rate == 0.0 {
        return times;
    }
    let mut t = 0.0_f64;
    loop {
        let u: f64 = rng.random();
        let gap = -(1.0 - u).ln() / model.rate;
        if gap == 0.0 {
            // u hit 0 exactly (probability 2^-53); a zero gap would break
            // strict monotonicity, and rejecting a null set is harmless.
            continue;
        }
        t += gap;
        if t >= 1.0 {
            return times;
        }
        times.push(t);
    }
}

/// Exact arcsine draw by inverse CDF: `sin²(πU/2)`.
pub(crate) fn sample_arcsine<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u: f64 = rng.random();
    let s = (std::f64::consts::FRAC_PI_2 * u).sin();
    s * s
}
