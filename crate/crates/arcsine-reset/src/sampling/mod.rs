//! Seeded Monte-Carlo engine: full-path simulation of Brownian motion with
//! Poissonian resetting, plus composition samplers that draw the occupation
//! time and last zero exactly in distribution without a path.
//!
//! Reproducibility contract: all randomness of trajectory `i` under master
//! seed `s` comes from a dedicated stream derived by a fixed 64-bit mix of
//! `(s, i)`, so ensembles are identical for any worker count or schedule.

mod composition;
mod path;
mod rng;

pub use composition::{
    last_zero_composition_ensemble, occupation_composition_ensemble,
    sample_last_zero_composition, sample_occupation_composition,
};
pub use path::{run_ensemble, run_ensemble_budgeted, simulate_trajectory, DEFAULT_STEP_BUDGET};
pub use rng::{draw_reset_times, trajectory_rng};

use crate::laws::ResetModel;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Uniform discretization of the unit horizon. The final step is shortened
/// whenever `1/dt` is not an integer, so the grid covers exactly [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathGrid {
    dt: f64,
    n_steps: usize,
}

impl PathGrid {
    /// Grid with step `0 < dt ≤ 1e-2`. The upper bound keeps the
    /// discretization bias of the path functionals below the statistical
    /// resolution of the ensemble sizes this crate targets.
    pub fn new(dt: f64) -> Result<Self> {
        if !(dt > 0.0 && dt <= 1e-2) {
            return Err(Error::InvalidParameter(format!(
                "time step must satisfy 0 < dt <= 1e-2, got {dt}"
            )));
        }
        Ok(PathGrid {
            dt,
            n_steps: (1.0 / dt).ceil() as usize,
        })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Number of uniform steps covering [0, 1] (last one possibly partial).
    pub fn n_steps(&self) -> usize {
        self.n_steps
    }
}

/// The three path functionals extracted from one trajectory, plus the
/// realized reset count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryFunctionals {
    /// Fraction of the window spent at or above the origin.
    pub t_occupation: f64,
    /// Last time the path touched the origin (0 when it never returns).
    pub t_last_zero: f64,
    /// Time at which the path attains its maximum (earliest on ties).
    pub t_argmax: f64,
    /// Number of resets in the window.
    pub reset_count: u32,
}

/// A reproducible collection of trajectories with full provenance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleEnsemble {
    pub samples: Vec<TrajectoryFunctionals>,
    pub master_seed: u64,
    pub n: usize,
    pub grid: PathGrid,
    pub model: ResetModel,
}
