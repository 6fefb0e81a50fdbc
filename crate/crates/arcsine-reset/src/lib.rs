//! Arcsine laws for Brownian motion under Poissonian resetting.
//!
//! A Wiener process on `[0, 1]` that is returned to the origin at the event
//! times of a rate-`r` Poisson process admits closed-form laws for two of the
//! three classical arcsine-law functionals: the occupation time of the
//! positive half-line (`T_r`) and the last zero (`L_r`). The third, the time
//! of the running maximum (`M_r`), is characterized here by Monte Carlo plus
//! an empirical fit of its mean.
//!
//! Module map:
//!
//! * [`specfun`]: the special functions the closed forms need (log-gamma,
//!   Bessel `J`/`I` of real order, lower incomplete gamma, regularized
//!   generalized hypergeometric series).
//! * [`laws`]: densities, characteristic functions, and moments of `T_r`
//!   and `L_r`, plus the classical arcsine baseline.
//! * [`quad`]: adaptive quadrature on `(0, 1)` under the `t = sin²θ`
//!   substitution, which removes the inverse-square-root endpoint
//!   singularities of these densities exactly; cumulative tables for CDFs.
//! * [`sampling`]: seeded, reproducible Monte Carlo: full-path simulation
//!   with exact reset times on an augmented grid, and exact composition
//!   samplers for `T_r` and `L_r`.
//! * [`analysis`]: empirical moments, relative-error tables, KS statistics,
//!   histograms, and the Nelder–Mead fit of `E[M_r]`.

pub mod analysis;
mod error;
pub mod laws;
pub mod quad;
pub mod sampling;
pub mod specfun;

pub use error::{Error, Result};
pub use laws::{CFQuery, ResetModel};
pub use sampling::{PathGrid, SampleEnsemble, TrajectoryFunctionals};
pub use analysis::{FitParams, MomentReport};
