//! Four-parameter empirical fit for the mean argmax time as a function of
//! the resetting rate, plus the peak of the fitted curve.
//!
//! The model is
//!
//! ```text
//! f(r) = 1/2 + a·exp(−b/r^c) / r^d,        a, b, c, d > 0 (a may be any sign)
//! ```
//!
//! which decays to 1/2 both as r → 0 (the essential singularity kills the
//! numerator) and as r → ∞ (the power in the denominator wins), with a
//! single interior maximum at r = (b·c/d)^(1/c).

use crate::{Error, Result};

/// Multi-start Nelder–Mead initial point. The remaining starts are fixed
/// multiplicative perturbations of this one, so a fit never depends on an
/// RNG.
pub const FIT_START: FitParams = FitParams {
    a: 3.3435,
    b: 4.3575,
    c: 0.4172,
    d: 1.1309,
};

/// Fixed per-coordinate factors applied to [`FIT_START`] to build the
/// extra starting points of the multi-start search.
const START_PERTURBATIONS: [[f64; 4]; 5] = [
    [1.5, 0.7, 1.3, 0.8],
    [0.6, 1.4, 0.8, 1.2],
    [2.0, 2.0, 1.0, 1.0],
    [0.5, 0.5, 1.5, 0.7],
    [1.0, 1.0, 0.6, 1.5],
];

/// Reflection, expansion, contraction, and shrink coefficients of the
/// standard Nelder–Mead update.
const NM_REFLECT: f64 = 1.0;
const NM_EXPAND: f64 = 2.0;
const NM_CONTRACT: f64 = 0.5;
const NM_SHRINK: f64 = 0.5;

/// Iteration cap per starting point.
const MAX_ITERATIONS: usize = 4000;

/// Penalty weight for parameter vectors outside the admissible region
/// (b, c, d must stay positive for the model to make sense).
const PENALTY: f64 = 1e12;

/// Parameters of the mean-argmax fit curve.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FitParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl FitParams {
    /// Validated constructor: all fields finite, b, c, d strictly positive.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let params = FitParams { a, b, c, d };
        if !(a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite()) {
            return Err(Error::InvalidParameter(
                "fit parameters must be finite".to_string(),
            ));
        }
        if b <= 0.0 || c <= 0.0 || d <= 0.0 {
            return Err(Error::InvalidParameter(
                "fit parameters b, c, d must be positive".to_string(),
            ));
        }
        Ok(params)
    }

    /// Evaluate the fitted curve at rate `r` (r > 0).
    pub fn eval(&self, r: f64) -> f64 {
        0.5 + self.a * (-self.b / r.powf(self.c)).exp() / r.powf(self.d)
    }

    fn from_vec(v: [f64; 4]) -> Self {
        FitParams {
            a: v[0],
            b: v[1],
            c: v[2],
            d: v[3],
        }
    }

    fn to_vec(self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Result of fitting the mean-argmax curve to `(rate, mean)` points.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MeanFit {
    pub params: FitParams,
    /// Euclidean norm of the residual vector at the optimum.
    pub residual_norm: f64,
}

fn sum_squared_error(v: [f64; 4], points: &[(f64, f64)]) -> f64 {
    let bad: f64 = v[1..]
        .iter()
        .filter(|&&x| x <= 0.0)
        .map(|&x| 1.0 + x * x)
        .sum();
    if bad > 0.0 {
        return PENALTY * bad;
    }
    let params = FitParams::from_vec(v);
    points
        .iter()
        .map(|&(r, m)| {
            let e = params.eval(r) - m;
            e * e
        })
        .sum()
}

/// One Nelder–Mead run from a given start; returns the best vertex and its
/// objective value.
fn nelder_mead(start: [f64; 4], points: &[(f64, f64)]) -> ([f64; 4], f64) {
    const DIM: usize = 4;
    let mut simplex: Vec<[f64; 4]> = Vec::with_capacity(DIM + 1);
    simplex.push(start);
    for i in 0..DIM {
        let mut v = start;
        let step = if v[i].abs() > 1e-8 { 0.1 * v[i] } else { 0.1 };
        v[i] += step;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex
        .iter()
        .map(|&v| sum_squared_error(v, points))
        .collect();

    for _ in 0..MAX_ITERATIONS {
        // Order vertices by objective value.
        let mut idx: Vec<usize> = (0..=DIM).collect();
        idx.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap());
        let ordered: Vec<[f64; 4]> = idx.iter().map(|&i| simplex[i]).collect();
        let ordered_vals: Vec<f64> = idx.iter().map(|&i| values[i]).collect();
        simplex = ordered;
        values = ordered_vals;

        // Termination: simplex collapsed in both coordinates and values.
        let scale = simplex[0]
            .iter()
            .fold(0.0_f64, |acc, &x| acc.max(x.abs()));
        let diameter = simplex[1..]
            .iter()
            .map(|v| {
                v.iter()
                    .zip(simplex[0].iter())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0_f64, f64::max)
            })
            .fold(0.0_f64, f64::max);
        if diameter <= 1e-10 * (1.0 + scale) {
            break;
        }

        // Centroid of all but the worst vertex.
        let mut centroid = [0.0_f64; 4];
        for v in &simplex[..DIM] {
            for (c, x) in centroid.iter_mut().zip(v.iter()) {
                *c += x / DIM as f64;
            }
        }
        let worst = simplex[DIM];
        let mut reflected = [0.0_f64; 4];
        for i in 0..DIM {
            reflected[i] = centroid[i] + NM_REFLECT * (centroid[i] - worst[i]);
        }
        let f_reflected = sum_squared_error(reflected, points);

        if f_reflected < values[0] {
            // Try to expand past the reflection.
            let mut expanded = [0.0_f64; 4];
            for i in 0..DIM {
                expanded[i] = centroid[i] + NM_EXPAND * (reflected[i] - centroid[i]);
            }
            let f_expanded = sum_squared_error(expanded, points);
            if f_expanded < f_reflected {
                simplex[DIM] = expanded;
                values[DIM] = f_expanded;
            } else {
                simplex[DIM] = reflected;
                values[DIM] = f_reflected;
            }
            continue;
        }
        if f_reflected < values[DIM - 1] {
            simplex[DIM] = reflected;
            values[DIM] = f_reflected;
            continue;
        }

        // Contract toward the better of worst/reflected.
        let (base, f_base) = if f_reflected < values[DIM] {
            (reflected, f_reflected)
        } else {
            (worst, values[DIM])
        };
        let mut contracted = [0.0_f64; 4];
        for i in 0..DIM {
            contracted[i] = centroid[i] + NM_CONTRACT * (base[i] - centroid[i]);
        }
        let f_contracted = sum_squared_error(contracted, points);
        if f_contracted < f_base {
            simplex[DIM] = contracted;
            values[DIM] = f_contracted;
            continue;
        }

        // Shrink toward the best vertex.
        for i in 1..=DIM {
            for j in 0..DIM {
                simplex[i][j] = simplex[0][j] + NM_SHRINK * (simplex[i][j] - simplex[0][j]);
            }
            values[i] = sum_squared_error(simplex[i], points);
        }
    }

    let mut best = 0;
    for i in 1..=DIM {
        if values[i] < values[best] {
            best = i;
        }
    }
    (simplex[best], values[best])
}

/// Fit the mean-argmax model to `(rate, mean)` points by multi-start
/// Nelder–Mead least squares.
///
/// Requires at least 8 points spanning both the small-rate side
/// (min rate ≤ 0.5) and the large-rate side (max rate ≥ 20) so the fit is
/// anchored on both flanks of the peak.
pub fn fit_mean_argmax(points: &[(f64, f64)]) -> Result<MeanFit> {
    if points.len() < 8 {
        return Err(Error::InsufficientData {
            got: points.len(),
            need: 8,
        });
    }
    let mut r_min = f64::INFINITY;
    let mut r_max = f64::NEG_INFINITY;
    for &(r, m) in points {
        if !(r.is_finite() && m.is_finite()) || r <= 0.0 {
            return Err(Error::InvalidParameter(
                "fit points must have finite values and positive rates".to_string(),
            ));
        }
        r_min = r_min.min(r);
        r_max = r_max.max(r);
    }
    if r_min > 0.5 || r_max < 20.0 {
        return Err(Error::InvalidParameter(format!(
            "fit grid must span [<=0.5, >=20], got [{r_min}, {r_max}]"
        )));
    }

    let mut starts = vec![FIT_START.to_vec()];
    for factors in START_PERTURBATIONS {
        let base = FIT_START.to_vec();
        let mut v = [0.0_f64; 4];
        for i in 0..4 {
            v[i] = base[i] * factors[i];
        }
        starts.push(v);
    }

    let mut best: Option<([f64; 4], f64)> = None;
    for start in starts {
        let (v, sse) = nelder_mead(start, points);
        // Reject runs that ended in the penalized region.
        if sse >= PENALTY {
            continue;
        }
        match best {
            Some((_, b)) if b <= sse => {}
            _ => best = Some((v, sse)),
        }
    }

    match best {
        Some((v, sse)) => Ok(MeanFit {
            params: FitParams::from_vec(v),
            residual_norm: sse.sqrt(),
        }),
        None => Err(Error::FitDiverged {
            best_residual: f64::INFINITY,
        }),
    }
}

/// Location and value of the maximum of the fitted curve on the rate
/// window [0.2, 50], found by golden-section search.
pub fn fitted_peak(params: &FitParams) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut lo = 0.2_f64;
    let mut hi = 50.0_f64;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = params.eval(x1);
    let mut f2 = params.eval(x2);
    while hi - lo > 1e-10 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = params.eval(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = params.eval(x1);
        }
    }
    let r = 0.5 * (lo + hi);
    (r, params.eval(r))
}
