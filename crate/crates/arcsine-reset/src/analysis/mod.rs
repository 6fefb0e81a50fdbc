//! Statistical validation over sampled ensembles: empirical moments and
//! relative-error tables, Kolmogorov–Smirnov distances, density
//! histograms, and the large-rate summary for the argmax law.

mod fit;

pub use fit::{fit_mean_argmax, fitted_peak, FitParams, MeanFit, FIT_START};

use crate::laws;
use crate::sampling::SampleEnsemble;
use crate::{Error, Result};

/// One row of a moment-validation table: a theoretical central moment next
/// to its Monte-Carlo estimate, with the provenance needed to interpret the
/// relative error.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MomentReport {
    /// Resetting rate of the ensemble the estimate came from.
    pub rate: f64,
    /// Moment order `j`.
    pub order: u32,
    /// Closed-form value of the central moment.
    pub theoretical: f64,
    /// Sample estimate centered at the exact mean 1/2.
    pub empirical: f64,
    /// `|empirical/theoretical − 1|`.
    pub relative_error: f64,
    /// Ensemble size.
    pub n: usize,
    /// Ensemble time step.
    pub dt: f64,
}

/// Summary of one large-rate argmax ensemble against the uniform limit.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MrLimitReport {
    pub rate: f64,
    /// KS distance of the argmax samples against the uniform CDF.
    pub ks_uniform: f64,
    /// Empirical mean (limit target 1/2).
    pub mean: f64,
    /// Empirical variance, unbiased (limit target 1/12).
    pub variance: f64,
    pub n: usize,
}

/// Equal-width density histogram on [0, 1]; areas sum to 1 by
/// construction.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Histogram {
    /// `n_bins + 1` edges from 0 to 1.
    pub edges: Vec<f64>,
    /// Density per bin: `count/(n·width)`.
    pub densities: Vec<f64>,
}

/// Estimate of `E[(x − 1/2)^j]`, centered at the exact symmetric mean 1/2
/// rather than the sample mean so that estimates of different orders share
/// a common centering.
pub fn empirical_central_moment(samples: &[f64], j: u32) -> Result<f64> {
    if samples.len() < 2 {
        return Err(Error::InsufficientData {
            got: samples.len(),
            need: 2,
        });
    }
    let ji = j as i32;
    let sum: f64 = samples.iter().map(|&x| (x - 0.5).powi(ji)).sum();
    Ok(sum / samples.len() as f64)
}

/// Theoretical-versus-empirical table for the occupation-time central
/// moments of each ensemble at each requested (even) order.
pub fn relative_error_table(
    ensembles: &[SampleEnsemble],
    orders: &[u32],
) -> Result<Vec<MomentReport>> {
    let mut rows = Vec::with_capacity(ensembles.len() * orders.len());
    for ensemble in ensembles {
        let values: Vec<f64> = ensemble.samples.iter().map(|s| s.t_occupation).collect();
        for &order in orders {
            let theoretical = laws::occupation::central_moment(order, ensemble.model)?;
            if theoretical == 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "relative error is undefined at order {order}: theoretical moment is 0"
                )));
            }
            let empirical = empirical_central_moment(&values, order)?;
            rows.push(MomentReport {
                rate: ensemble.model.rate,
                order,
                theoretical,
                empirical,
                relative_error: (empirical / theoretical - 1.0).abs(),
                n: ensemble.n,
                dt: ensemble.grid.dt(),
            });
        }
    }
    Ok(rows)
}

/// Two-sided Kolmogorov–Smirnov statistic between the samples and a
/// reference CDF (monotone, mapping [0,1] into [0,1]). Samples are sorted
/// internally.
pub fn ks_statistic<F>(samples: &[f64], cdf: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if samples.is_empty() {
        return Err(Error::InsufficientData { got: 0, need: 1 });
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("samples must not contain NaN"));
    let n = sorted.len() as f64;
    let mut sup = 0.0_f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        let above = (i as f64 + 1.0) / n - f;
        let below = f - i as f64 / n;
        sup = sup.max(above).max(below);
    }
    Ok(sup)
}

/// Density histogram with `n_bins` equal-width bins on [0, 1]. Values
/// outside the window are counted in the nearest edge bin (the samplers
/// cannot produce them; this keeps the area exactly 1 regardless).
pub fn histogram(samples: &[f64], n_bins: usize) -> Result<Histogram> {
    if samples.is_empty() {
        return Err(Error::InsufficientData { got: 0, need: 1 });
    }
    if n_bins == 0 {
        return Err(Error::InvalidParameter(
            "histogram needs at least one bin".to_string(),
        ));
    }
    let width = 1.0 / n_bins as f64;
    let mut counts = vec![0usize; n_bins];
    for &x in samples {
        let raw = (x / width) as isize;
        let idx = raw.clamp(0, n_bins as isize - 1) as usize;
        counts[idx] += 1;
    }
    let edges = (0..=n_bins).map(|i| i as f64 * width).collect();
    let norm = samples.len() as f64 * width;
    let densities = counts.iter().map(|&c| c as f64 / norm).collect();
    Ok(Histogram { edges, densities })
}

/// Convergence summary of argmax ensembles toward the uniform law. All
/// ensembles must sit at rate ≥ 20; below that the uniform targets are not
/// meaningful and the caller should compare against the exact laws
/// instead.
pub fn mr_limit_report(ensembles: &[SampleEnsemble]) -> Result<Vec<MrLimitReport>> {
    let mut rows = Vec::with_capacity(ensembles.len());
    for ensemble in ensembles {
        if ensemble.model.rate < 20.0 {
            return Err(Error::InvalidParameter(format!(
                "uniform-limit report expects rate >= 20, got {}",
                ensemble.model.rate
            )));
        }
        let values: Vec<f64> = ensemble.samples.iter().map(|s| s.t_argmax).collect();
        let ks_uniform = ks_statistic(&values, |t| t.clamp(0.0, 1.0))?;
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let variance = values.iter().map(|&x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
        rows.push(MrLimitReport {
            rate: ensemble.model.rate,
            ks_uniform,
            mean,
            variance,
            n: ensemble.n,
        });
    }
    Ok(rows)
}
