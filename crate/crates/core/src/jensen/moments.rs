//! Moment reports and the cubic bound
//! `E[X]^3 + 3 min·Var(X) ≤ E[X^3] ≤ E[X]^3 + 3 max·Var(X)`, where `min` and
//! `max` are the ends of the support.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::compensated;

/// First three moments of a real random variable plus its support.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentReport {
    pub mean: f64,
    pub second_moment: f64,
    pub third_moment: f64,
    pub variance: f64,
    pub support_min: f64,
    pub support_max: f64,
}

/// `lower ≤ E[X^3] ≤ upper`; `holds` reports whether the given third moment
/// lies inside (relative tolerance `1e-12`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicBounds {
    pub lower: f64,
    pub upper: f64,
    pub holds: bool,
}

impl MomentReport {
    /// Validates a report assembled elsewhere.
    pub fn new(mean: f64, second_moment: f64, third_moment: f64, variance: f64, support_min: f64, support_max: f64) -> Result<Self> {
        let report = Self { mean, second_moment, third_moment, variance, support_min, support_max };
        report.validate()?;
        Ok(report)
    }

    /// Exact moments of a discrete distribution; weights are normalized.
    pub fn from_distribution(points: &[f64], weights: &[f64]) -> Result<Self> {
        if points.is_empty() || points.len() != weights.len() {
            return Err(Error::Usage("points and weights must be non-empty and of equal length"));
        }
        if points.iter().any(|x| !x.is_finite()) || weights.iter().any(|&p| !(p > 0.0 && p.is_finite())) {
            return Err(Error::Domain("points must be finite and weights positive"));
        }
        let total = compensated(weights.iter().copied());
        let p: Vec<f64> = weights.iter().map(|w| w / total).collect();
        Ok(Self::assemble(points, &p))
    }

    /// Empirical moments of equally weighted observations.
    pub fn from_samples(samples: &[f64]) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Usage("no samples"));
        }
        if samples.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("samples must be finite"));
        }
        let p = alloc::vec![1.0 / samples.len() as f64; samples.len()];
        Ok(Self::assemble(samples, &p))
    }

    // two passes: the variance comes from centred values, not E[X²] - E[X]²
    fn assemble(points: &[f64], p: &[f64]) -> Self {
        let weighted = |h: &dyn Fn(f64) -> f64| compensated(points.iter().zip(p).map(|(&x, &w)| w * h(x)));
        let mean = weighted(&|x| x);
        let variance = weighted(&|x| (x - mean) * (x - mean));
        let second_moment = weighted(&|x| x * x);
        let third_moment = weighted(&|x| x * x * x);
        let support_min = points.iter().copied().fold(f64::INFINITY, f64::min);
        let support_max = points.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self { mean, second_moment, third_moment, variance, support_min, support_max }
    }

    fn validate(&self) -> Result<()> {
        if !self.mean.is_finite() || !self.third_moment.is_finite() {
            return Err(Error::InvalidReport("mean and third moment must be finite"));
        }
        if !(self.variance >= 0.0) {
            return Err(Error::InvalidReport("variance must be non-negative"));
        }
        if self.support_min.is_nan() || self.support_max.is_nan() || self.support_min > self.support_max {
            return Err(Error::InvalidReport("support must satisfy min <= max"));
        }
        if self.mean < self.support_min || self.mean > self.support_max {
            return Err(Error::InvalidReport("mean lies outside the support"));
        }
        Ok(())
    }
}

/// Bounds on `E[X^3]` from the mean, variance and support. An unbounded
/// side gives an infinite bound (which trivially holds).
pub fn cubic_moment_bounds(report: &MomentReport) -> Result<CubicBounds> {
    report.validate()?;
    let m = report.mean;
    let var = report.variance;
    let base = m * m * m;
    let side = |end: f64| if var == 0.0 { base } else { base + 3.0 * end * var };
    let lower = side(report.support_min);
    let upper = side(report.support_max);
    let scale =
        [base, report.third_moment, lower, upper].iter().filter(|v| v.is_finite()).fold(f64::MIN_POSITIVE, |acc, v| acc.max(v.abs()));
    let slack = 1e-12 * scale;
    let holds = lower - slack <= report.third_moment && report.third_moment <= upper + slack;
    Ok(CubicBounds { lower, upper, holds })
}
