//! Jensen functionals and the quotient means they generate.
//!
//! `Λ_{f,g}(p, x)` is the ratio of the Jensen functionals of `f` and `g` over
//! a weighted sample. It is a mean of the sample points for every sample
//! exactly when `f''(t) = t g''(t)` on the interval, which
//! [`mean_condition_residual`] measures and [`pair_from_g`] enforces by
//! construction (`f = t g - 2G`, `G' = g`).

mod family;
mod moments;
mod quadrature;

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::CompensatedSum;

pub use family::{chi, chi_ratio, f_s, f_s_prime, f_s_second, log_convexity_check};
pub use moments::{cubic_moment_bounds, CubicBounds, MomentReport};
pub use quadrature::integrate;

/// A real function evaluated pointwise; a non-finite return marks a domain failure.
pub type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Points `x_i` with positive weights `p_i` normalized to sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSample {
    points: Vec<f64>,
    weights: Vec<f64>,
}

impl WeightedSample {
    pub fn new(points: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Domain("a sample needs at least two points"));
        }
        if points.len() != weights.len() {
            return Err(Error::Usage("points and weights differ in length"));
        }
        if points.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("sample points must be finite"));
        }
        if weights.iter().any(|&p| !(p > 0.0 && p.is_finite())) {
            return Err(Error::Domain("weights must be positive and finite"));
        }
        let total: f64 = crate::math::compensated(weights.iter().copied());
        let weights = weights.into_iter().map(|p| p / total).collect();
        Ok(Self { points, weights })
    }

    /// Equal weights `1/n`.
    pub fn uniform(points: Vec<f64>) -> Result<Self> {
        let n = points.len();
        Self::new(points, alloc::vec![1.0; n])
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `Σ p_i x_i`, accumulated as offsets from the first point so that a
    /// constant sample returns that constant exactly.
    pub fn mean(&self) -> f64 {
        let x0 = self.points[0];
        let m = x0 + crate::math::compensated(self.weighted(|x| x - x0));
        m.clamp(self.min(), self.max())
    }

    pub fn min(&self) -> f64 {
        self.points.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.points.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// All points coincide.
    pub fn is_degenerate(&self) -> bool {
        self.min() == self.max()
    }

    fn weighted<'a, F: Fn(f64) -> f64 + 'a>(&'a self, h: F) -> impl Iterator<Item = f64> + 'a {
        self.points.iter().zip(&self.weights).map(move |(&x, &p)| p * h(x))
    }
}

/// An open interval `(lo, hi)`; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub const POSITIVE: Interval = Interval { lo: 0.0, hi: f64::INFINITY };
    pub const REAL_LINE: Interval = Interval { lo: f64::NEG_INFINITY, hi: f64::INFINITY };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::Domain("interval needs lo < hi"));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    /// Base point for antiderivatives: 1 when inside, else an interior point.
    fn anchor(&self) -> f64 {
        if self.contains(1.0) {
            1.0
        } else if self.lo.is_finite() && self.hi.is_finite() {
            0.5 * (self.lo + self.hi)
        } else if self.lo.is_finite() {
            self.lo + 1.0
        } else {
            self.hi - 1.0
        }
    }
}

/// Evaluators for `f`, `g` and optionally their second derivatives, on an
/// explicit interval. Missing second derivatives fall back to finite
/// differences.
#[derive(Clone)]
pub struct ConvexPair {
    f: Evaluator,
    g: Evaluator,
    f_second: Option<Evaluator>,
    g_second: Option<Evaluator>,
    interval: Interval,
}

impl core::fmt::Debug for ConvexPair {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ConvexPair")
            .field("interval", &self.interval)
            .field("f_second", &self.f_second.is_some())
            .field("g_second", &self.g_second.is_some())
            .finish_non_exhaustive()
    }
}

impl ConvexPair {
    pub fn new(f: Evaluator, g: Evaluator, interval: Interval) -> Self {
        Self { f, g, f_second: None, g_second: None, interval }
    }

    pub fn with_second_derivatives(mut self, f_second: Evaluator, g_second: Evaluator) -> Self {
        self.f_second = Some(f_second);
        self.g_second = Some(g_second);
        self
    }

    /// `(f_{s+1}, f_s)` on the positive half-line, with exact second derivatives.
    pub fn power_family(s: f64) -> Result<Self> {
        if !s.is_finite() {
            return Err(Error::Domain("order parameter s must be finite"));
        }
        let eval = |order: f64| -> Evaluator { Arc::new(move |t| f_s(order, t).unwrap_or(f64::NAN)) };
        let second = |order: f64| -> Evaluator { Arc::new(move |t| f_s_second(order, t).unwrap_or(f64::NAN)) };
        Ok(Self::new(eval(s + 1.0), eval(s), Interval::POSITIVE).with_second_derivatives(second(s + 1.0), second(s)))
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn f(&self, t: f64) -> f64 {
        (self.f)(t)
    }

    pub fn g(&self, t: f64) -> f64 {
        (self.g)(t)
    }

    pub fn f_second(&self, t: f64) -> f64 {
        match &self.f_second {
            Some(d2) => d2(t),
            None => second_difference(&*self.f, t, self.interval),
        }
    }

    pub fn g_second(&self, t: f64) -> f64 {
        match &self.g_second {
            Some(d2) => d2(t),
            None => second_difference(&*self.g, t, self.interval),
        }
    }
}

/// `Σ p_i h(x_i) - h(Σ p_i x_i)`, summed as `Σ p_i (h(x_i) - h(m))` so that
/// rounding in the weights cannot leave a residue of `h(m)`.
pub fn jensen_functional<F: Fn(f64) -> f64 + ?Sized>(h: &F, sample: &WeightedSample) -> Result<f64> {
    let at_mean = h(sample.mean());
    if !at_mean.is_finite() {
        return Err(Error::Domain("evaluator returned a non-finite value"));
    }
    let mut acc = CompensatedSum::new();
    for (&x, &p) in sample.points.iter().zip(&sample.weights) {
        let v = h(x);
        if !v.is_finite() {
            return Err(Error::Domain("evaluator returned a non-finite value"));
        }
        acc.add(p * (v - at_mean));
    }
    Ok(acc.value())
}

/// `Λ_{f,g}(p, x)`, the quotient of the Jensen functionals of `f` and `g`.
pub fn lambda_quotient(pair: &ConvexPair, sample: &WeightedSample) -> Result<f64> {
    if sample.points().iter().any(|&x| !pair.interval.contains(x)) {
        return Err(Error::Domain("sample point outside the pair's interval"));
    }
    if sample.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let num = jensen_functional(&*pair.f, sample)?;
    let den = jensen_functional(&*pair.g, sample)?;
    if !(den > 0.0) {
        return Err(Error::InvalidPair("Jensen functional of g is not positive"));
    }
    Ok(num / den)
}

/// Builds `f(t) = t g(t) - 2G(t)` with `G(t) = ∫ g` from the interval's anchor
/// (1 when it lies inside). Without an antiderivative `G` is integrated
/// numerically to [`quadrature::TOLERANCE`]. The returned pair carries `g''`
/// but not `f''`, so residual checks on it go through finite differences.
pub fn pair_from_g(g: Evaluator, g_second: Evaluator, antiderivative: Option<Evaluator>, interval: Interval) -> ConvexPair {
    let anchor = interval.anchor();
    let big_g: Evaluator = match antiderivative {
        Some(big_g) => big_g,
        None => {
            let g = g.clone();
            Arc::new(move |t| integrate(&*g, anchor, t, quadrature::TOLERANCE))
        }
    };
    let g_for_f = g.clone();
    let f: Evaluator = Arc::new(move |t| t * g_for_f(t) - 2.0 * big_g(t));
    ConvexPair { f, g, f_second: None, g_second: Some(g_second), interval }
}

/// `max |f''(t) - t g''(t)|` over the grid.
pub fn mean_condition_residual(pair: &ConvexPair, grid: &[f64]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &t in grid {
        if !pair.interval.contains(t) {
            return Err(Error::Domain("grid point outside the pair's interval"));
        }
        let r = (pair.f_second(t) - t * pair.g_second(t)).abs();
        if r.is_nan() {
            return Err(Error::Domain("evaluator returned a non-finite value"));
        }
        worst = worst.max(r);
    }
    Ok(worst)
}

/// Central second difference with one Richardson step. The step is
/// `1e-3·max(1, |t|)`, cut to a tenth of the distance to the nearest
/// endpoint when that is smaller, so nodes never leave the interval.
pub fn second_difference<F: Fn(f64) -> f64 + ?Sized>(h: &F, t: f64, interval: Interval) -> f64 {
    let mut step = 1e-3 * t.abs().max(1.0);
    let room = (t - interval.lo()).min(interval.hi() - t);
    if room < 10.0 * step {
        step = 0.1 * room;
    }
    let d2 = |step: f64| (h(t + step) - 2.0 * h(t) + h(t - step)) / (step * step);
    let coarse = d2(step);
    let fine = d2(0.5 * step);
    (4.0 * fine - coarse) / 3.0
}
