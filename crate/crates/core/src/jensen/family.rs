//! The power family `f_s(t) = (t^s - s t + s - 1) / (s(s-1))` and the
//! normalized moment functionals `χ_s` built from it.

use crate::error::{Error, Result};
use crate::math::{compensated, exp, expm1, expm1_scaled, ln};

use super::WeightedSample;

/// Below this distance from 1 the Taylor series around `t = 1` is used.
const NEAR_ONE: f64 = 0.125;
/// Band around the removable singularities `s = 0, 1`.
const BAND: f64 = 0.5;
/// Samples with `max - min` below this fraction of the mean are treated as constant.
const SPREAD_FLOOR: f64 = 1e-8;

fn check_point(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("power family is defined for finite t > 0"))
    }
}

fn check_order(s: f64) -> Result<()> {
    if s.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("order parameter s must be finite"))
    }
}

/// `f_s(t)`, continuous in `s` through the limits `t - ln t - 1` (`s = 0`)
/// and `t ln t - t + 1` (`s = 1`).
pub fn f_s(s: f64, t: f64) -> Result<f64> {
    check_order(s)?;
    check_point(t)?;
    let z = t - 1.0;
    if z.abs() < NEAR_ONE {
        return Ok(series_near_one(s, z));
    }
    let l = ln(t);
    let v = if (s - 1.0).abs() <= BAND {
        (t * expm1_scaled(s - 1.0, l) - z) / s
    } else if s.abs() <= BAND {
        (expm1_scaled(s, l) - z) / (s - 1.0)
    } else {
        (expm1(s * l) - s * z) / (s * (s - 1.0))
    };
    Ok(v)
}

/// `f_s'(t) = (t^{s-1} - 1)/(s - 1)`.
pub fn f_s_prime(s: f64, t: f64) -> Result<f64> {
    check_order(s)?;
    check_point(t)?;
    Ok(expm1_scaled(s - 1.0, ln(t)))
}

/// `f_s''(t) = t^{s-2}`.
pub fn f_s_second(s: f64, t: f64) -> Result<f64> {
    check_order(s)?;
    check_point(t)?;
    Ok(exp((s - 2.0) * ln(t)))
}

// f_s(1+z) = Σ_{j≥2} b_j z^j with b_2 = 1/2, b_{j+1} = b_j (s-j)/(j+1)
fn series_near_one(s: f64, z: f64) -> f64 {
    let mut b = 0.5;
    let mut zj = z * z;
    let mut sum = 0.0;
    let mut j = 2.0;
    loop {
        let term = b * zj;
        sum += term;
        if (term.abs() <= 1e-17 * sum.abs() && j > s) || j > 400.0 {
            return sum;
        }
        b *= (s - j) / (j + 1.0);
        zj *= z;
        j += 1.0;
    }
}

/// `Σ p_i f_s(x_i/m)` with `m` the sample mean, so that `χ_s = m^s` times it.
fn normalized(s: f64, sample: &WeightedSample, m: f64) -> Result<f64> {
    let mut terms = alloc::vec::Vec::with_capacity(sample.len());
    for (&x, &p) in sample.points().iter().zip(sample.weights()) {
        terms.push(p * f_s(s, x / m)?);
    }
    Ok(compensated(terms))
}

struct Normalization {
    mean: f64,
    constant: bool,
}

fn normalization(sample: &WeightedSample) -> Result<Normalization> {
    if sample.points().iter().any(|&x| !(x > 0.0)) {
        return Err(Error::Domain("χ_s needs positive sample points"));
    }
    let mean = sample.mean();
    let constant = sample.max() - sample.min() < SPREAD_FLOOR * mean;
    Ok(Normalization { mean, constant })
}

/// `χ_s = (Σ p_i x_i^s - (Σ p_i x_i)^s) / (s(s-1))`, evaluated as
/// `m^s Σ p_i f_s(x_i/m)`. Near-constant samples give exactly 0.
pub fn chi(s: f64, sample: &WeightedSample) -> Result<f64> {
    check_order(s)?;
    let norm = normalization(sample)?;
    if norm.constant {
        return Ok(0.0);
    }
    Ok(exp(s * ln(norm.mean)) * normalized(s, sample, norm.mean)?)
}

/// `χ_{s+1}/χ_s`, the Jensen quotient of the power pair on this sample.
pub fn chi_ratio(s: f64, sample: &WeightedSample) -> Result<f64> {
    check_order(s)?;
    let norm = normalization(sample)?;
    if norm.constant {
        return Err(Error::Degenerate);
    }
    let num = normalized(s + 1.0, sample, norm.mean)?;
    let den = normalized(s, sample, norm.mean)?;
    Ok(norm.mean * num / den)
}

/// Checks `χ_b^{c-a} ≤ χ_a^{c-b} χ_c^{b-a}` for `a < b < c` in log space,
/// with relative slack `1e-12`. Near-constant samples satisfy it trivially.
pub fn log_convexity_check(a: f64, b: f64, c: f64, sample: &WeightedSample) -> Result<bool> {
    check_order(a)?;
    check_order(b)?;
    check_order(c)?;
    if !(a < b && b < c) {
        return Err(Error::Usage("log-convexity check needs a < b < c"));
    }
    let norm = normalization(sample)?;
    if norm.constant {
        return Ok(true);
    }
    let ln_m = ln(norm.mean);
    let ln_chi = |s: f64| -> Result<f64> { Ok(s * ln_m + ln(normalized(s, sample, norm.mean)?)) };
    let (la, lb, lc) = (ln_chi(a)?, ln_chi(b)?, ln_chi(c)?);
    let lhs = (c - a) * lb;
    let rhs = (c - b) * la + (b - a) * lc;
    let slack = 1e-12 * (c - a) * la.abs().max(lb.abs()).max(lc.abs()).max(1.0);
    Ok(lhs <= rhs + slack)
}
