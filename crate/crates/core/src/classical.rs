//! The classical bivariate means `H ≤ G ≤ L ≤ I ≤ A ≤ S` and their ratios to
//! the arithmetic mean.
//!
//! Pair-valued functions work from `r = a/b` and `δ = (b - a)/b` so that
//! near-equal and wildly separated pairs both keep full precision; the
//! identric and Gini means are evaluated in log space and never overflow.

use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::math::{exp, expm1, ln, log1p, sqrt};
use crate::pair::{PositivePair, SymmetricCoordinate};

/// Below this `t` the logarithmic, identric and Gini ratios are summed as
/// even power series, which keeps `ln(M/A)` accurate relative to its own
/// size (about `t^2`) instead of to 1.
pub const SERIES_SWITCH: f64 = 0.5;

/// The six classical means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeanKind {
    Harmonic,
    Geometric,
    Logarithmic,
    Identric,
    Arithmetic,
    Gini,
}

impl MeanKind {
    /// All means, in increasing order.
    pub const ALL: [MeanKind; 6] =
        [MeanKind::Harmonic, MeanKind::Geometric, MeanKind::Logarithmic, MeanKind::Identric, MeanKind::Arithmetic, MeanKind::Gini];

    pub fn symbol(self) -> &'static str {
        match self {
            MeanKind::Harmonic => "H",
            MeanKind::Geometric => "G",
            MeanKind::Logarithmic => "L",
            MeanKind::Identric => "I",
            MeanKind::Arithmetic => "A",
            MeanKind::Gini => "S",
        }
    }
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for MeanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "harmonic" => Ok(MeanKind::Harmonic),
            "G" | "geometric" => Ok(MeanKind::Geometric),
            "L" | "logarithmic" => Ok(MeanKind::Logarithmic),
            "I" | "identric" => Ok(MeanKind::Identric),
            "A" | "arithmetic" => Ok(MeanKind::Arithmetic),
            "S" | "gini" => Ok(MeanKind::Gini),
            _ => Err(Error::Usage("unknown mean identifier (expected one of H, G, L, I, A, S)")),
        }
    }
}

/// `ln(a/b)` for `a <= b`, accurate both for `a ≈ b` and for `a ≪ b`.
fn ln_ratio(pair: &PositivePair) -> f64 {
    let (a, b) = (pair.lo(), pair.hi());
    if a >= 0.5 * b {
        log1p(-(b - a) / b)
    } else {
        ln(a) - ln(b)
    }
}

pub fn harmonic(pair: PositivePair) -> f64 {
    let (a, b) = (pair.lo(), pair.hi());
    2.0 * a / (1.0 + a / b)
}

pub fn geometric(pair: PositivePair) -> f64 {
    if pair.is_equal() {
        return pair.lo();
    }
    let product = pair.lo() * pair.hi();
    if product.is_normal() {
        sqrt(product)
    } else {
        sqrt(pair.lo()) * sqrt(pair.hi())
    }
}

pub fn logarithmic(pair: PositivePair) -> f64 {
    if pair.is_equal() {
        return pair.lo();
    }
    (pair.hi() - pair.lo()) / -ln_ratio(&pair)
}

pub fn identric(pair: PositivePair) -> f64 {
    if pair.is_equal() {
        return pair.lo();
    }
    let (a, b) = (pair.lo(), pair.hi());
    let r = a / b;
    let delta = (b - a) / b;
    // ln(I/b) = -r ln(r) / (1 - r) - 1
    let x = -r * ln_ratio(&pair) / delta;
    b * exp(x - 1.0)
}

pub fn arithmetic(pair: PositivePair) -> f64 {
    pair.arithmetic()
}

pub fn gini(pair: PositivePair) -> f64 {
    if pair.is_equal() {
        return pair.lo();
    }
    let (a, b) = (pair.lo(), pair.hi());
    let r = a / b;
    // ln(S/b) = r ln(r) / (1 + r)
    b * exp(r / (1.0 + r) * ln_ratio(&pair))
}

pub fn mean(kind: MeanKind, pair: PositivePair) -> f64 {
    match kind {
        MeanKind::Harmonic => harmonic(pair),
        MeanKind::Geometric => geometric(pair),
        MeanKind::Logarithmic => logarithmic(pair),
        MeanKind::Identric => identric(pair),
        MeanKind::Arithmetic => arithmetic(pair),
        MeanKind::Gini => gini(pair),
    }
}

/// `M(1 + t, 1 - t)`, i.e. `M(a, b) / A(a, b)` for the pair with coordinate `t`.
pub fn ratio_to_a(kind: MeanKind, coord: SymmetricCoordinate) -> f64 {
    let t = coord.t();
    match kind {
        MeanKind::Harmonic => coord.complement() * (1.0 + t),
        MeanKind::Geometric => sqrt(coord.complement() * (1.0 + t)),
        MeanKind::Logarithmic => {
            if t < SERIES_SWITCH {
                1.0 / (1.0 + atanh_excess(t * t))
            } else {
                t / coord.atanh()
            }
        }
        MeanKind::Identric => exp(ln_identric_ratio(coord)),
        MeanKind::Arithmetic => 1.0,
        MeanKind::Gini => exp(0.5 * entropy_sum(coord)),
    }
}

/// `ln(M/A)` at coordinate `t`, accurate in absolute terms near `t = 0`.
pub fn ln_ratio_to_a(kind: MeanKind, coord: SymmetricCoordinate) -> f64 {
    let t = coord.t();
    match kind {
        MeanKind::Harmonic => coord.ln_one_minus_sq(),
        MeanKind::Geometric => 0.5 * coord.ln_one_minus_sq(),
        MeanKind::Logarithmic => {
            if t < SERIES_SWITCH {
                -log1p(atanh_excess(t * t))
            } else {
                ln(t) - ln(coord.atanh())
            }
        }
        MeanKind::Identric => ln_identric_ratio(coord),
        MeanKind::Arithmetic => 0.0,
        MeanKind::Gini => 0.5 * entropy_sum(coord),
    }
}

/// `1 - H/A = t^2`, computed through the log form so it stays accurate
/// when `t` is given only through its complement.
pub(crate) fn harmonic_gap(coord: SymmetricCoordinate) -> f64 {
    -expm1(coord.ln_one_minus_sq())
}

/// `μ(t) = ((1+t)ln(1+t) - (1-t)ln(1-t)) / 2t - 1 = ln(I/A)`.
pub(crate) fn ln_identric_ratio(coord: SymmetricCoordinate) -> f64 {
    let t = coord.t();
    if t < SERIES_SWITCH {
        let y = t * t;
        -y * even_series(y, |j| 1.0 / ((2.0 * j + 2.0) * (2.0 * j + 3.0)))
    } else {
        // both products are non-negative, so the numerator does not cancel
        let num = (1.0 + t) * coord.ln_plus() - coord.complement() * coord.ln_minus();
        num / (2.0 * t) - 1.0
    }
}

/// `K(t) = (1+t)ln(1+t) + (1-t)ln(1-t)`, with relative accuracy for all `t`.
///
/// Below `t = 1/2` the even series `t^2 Σ t^{2k} / ((k+1)(2k+1))` is used
/// since the two products cancel to first order.
pub(crate) fn entropy_sum(coord: SymmetricCoordinate) -> f64 {
    let t = coord.t();
    if t < 0.5 {
        let y = t * t;
        y * entropy_series(y)
    } else {
        (1.0 + t) * coord.ln_plus() + coord.complement() * coord.ln_minus()
    }
}

/// `Σ_{k≥0} y^k / ((k+1)(2k+1))` for `0 <= y < 1/4`.
pub(crate) fn entropy_series(y: f64) -> f64 {
    even_series(y, |k| 1.0 / ((k + 1.0) * (2.0 * k + 1.0)))
}

/// `atanh(t)/t - 1 = Σ_{k≥1} y^k / (2k+1)` with `y = t^2 < 1/4`.
fn atanh_excess(y: f64) -> f64 {
    y * even_series(y, |k| 1.0 / (2.0 * k + 3.0))
}

/// `Σ_{k≥0} coef(k) y^k` for positive, slowly varying coefficients and `y < 1/4`.
fn even_series(y: f64, coef: impl Fn(f64) -> f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0;
    for k in 0..80 {
        let term = power * coef(k as f64);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        power *= y;
    }
    sum
}
