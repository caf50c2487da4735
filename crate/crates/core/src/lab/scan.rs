//! Worst-case scans of `λ_s` against a classical mean over `t ∈ (0, 1)`.
//!
//! Comparisons are made on `r = ln(λ_s/A) - ln(M/A)` and normalized by
//! `min(1, -ln(1 - t^2))`, which is about `t^2` near 0. Near `t = 0` every
//! gap between these means is `O(t^2)`, so the normalized violation tends
//! to a finite limit there and a sign change in the `t^2` coefficient shows
//! up at full size instead of vanishing under rounding.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::classical::{ln_ratio_to_a, MeanKind};
use crate::error::{Error, Result};
use crate::lambda::{ln_lambda_ratio_to_a, OrderParameter};
use crate::math::expm1;
use crate::pair::SymmetricCoordinate;

/// Normalized violations at or below this count as holding.
pub const SLACK: f64 = 1e-12;

/// Complements `2^-k` probed past the dyadic grid, for comparisons that only
/// fail once `b/a` is astronomically large.
const DEEP_TAIL: [i32; 18] = [44, 48, 56, 64, 80, 96, 128, 160, 192, 256, 320, 384, 512, 640, 768, 896, 1000, 1060];
const DYADIC_DEPTH: i32 = 40;
const GOLDEN_STEPS: usize = 80;

/// Which way the comparison with the target runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `M ≤ λ_s`.
    Lower,
    /// `λ_s ≤ M`.
    Upper,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Side::Lower),
            "upper" => Ok(Side::Upper),
            _ => Err(Error::Usage("side must be `lower` or `upper`")),
        }
    }
}

/// A one-sided comparison of `λ_s` with a classical mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Comparison {
    pub target: MeanKind,
    pub side: Side,
}

impl Comparison {
    pub const fn new(target: MeanKind, side: Side) -> Self {
        Self { target, side }
    }

    /// `"L.lower"` style identifier.
    pub fn label(&self) -> String {
        alloc::format!("{}.{}", self.target.symbol(), self.side)
    }

    /// `(lhs, rhs)` of the claimed `lhs ≤ rhs`, both as ratios to `A`.
    pub fn sides(&self, s: OrderParameter, coord: SymmetricCoordinate) -> (f64, f64) {
        let lambda = crate::lambda::lambda_ratio_to_a(s, coord);
        let target = crate::classical::ratio_to_a(self.target, coord);
        match self.side {
            Side::Lower => (target, lambda),
            Side::Upper => (lambda, target),
        }
    }
}

/// `ln(λ_s/A) - ln(M/A)`.
pub fn excess(s: OrderParameter, target: MeanKind, coord: SymmetricCoordinate) -> f64 {
    ln_lambda_ratio_to_a(s, coord) - ln_ratio_to_a(target, coord)
}

/// Normalized amount by which the comparison fails at `coord` (negative when it holds).
pub fn violation(s: OrderParameter, cmp: Comparison, coord: SymmetricCoordinate) -> f64 {
    let scale = (-coord.ln_one_minus_sq()).min(1.0);
    if scale == 0.0 {
        return 0.0;
    }
    let r = excess(s, cmp.target, coord);
    match cmp.side {
        Side::Lower => -r / scale,
        Side::Upper => r / scale,
    }
}

/// Dyadic points `t = 2^-j` and `1 - t = 2^-j` (`j ≤ 40`), a deep tail of
/// complements down to `2^-1060`, and `uniform` evenly spaced `t`, sorted by
/// log-odds.
pub fn standard_grid(uniform: usize) -> Vec<SymmetricCoordinate> {
    let mut grid = Vec::with_capacity(uniform + 2 * DYADIC_DEPTH as usize + DEEP_TAIL.len());
    for j in 1..=DYADIC_DEPTH {
        let x = libm::exp2(-(j as f64));
        grid.extend(SymmetricCoordinate::new(x));
        grid.extend(SymmetricCoordinate::from_complement(x));
    }
    for k in DEEP_TAIL {
        grid.extend(SymmetricCoordinate::from_complement(libm::exp2(-(k as f64))));
    }
    for i in 1..=uniform {
        grid.extend(SymmetricCoordinate::new(i as f64 / (uniform as f64 + 1.0)));
    }
    grid.sort_by(|a, b| a.log_odds().total_cmp(&b.log_odds()));
    grid.dedup_by(|a, b| a.complement() == b.complement() && a.t() == b.t());
    grid
}

/// A grid of at least `total` points (and at least 160): the fixed points of
/// [`standard_grid`] plus as many uniform points as fit.
pub fn sized_grid(total: usize) -> Vec<SymmetricCoordinate> {
    let fixed = standard_grid(0).len();
    let mut uniform = total.saturating_sub(fixed).max(160 - fixed);
    loop {
        let grid = standard_grid(uniform);
        if grid.len() >= total.max(160) {
            return grid;
        }
        uniform += total.max(160) - grid.len();
    }
}

/// Largest normalized violation found and where.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorstCase {
    pub violation: f64,
    pub coord: SymmetricCoordinate,
}

impl WorstCase {
    pub fn holds(&self) -> bool {
        self.violation <= SLACK
    }
}

/// Coarse maximum of [`violation`] over the grid, refined by golden-section
/// search in log-odds between the neighbouring grid points.
pub fn worst_case(s: OrderParameter, cmp: Comparison, grid: &[SymmetricCoordinate]) -> Result<WorstCase> {
    worst_by(grid, |c| violation(s, cmp, c))
}

/// Like [`worst_case`] but on the unnormalized log gap, whose maximum sits
/// where the two means differ visibly rather than at the `t → 0` limit.
pub fn worst_case_raw(s: OrderParameter, cmp: Comparison, grid: &[SymmetricCoordinate]) -> Result<WorstCase> {
    worst_by(grid, |c| {
        let r = excess(s, cmp.target, c);
        match cmp.side {
            Side::Lower => -r,
            Side::Upper => r,
        }
    })
}

fn worst_by<F: Fn(SymmetricCoordinate) -> f64>(grid: &[SymmetricCoordinate], measure: F) -> Result<WorstCase> {
    if grid.is_empty() {
        return Err(Error::Usage("empty t grid"));
    }
    let values: Vec<f64> = grid.iter().map(|&c| measure(c)).collect();
    let (i, &v) = values.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).expect("grid is non-empty");
    if v.is_nan() {
        return Err(Error::Domain("comparison evaluated to NaN"));
    }
    let mut best = WorstCase { violation: v, coord: grid[i] };
    let lo = grid[i.saturating_sub(1)].log_odds();
    let hi = grid[(i + 1).min(grid.len() - 1)].log_odds();
    if lo.is_finite() && hi.is_finite() && lo < hi {
        let probe = |z| SymmetricCoordinate::from_log_odds(z).ok().map(|c| (measure(c), c));
        if let Some(refined) = golden_max(probe, lo, hi) {
            if refined.0 > best.violation {
                best = WorstCase { violation: refined.0, coord: refined.1 };
            }
        }
    }
    Ok(best)
}

fn golden_max<F>(f: F, mut a: f64, mut b: f64) -> Option<(f64, SymmetricCoordinate)>
where
    F: Fn(f64) -> Option<(f64, SymmetricCoordinate)>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..GOLDEN_STEPS {
        if b - a <= 1e-13 * (1.0 + a.abs().max(b.abs())) {
            break;
        }
        if f1.0 >= f2.0 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
        }
    }
    Some(if f1.0 >= f2.0 { f1 } else { f2 })
}

/// Second derivative in `t` of `λ_s/M - 1` at `t`, by a central difference
/// with step `t/10`. Near 0 this is twice the `t^2` coefficient.
pub fn small_t_curvature(s: OrderParameter, target: MeanKind, t: f64) -> Result<f64> {
    if !(t > 0.0 && t < 0.5) {
        return Err(Error::Domain("curvature probe needs 0 < t < 1/2"));
    }
    let h = 0.1 * t;
    let value = |x: f64| -> Result<f64> { Ok(expm1(excess(s, target, SymmetricCoordinate::new(x)?))) };
    Ok((value(t + h)? - 2.0 * value(t)? + value(t - h)?) / (h * h))
}
