//! Bisection for the critical exponents where a comparison starts to hold.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lambda::OrderParameter;
use crate::pair::SymmetricCoordinate;

use super::analytic::tau;
use super::scan::{standard_grid, worst_case, Comparison, WorstCase};

/// Default bisection tolerance on `s`.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
/// Uniform points added to the default inner grid.
pub const DEFAULT_INNER_POINTS: usize = 512;

/// Outcome of [`solve_threshold`]. `bracket` is the final interval, whose
/// `hold_end` satisfies the comparison on the inner grid and whose other end
/// fails it; `witness` is where the failing end fails worst.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdResult {
    pub comparison: Comparison,
    pub critical_s: f64,
    pub bracket: (f64, f64),
    pub hold_end: f64,
    pub tolerance: f64,
    pub witness: SymmetricCoordinate,
    pub witness_violation: f64,
    pub iterations: usize,
}

impl ThresholdResult {
    pub fn witness_t(&self) -> f64 {
        self.witness.t()
    }
}

fn evaluate(s: f64, cmp: Comparison, grid: &[SymmetricCoordinate]) -> Result<WorstCase> {
    worst_case(OrderParameter::new(s)?, cmp, grid)
}

/// Bisects on `s` for the point where `cmp` switches between holding and
/// failing over every `t` of the grid. Each step takes the worst case over
/// the grid with local refinement.
pub fn solve_threshold_on(cmp: Comparison, bracket: (f64, f64), tol: f64, grid: &[SymmetricCoordinate]) -> Result<ThresholdResult> {
    let (lo, hi) = bracket;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Usage("bracket needs finite lo < hi"));
    }
    if !(tol > 0.0) {
        return Err(Error::Usage("tolerance must be positive"));
    }
    let at_lo = evaluate(lo, cmp, grid)?;
    let at_hi = evaluate(hi, cmp, grid)?;
    if at_lo.holds() == at_hi.holds() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let (mut hold, mut fail, mut witness) = if at_lo.holds() { (lo, hi, at_hi) } else { (hi, lo, at_lo) };
    let mut iterations = 0;
    while (hold - fail).abs() > tol {
        let mid = 0.5 * (hold + fail);
        if mid == hold || mid == fail {
            break;
        }
        let w = evaluate(mid, cmp, grid)?;
        if w.holds() {
            hold = mid;
        } else {
            fail = mid;
            witness = w;
        }
        iterations += 1;
    }
    Ok(ThresholdResult {
        comparison: cmp,
        critical_s: 0.5 * (hold + fail),
        bracket: (hold.min(fail), hold.max(fail)),
        hold_end: hold,
        tolerance: tol,
        witness: witness.coord,
        witness_violation: witness.violation,
        iterations,
    })
}

/// [`solve_threshold_on`] with the default inner grid.
pub fn solve_threshold(cmp: Comparison, bracket: (f64, f64), tol: f64) -> Result<ThresholdResult> {
    solve_threshold_on(cmp, bracket, tol, &standard_grid(DEFAULT_INNER_POINTS))
}

/// Root of a continuous function with a sign change on `[lo, hi]`, to `tol`.
pub fn bisect_root<F: Fn(f64) -> Result<f64>>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let fa = f(a)?;
    let fb = f(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let negative_at_a = fa < 0.0;
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == negative_at_a {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// The zero of `τ` in `(1.03, 1.04)`, to rounding.
pub fn tau_root() -> Result<f64> {
    bisect_root(tau, 1.03, 1.04, 0.0)
}

/// The boundaries reported by the `thresholds` command, with brackets that
/// contain each one and avoid the others.
pub fn standard_thresholds() -> Vec<(Comparison, (f64, f64))> {
    use super::scan::Side::{Lower, Upper};
    use crate::classical::MeanKind::*;
    alloc::vec![
        (Comparison::new(Harmonic, Upper), (-4.5, -3.5)),
        (Comparison::new(Harmonic, Lower), (-3.5, -2.5)),
        (Comparison::new(Geometric, Upper), (-1.5, -0.75)),
        (Comparison::new(Geometric, Lower), (-0.75, -0.25)),
        (Comparison::new(Logarithmic, Upper), (-0.25, 0.05)),
        (Comparison::new(Logarithmic, Lower), (1.0 / 12.0, 1.0 / 11.0)),
        (Comparison::new(Identric, Upper), (0.5, 1.5)),
        (Comparison::new(Identric, Lower), (1.03, 1.04)),
        (Comparison::new(Arithmetic, Upper), (1.5, 2.5)),
        (Comparison::new(Arithmetic, Lower), (1.5, 2.5)),
        (Comparison::new(Gini, Upper), (4.5, 5.5)),
    ]
}
