//! The family `λ_s(a, b) = f̄_{s+1}(a, b) / f̄_s(a, b)`.
//!
//! Writing `(a, b) = A·(1 - t, 1 + t)` gives `λ_s / A = D_{s+1}(t) / D_s(t)` with
//!
//! ```text
//!   D_k(t) = ((1 + t)^k + (1 - t)^k - 2) / (k (k - 1))
//! ```
//!
//! continued analytically through `k = 0` (`-ln(1 - t²)`) and `k = 1`
//! (`(1+t)ln(1+t) + (1-t)ln(1-t)`). Both numerator and denominator vanish
//! like `t²`, and `D_k` has removable singularities at `k ∈ {0, 1}`, so the
//! evaluation picks one of several rearrangements:
//!
//! - `t < T_SWITCH`: the even binomial series with `SERIES_TERMS` terms;
//! - `t <= 1/2`, `k ∈ [-1/2, 3/2]`: the same series, summed to convergence
//!   (all its coefficients are positive there);
//! - `t > 1/2`, `k` near 0 or 1: `expm1` forms divided through by the
//!   vanishing factor;
//! - otherwise `2[e^m·2sinh²(d/2) + expm1(m)]` with `m = k ln(1-t²)/2`,
//!   `d = k atanh(t)`, or a largest-term factoring in log space once a power
//!   exceeds `e`, which keeps `s = -200, t = 1 - 1e-12` finite.

use crate::classical::{self, MeanKind};
use crate::error::{Error, Result};
use crate::math::{exp, expm1, expm1_scaled, ln, log1p, sinhc, LN_2};
use crate::pair::{PositivePair, SymmetricCoordinate};

/// Coordinate below which the fixed-length series is used.
pub const T_SWITCH: f64 = 1e-3;
/// Number of even powers kept by the fixed-length series.
pub const SERIES_TERMS: usize = 8;
/// Half-width of the bands around `s ∈ {-1, 0, 1}` tagged as limit branches.
pub const BRANCH_WIDTH: f64 = 1e-5;

const MAX_SERIES_TERMS: usize = 400;

/// The exponent `s` of `λ_s`; any finite real.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct OrderParameter(f64);

impl OrderParameter {
    pub fn new(s: f64) -> Result<Self> {
        if s.is_finite() {
            Ok(Self(s))
        } else {
            Err(Error::Domain("order parameter s must be finite"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The case-table branch this parameter falls in, ignoring `t`.
    pub fn band(self) -> Branch {
        let s = self.0;
        if (s + 1.0).abs() <= BRANCH_WIDTH {
            Branch::LimitMinusOne
        } else if s.abs() <= BRANCH_WIDTH {
            Branch::LimitZero
        } else if (s - 1.0).abs() <= BRANCH_WIDTH {
            Branch::LimitOne
        } else {
            Branch::Generic
        }
    }
}

/// Which evaluation path produced a [`LambdaValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Generic,
    LimitMinusOne,
    LimitZero,
    LimitOne,
    SeriesSmallT,
    DegenerateEqual,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Generic => "generic",
            Branch::LimitMinusOne => "limit-1",
            Branch::LimitZero => "limit0",
            Branch::LimitOne => "limit1",
            Branch::SeriesSmallT => "series-small-t",
            Branch::DegenerateEqual => "degenerate-equal",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaValue {
    pub value: f64,
    pub branch: Branch,
}

/// `λ_s(a, b)`.
pub fn lambda(s: OrderParameter, pair: PositivePair) -> LambdaValue {
    if pair.is_equal() {
        return LambdaValue { value: pair.lo(), branch: Branch::DegenerateEqual };
    }
    if s.value() == 2.0 {
        return LambdaValue { value: pair.arithmetic(), branch: Branch::Generic };
    }
    let coord = pair.coordinate();
    let branch = if coord.t() < T_SWITCH { Branch::SeriesSmallT } else { s.band() };
    LambdaValue { value: pair.arithmetic() * lambda_ratio_to_a(s, coord), branch }
}

/// `λ_s(1 - t, 1 + t) = λ_s(a, b) / A(a, b)`.
pub fn lambda_ratio_to_a(s: OrderParameter, coord: SymmetricCoordinate) -> f64 {
    let t = coord.t();
    if t == 0.0 || s.value() == 2.0 {
        return 1.0;
    }
    if t < T_SWITCH {
        let (num, den) = series_sums(s.value(), t * t, SERIES_TERMS);
        return num / den;
    }
    exp(ln_gap(s.value() + 1.0, coord) - ln_gap(s.value(), coord))
}

/// `ln(λ_s / A)` at coordinate `t`; accurate relative to its own size for
/// small `t`, where it behaves like `(s/6 - 1/3) t²`.
pub fn ln_lambda_ratio_to_a(s: OrderParameter, coord: SymmetricCoordinate) -> f64 {
    let t = coord.t();
    if t == 0.0 || s.value() == 2.0 {
        return 0.0;
    }
    if t < T_SWITCH {
        return log1p(series_excess(s.value(), t * t, SERIES_TERMS));
    }
    ln_gap(s.value() + 1.0, coord) - ln_gap(s.value(), coord)
}

/// `λ_s / A` from the even-power binomial series truncated to `terms` powers.
pub fn small_t_series(s: OrderParameter, coord: SymmetricCoordinate, terms: usize) -> Result<f64> {
    if coord.t() >= T_SWITCH {
        return Err(Error::Usage("small-t series requires t below the switch point"));
    }
    if terms == 0 {
        return Err(Error::Usage("series needs at least one term"));
    }
    let t = coord.t();
    let (num, den) = series_sums(s.value(), t * t, terms);
    Ok(num / den)
}

/// The closed forms of `λ_{-1}`, `λ_0`, `λ_1` through `H, G, A, S`:
///
/// ```text
///   λ_{-1} = 2G² ln(A/G) / (A - H),   λ_0 = A ln(S/A) / ln(A/G),
///   λ_1 = (A - H) / (2 ln(S/A))
/// ```
///
/// The differences and logarithms are taken from the accurate log ratios in
/// [`classical`], so the forms hold up for nearly equal pairs as well.
pub fn lambda_closed_form(s: f64, pair: PositivePair) -> Result<f64> {
    if pair.is_equal() {
        return Err(Error::Domain("closed forms are 0/0 for equal entries"));
    }
    let a_mean = pair.arithmetic();
    let coord = pair.coordinate();
    let ln_ag = -classical::ln_ratio_to_a(MeanKind::Geometric, coord);
    let ln_sa = classical::ln_ratio_to_a(MeanKind::Gini, coord);
    // (A - H) / A
    let gap = classical::harmonic_gap(coord);
    // G² / A²
    let g2 = classical::ratio_to_a(MeanKind::Harmonic, coord);
    if s == -1.0 {
        Ok(a_mean * (2.0 * g2 * ln_ag / gap))
    } else if s == 0.0 {
        Ok(a_mean * (ln_sa / ln_ag))
    } else if s == 1.0 {
        Ok(a_mean * (0.5 * gap / ln_sa))
    } else {
        Err(Error::Usage("closed forms exist only for s in {-1, 0, 1}"))
    }
}

/// Coefficients `a_j(k) = C(k, 2j) / (k(k-1))`, `j >= 1`, via
/// `a_1 = 1/2`, `a_{j+1} = a_j (k - 2j)(k - 2j - 1) / ((2j + 1)(2j + 2))`.
fn next_coefficient(a: f64, k: f64, j: usize) -> f64 {
    let jf = j as f64;
    a * (k - 2.0 * jf) * (k - 2.0 * jf - 1.0) / ((2.0 * jf + 1.0) * (2.0 * jf + 2.0))
}

/// `(Σ a_j(s+1) y^{j-1}, Σ a_j(s) y^{j-1})` over `terms` terms.
fn series_sums(s: f64, y: f64, terms: usize) -> (f64, f64) {
    let (mut an, mut ad) = (0.5, 0.5);
    let (mut num, mut den) = (0.0, 0.0);
    let mut power = 1.0;
    for j in 1..=terms {
        num += an * power;
        den += ad * power;
        an = next_coefficient(an, s + 1.0, j);
        ad = next_coefficient(ad, s, j);
        power *= y;
    }
    (num, den)
}

/// `num/den - 1` for the truncated series, from the coefficient differences
/// so the leading `(s/6 - 1/3) y` keeps its relative precision.
fn series_excess(s: f64, y: f64, terms: usize) -> f64 {
    let (mut an, mut ad) = (0.5, 0.5);
    let (mut diff, mut den) = (0.0, 0.0);
    let mut power = 1.0;
    for j in 1..=terms {
        diff += (an - ad) * power;
        den += ad * power;
        an = next_coefficient(an, s + 1.0, j);
        ad = next_coefficient(ad, s, j);
        power *= y;
    }
    diff / den
}

/// `Σ_{j≥1} a_j(k) y^{j-1}` summed until the terms are negligible.
fn converged_series(k: f64, y: f64) -> f64 {
    let mut a = 0.5;
    let mut sum: f64 = 0.0;
    let mut power = 1.0;
    for j in 1..=MAX_SERIES_TERMS {
        let term: f64 = a * power;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
        a = next_coefficient(a, k, j);
        power *= y;
    }
    sum
}

/// `ln D_k(t)` for `t >= T_SWITCH`.
pub(crate) fn ln_gap(k: f64, coord: SymmetricCoordinate) -> f64 {
    let t = coord.t();
    let near_zero = k.abs() <= 0.5;
    let near_one = (k - 1.0).abs() <= 0.5;
    if t <= 0.5 && (near_zero || near_one) {
        return LN_2 + 2.0 * ln(t) + ln(converged_series(k, t * t));
    }
    let u = coord.ln_plus();
    let v = coord.ln_minus();
    if near_one {
        let eps = k - 1.0;
        let n = (1.0 + t) * expm1_scaled(eps, u) + coord.complement() * expm1_scaled(eps, v);
        return ln(n / k);
    }
    if near_zero {
        let n = expm1_scaled(k, u) + expm1_scaled(k, v);
        return ln(n / (k - 1.0));
    }
    let x = k * u;
    let y = k * v;
    let big = x.max(y);
    let norm = ln(k * (k - 1.0));
    if big > 1.0 {
        let small = x.min(y);
        return big + log1p(exp(small - big) - 2.0 * exp(-big)) - norm;
    }
    let m = 0.5 * k * coord.ln_one_minus_sq();
    let half_d = 0.5 * k * coord.atanh();
    let sh = half_d * sinhc(half_d);
    let n = 2.0 * (exp(m) * 2.0 * sh * sh + expm1(m));
    ln(n) - norm
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: f64) -> OrderParameter {
        OrderParameter::new(v).unwrap()
    }

    fn pair(a: f64, b: f64) -> PositivePair {
        PositivePair::new(a, b).unwrap()
    }

    fn coord(t: f64) -> SymmetricCoordinate {
        SymmetricCoordinate::new(t).unwrap()
    }

    fn rel(x: f64, y: f64) -> f64 {
        ((x - y) / y).abs()
    }

    #[test]
    fn order_parameter_rejects_non_finite() {
        assert!(OrderParameter::new(f64::NAN).is_err());
        assert!(OrderParameter::new(f64::INFINITY).is_err());
    }

    #[test]
    fn lambda_two_is_arithmetic() {
        assert_eq!(lambda(s(2.0), pair(3.0, 5.0)).value, 4.0);
        assert_eq!(lambda_ratio_to_a(s(2.0), coord(0.5)), 1.0);
    }

    #[test]
    fn equal_entries_are_degenerate() {
        for v in [-3.0, 0.0, 1.0, 7.5] {
            let out = lambda(s(v), pair(7.0, 7.0));
            assert_eq!(out.value, 7.0);
            assert_eq!(out.branch, Branch::DegenerateEqual);
        }
    }

    // Reference values below were computed with 50-digit arithmetic from the
    // case-table formulas.
    #[test]
    fn case_table_values_at_one_three() {
        let cases = [
            (-1.0, 1.726092434710685564635314),
            (0.0, 1.818841679306418009164809),
            (1.0, 1.911139125703199516488291),
            (0.5, 1.865251370908383480175473),
            (3.0, 2.083333333333333333333333),
            (-2.5, 1.593685724468696164865869),
            (7.25, 2.361711837237918381264154),
            (-20.0, 1.105261050402517371431409),
            (15.0, 2.629014615736396139511034),
        ];
        for (sv, want) in cases {
            let got = lambda(s(sv), pair(1.0, 3.0)).value;
            assert!(rel(got, want) < 1e-14, "s = {sv}: {got} vs {want}");
        }
    }

    #[test]
    fn extreme_ratio_values() {
        let cases = [(-20.0, 1.105263157894736842105263), (15.0, 875026.704884663367590008), (0.3, 166094.2233936215798686285)];
        for (sv, want) in cases {
            let got = lambda(s(sv), pair(1.0, 1e6)).value;
            assert!(rel(got, want) < 1e-13, "s = {sv}: {got} vs {want}");
        }
    }

    #[test]
    fn ratio_values_in_every_region() {
        let cases = [
            (3.0, 1e-3, 1.00000016666666666666666666667),
            (-7.5, 0.25, 0.903086251348447703111436449933),
            (0.99999, 0.75, 0.888969826842258271696354412552),
            (1e-6, 0.3, 0.969148828440302557811026196968),
            (-1.000003, 0.9, 0.389553718724127703516561401096),
            (0.6, 0.01, 0.999976666050635708291547534262),
        ];
        for (sv, t, want) in cases {
            let got = lambda_ratio_to_a(s(sv), coord(t));
            assert!(rel(got, want) < 2e-15, "s = {sv}, t = {t}: {got} vs {want}");
        }
    }

    #[test]
    fn series_matches_generic_at_switch() {
        for sv in [-20.0, -4.0, -1.0, -0.3, 0.0, 0.7, 1.0, 3.0, 5.5, 20.0] {
            let below = coord(T_SWITCH * (1.0 - 1e-12));
            let at = coord(T_SWITCH);
            let a = lambda_ratio_to_a(s(sv), below);
            let b = lambda_ratio_to_a(s(sv), at);
            assert!(rel(a, b) < 1e-12, "s = {sv}: {a} vs {b}");
        }
    }

    #[test]
    fn small_t_series_leading_term() {
        let t = 1e-4;
        let got = small_t_series(s(5.0), coord(t), 3).unwrap();
        assert!(((got - 1.0) / (0.5 * t * t) - 1.0).abs() < 1e-6);
        let got = small_t_series(s(2.0), coord(1e-5), SERIES_TERMS).unwrap();
        assert_eq!(got, 1.0);
    }

    #[test]
    fn small_t_series_usage_errors() {
        assert!(small_t_series(s(1.0), coord(T_SWITCH), 8).is_err());
        assert!(small_t_series(s(1.0), coord(1e-4), 0).is_err());
    }

    #[test]
    fn closed_forms() {
        let p = pair(1.0, 3.0);
        for sv in [-1.0, 0.0, 1.0] {
            let closed = lambda_closed_form(sv, p).unwrap();
            let direct = lambda(s(sv), p).value;
            assert!(rel(closed, direct) < 1e-13, "s = {sv}");
        }
        assert!(matches!(lambda_closed_form(-1.0, pair(2.0, 2.0)), Err(Error::Domain(_))));
        assert!(matches!(lambda_closed_form(0.5, p), Err(Error::Usage(_))));
    }

    #[test]
    fn minus_one_ratio_matches_closed_form() {
        // the pair (0.5, 1.5) has A = 1 and t = 0.5
        let p = pair(0.5, 1.5);
        let (a, g, h) = (1.0, libm::sqrt(0.75), 0.75);
        let closed = 2.0 * g * g * libm::log(a / g) / ((a - h) * a);
        let got = lambda_ratio_to_a(s(-1.0), coord(0.5));
        assert!(rel(got, closed) < 1e-14);
        assert!(rel(got, lambda_closed_form(-1.0, p).unwrap()) < 1e-14);
    }

    #[test]
    fn branch_tags() {
        let p = pair(1.0, 3.0);
        assert_eq!(lambda(s(-1.0 + 5e-6), p).branch, Branch::LimitMinusOne);
        assert_eq!(lambda(s(0.0), p).branch, Branch::LimitZero);
        assert_eq!(lambda(s(1.0 - 1e-5), p).branch, Branch::LimitOne);
        assert_eq!(lambda(s(0.5), p).branch, Branch::Generic);
        assert_eq!(lambda(s(0.0), pair(1.0, 1.0001)).branch, Branch::SeriesSmallT);
    }

    #[test]
    fn no_overflow_for_very_negative_s() {
        let c = SymmetricCoordinate::from_complement(1e-12).unwrap();
        let r = lambda_ratio_to_a(s(-200.0), c);
        // λ/A -> (s-1)/(s+1) (1-t) as t -> 1
        let want = 201.0 / 199.0 * 1e-12;
        assert!(r.is_finite() && rel(r, want) < 1e-9, "{r}");
        let r = lambda_ratio_to_a(s(200.0), c);
        assert!(r.is_finite() && r <= 2.0);
    }
}
