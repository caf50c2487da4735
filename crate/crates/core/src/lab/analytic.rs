//! The auxiliary functions used to compare `λ_s` with `L`, `I` and `S`:
//! `φ`, `μ`, `ν`, `ψ = e^μ ν`, the endpoint function `τ` and the `t → 1`
//! limits of `λ_s` against the classical means.

use crate::classical::{entropy_series, entropy_sum, ln_identric_ratio, MeanKind};
use crate::error::{Error, Result};
use crate::math::{exp, expm1, expm1_scaled, E, LN_2};
use crate::pair::SymmetricCoordinate;

use super::series::FloatCoefficients;

/// Below this `t`, `φ` is summed from its series, whose terms all share a sign.
const PHI_SERIES_SWITCH: f64 = 0.7;
/// Below this `t`, `ψ - 1` is summed as a power series in `t^2`.
const PSI_SERIES_SWITCH: f64 = 0.5;
const PSI_SERIES_TERMS: usize = 48;

fn interior(coord: SymmetricCoordinate) -> Result<()> {
    if coord.t() > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain("t must lie in (0, 1)"))
    }
}

/// `φ(t) = atanh(t)/t · K(t) + ln(1 - t^2)`, where
/// `K(t) = (1+t)ln(1+t) + (1-t)ln(1-t)`. Non-positive on `(0, 1)`.
pub fn phi(coord: SymmetricCoordinate) -> Result<f64> {
    interior(coord)?;
    let t = coord.t();
    if t < PHI_SERIES_SWITCH {
        let y = t * t;
        let mut sum = 0.0;
        let mut power = y;
        for (n, c) in FloatCoefficients::new().enumerate().take(200) {
            let term = c * power;
            sum += term;
            if n >= 2 && term.abs() <= 1e-18 * sum.abs() {
                break;
            }
            power *= y;
        }
        return Ok(sum);
    }
    Ok(coord.atanh() / t * entropy_sum(coord) + coord.ln_one_minus_sq())
}

/// `μ`, `ν`, `ψ` at one coordinate; `psi_minus_one` keeps the digits that
/// `psi` loses near `t = 0`, where `ψ - 1 ≈ t^4/360`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuNuPsi {
    pub mu: f64,
    pub nu: f64,
    pub psi: f64,
    pub psi_minus_one: f64,
}

/// `μ(t) = ln(I/A)`, `ν(t) = K(t)/t^2` and `ψ = e^μ ν = I/λ_1`.
pub fn mu_nu_psi(coord: SymmetricCoordinate) -> Result<MuNuPsi> {
    interior(coord)?;
    let t = coord.t();
    let mu = ln_identric_ratio(coord);
    let (nu, psi_minus_one) = if t < PSI_SERIES_SWITCH {
        let y = t * t;
        (entropy_series(y), psi_series(y))
    } else {
        let nu = entropy_sum(coord) / (t * t);
        (nu, expm1(mu) * nu + (nu - 1.0))
    };
    Ok(MuNuPsi { mu, nu, psi: 1.0 + psi_minus_one, psi_minus_one })
}

// ψ - 1 = Σ_{n≥2} p_n y^n, where p = (coefficients of e^μ) * (coefficients of ν)
// and μ = -Σ_{j≥1} y^j / (2j(2j+1)).
fn psi_series(y: f64) -> f64 {
    let mut m = [0.0; PSI_SERIES_TERMS];
    let mut e = [0.0; PSI_SERIES_TERMS];
    e[0] = 1.0;
    for (j, mj) in m.iter_mut().enumerate().skip(1) {
        let jf = j as f64;
        *mj = -1.0 / (2.0 * jf * (2.0 * jf + 1.0));
    }
    for n in 1..PSI_SERIES_TERMS {
        let acc: f64 = (1..=n).map(|j| j as f64 * m[j] * e[n - j]).sum();
        e[n] = acc / n as f64;
    }
    let nu = |k: usize| 1.0 / ((k as f64 + 1.0) * (2.0 * k as f64 + 1.0));
    let mut sum = 0.0;
    let mut power = y * y;
    for n in 2..PSI_SERIES_TERMS {
        let p: f64 = (0..=n).map(|j| e[j] * nu(n - j)).sum();
        let term = p * power;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
        power *= y;
    }
    sum
}

/// `lim_{t→1} ψ(t) = 4 ln 2 / e`.
pub fn psi_limit_at_one() -> f64 {
    4.0 * LN_2 / E
}

/// The right-hand side of `ψ'(t) = -e^{μ(t)} φ(t) / t^3`.
pub fn psi_derivative(coord: SymmetricCoordinate) -> Result<f64> {
    let t = coord.t();
    let mnp = mu_nu_psi(coord)?;
    Ok(-exp(mnp.mu) * phi(coord)? / (t * t * t))
}

/// `τ(s) = e(s-1)(2^{s+1}-2) / (2(s+1)(2^s-2)) - 1`, the `t → 1` limit of `λ_s/I - 1`.
pub fn tau(s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(Error::Domain("order parameter s must be finite"));
    }
    if s == 1.0 || s == -1.0 {
        return Err(Error::Domain("τ has a pole or an undefined quotient at s = ±1"));
    }
    // 2^{s+1}-2 = 2 expm1(s ln2) and 2^s-2 = 2 expm1((s-1) ln2)
    Ok(E * (s - 1.0) * expm1(s * LN_2) / (2.0 * (s + 1.0) * expm1((s - 1.0) * LN_2)) - 1.0)
}

/// `lim_{t→1} λ_s/A = (s-1)(2^{s+1}-2) / ((s+1)(2^s-2))` for `s > 0`.
fn lambda_limit_over_a(s: f64) -> f64 {
    if s > 2.0 {
        let tail = libm::exp2(-s);
        2.0 * (s - 1.0) / (s + 1.0) * (1.0 - tail) / (1.0 - 2.0 * tail)
    } else {
        expm1(s * LN_2) / ((s + 1.0) * expm1_scaled(s - 1.0, LN_2))
    }
}

/// `lim_{t→1} λ_s / M` in closed form. Defined for `s > 0`, where `λ_s/A`
/// has a positive limit; the limit is `+∞` against `H`, `G` and `L`, which
/// are negligible next to `A` as `b/a → ∞`.
pub fn limit_ratio_at_t1(s: f64, target: MeanKind) -> Result<f64> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain("the t → 1 limit is available for finite s > 0"));
    }
    let over_a = lambda_limit_over_a(s);
    Ok(match target {
        MeanKind::Harmonic | MeanKind::Geometric | MeanKind::Logarithmic => f64::INFINITY,
        MeanKind::Identric => over_a * E / 2.0,
        MeanKind::Arithmetic => over_a,
        MeanKind::Gini => over_a / 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coord(t: f64) -> SymmetricCoordinate {
        SymmetricCoordinate::new(t).unwrap()
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs()
    }

    // 50-digit references for φ and ψ - 1
    const REFERENCE: [(f64, f64, f64); 4] = [
        (0.01, -1.111269858890690413598941e-14, 2.778011482061617623781061e-11),
        (0.1, -1.12716213677076983497414e-8, 2.801329982269171779188772e-7),
        (0.5, -2.586520705259335317957539e-4, 2.189918034347010272517286e-4),
        (0.9, -0.04249392207306952090208573, 0.005375081351987874838730934),
    ];

    #[test]
    fn phi_reference_values() {
        for (t, want, _) in REFERENCE {
            assert!(close(phi(coord(t)).unwrap(), want, 1e-13), "t = {t}");
        }
        assert!(phi(SymmetricCoordinate::zero()).is_err());
    }

    #[test]
    fn phi_leading_term() {
        let t: f64 = 1e-3;
        assert!(close(phi(coord(t)).unwrap(), -t.powi(6) / 90.0, 1e-5));
    }

    #[test]
    fn phi_branches_meet() {
        let below = phi(coord(PHI_SERIES_SWITCH - 1e-15)).unwrap();
        let above = phi(coord(PHI_SERIES_SWITCH)).unwrap();
        assert!(close(below, above, 1e-13), "{below} vs {above}");
    }

    #[test]
    fn psi_reference_values() {
        for (t, _, want) in REFERENCE {
            let got = mu_nu_psi(coord(t)).unwrap();
            assert!(close(got.psi_minus_one, want, 1e-12), "t = {t}: {}", got.psi_minus_one);
        }
    }

    #[test]
    fn psi_branches_meet() {
        let below = mu_nu_psi(coord(PSI_SERIES_SWITCH - 1e-15)).unwrap().psi_minus_one;
        let above = mu_nu_psi(coord(PSI_SERIES_SWITCH)).unwrap().psi_minus_one;
        assert!(close(below, above, 1e-13), "{below} vs {above}");
    }

    #[test]
    fn psi_limits() {
        assert!(close(psi_limit_at_one(), 1.019978389735814037046288, 1e-15));
        let near_one = mu_nu_psi(SymmetricCoordinate::from_complement(1e-14).unwrap()).unwrap();
        assert!((near_one.psi - psi_limit_at_one()).abs() < 1e-6);
        let near_zero = mu_nu_psi(coord(1e-8)).unwrap();
        assert!((near_zero.psi - 1.0).abs() < 1e-6);
    }

    #[test]
    fn tau_values() {
        assert!(close(tau(2.0).unwrap(), 0.3591409142295226176801437, 1e-15));
        assert!(tau(1.0).is_err() && tau(-1.0).is_err());
        assert!(tau(1.037607281844356696805873).unwrap().abs() < 1e-14);
    }

    #[test]
    fn limit_ratios() {
        assert!(close(limit_ratio_at_t1(6.0, MeanKind::Gini).unwrap(), 315.0 / 434.0, 1e-15));
        assert!(close(limit_ratio_at_t1(5.0, MeanKind::Gini).unwrap(), 62.0 / 90.0, 1e-15));
        assert!(close(limit_ratio_at_t1(2.0, MeanKind::Arithmetic).unwrap(), 1.0, 1e-15));
        let s = 1.3;
        assert!(close(limit_ratio_at_t1(s, MeanKind::Identric).unwrap(), tau(s).unwrap() + 1.0, 1e-14));
        assert!(close(limit_ratio_at_t1(1.0, MeanKind::Arithmetic).unwrap(), 0.5 / LN_2, 1e-15));
        assert_eq!(limit_ratio_at_t1(3.0, MeanKind::Logarithmic).unwrap(), f64::INFINITY);
        assert!(limit_ratio_at_t1(-1.0, MeanKind::Gini).is_err());
        let big = limit_ratio_at_t1(2000.0, MeanKind::Gini).unwrap();
        assert!(close(big, 1999.0 / 2001.0, 1e-15));
    }
}
