//! Exact coefficient tables for the expansion of `φ(t)/t^2` and the sums `d_n`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `c_n` (two independent ways) for `n ≤ c_max` and `d_n` for `n ≤ d_max`,
/// in exact rational arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTable {
    c_convolution: Vec<BigRational>,
    c_closed: Vec<BigRational>,
    d: Vec<BigRational>,
}

impl SeriesTable {
    pub fn new(c_max: usize, d_max: usize) -> Self {
        let d = d_table(d_max.max(c_max));
        let c_closed = (0..=c_max).map(|n| ratio(2, ((n + 1) * (2 * n + 3)) as i64) * &d[n]).collect();
        let c_convolution = (0..=c_max).map(c_by_convolution).collect();
        let mut table = Self { c_convolution, c_closed, d };
        table.d.truncate(d_max + 1);
        table
    }

    /// Largest `n` with a `c_n` entry.
    pub fn c_max(&self) -> usize {
        self.c_closed.len() - 1
    }

    /// Largest `n` with a `d_n` entry.
    pub fn d_max(&self) -> usize {
        self.d.len() - 1
    }

    pub fn c_convolution_exact(&self, n: usize) -> &BigRational {
        &self.c_convolution[n]
    }

    pub fn c_closed_exact(&self, n: usize) -> &BigRational {
        &self.c_closed[n]
    }

    pub fn d_exact(&self, n: usize) -> &BigRational {
        &self.d[n]
    }

    pub fn c_convolution(&self, n: usize) -> f64 {
        to_f64(&self.c_convolution[n])
    }

    pub fn c_closed(&self, n: usize) -> f64 {
        to_f64(&self.c_closed[n])
    }

    pub fn d(&self, n: usize) -> f64 {
        to_f64(&self.d[n])
    }

    /// `|conv - closed| / |closed|` evaluated exactly, then rounded; 0 when both vanish.
    pub fn relative_disagreement(&self, n: usize) -> f64 {
        let diff = (&self.c_convolution[n] - &self.c_closed[n]).abs();
        if diff.is_zero() {
            return 0.0;
        }
        if self.c_closed[n].is_zero() {
            return f64::INFINITY;
        }
        to_f64(&(diff / self.c_closed[n].abs()))
    }

    /// Whether the two formulas agree to relative `1e-14`.
    pub fn agrees(&self, n: usize) -> bool {
        self.relative_disagreement(n) <= 1e-14
    }
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `c_n` for `n ≤ n_max` (and `d_n` alongside). Requires `n_max ≥ 2`.
pub fn series_c(n_max: usize) -> Result<SeriesTable> {
    if n_max < 2 {
        return Err(Error::Usage("series needs n_max >= 2"));
    }
    Ok(SeriesTable::new(n_max, n_max))
}

/// `d_n` for `n ≤ n_max` with `c_n` only up to 2. Requires `n_max ≥ 2`.
pub fn series_d(n_max: usize) -> Result<SeriesTable> {
    if n_max < 2 {
        return Err(Error::Usage("series needs n_max >= 2"));
    }
    Ok(SeriesTable::new(2, n_max))
}

// -1/(n+1) + Σ_{k=0}^{n} 1/((2n-2k+1)(k+1)(2k+1))
fn c_by_convolution(n: usize) -> BigRational {
    let mut acc = -ratio(1, n as i64 + 1);
    for k in 0..=n {
        let den = (2 * (n - k) + 1) as i64 * (k as i64 + 1) * (2 * k as i64 + 1);
        acc += ratio(1, den);
    }
    acc
}

// d_n = (n+2) Σ_{k=1}^{n} 1/(2k+1) - (n+1) Σ_{k=1}^{n} 1/(2k), with d_0 = 0
fn d_table(n_max: usize) -> Vec<BigRational> {
    let mut odd = BigRational::zero();
    let mut even = BigRational::zero();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(BigRational::zero());
    for n in 1..=n_max {
        odd += ratio(1, 2 * n as i64 + 1);
        even += ratio(1, 2 * n as i64);
        out.push(ratio(n as i64 + 2, 1) * &odd - ratio(n as i64 + 1, 1) * &even);
    }
    out
}

/// `c_n` in double precision from the closed form, for summing `φ` directly.
/// The harmonic sums are compensated; the relative error stays near `1e-14`
/// for the `n ≤ 100` needed below `t = 0.7`.
pub(crate) struct FloatCoefficients {
    n: usize,
    odd: crate::math::CompensatedSum,
    even: crate::math::CompensatedSum,
}

impl FloatCoefficients {
    pub(crate) fn new() -> Self {
        Self { n: 0, odd: Default::default(), even: Default::default() }
    }
}

impl Iterator for FloatCoefficients {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let n = self.n as f64;
        if self.n > 0 {
            self.odd.add(1.0 / (2.0 * n + 1.0));
            self.even.add(1.0 / (2.0 * n));
        }
        self.n += 1;
        let d = (n + 2.0) * self.odd.value() - (n + 1.0) * self.even.value();
        Some(2.0 / ((n + 1.0) * (2.0 * n + 3.0)) * d)
    }
}
