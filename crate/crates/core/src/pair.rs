use crate::error::{Error, Result};
use crate::math::{atanh, exp, ln, log1p};

/// An unordered pair of positive reals, stored with `lo <= hi`.
///
/// Every mean in this crate is symmetric, so the pair is canonicalized on
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivePair {
    lo: f64,
    hi: f64,
}

impl PositivePair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Domain("pair entries must be finite"));
        }
        if a <= 0.0 || b <= 0.0 {
            return Err(Error::Domain("pair entries must be positive"));
        }
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn is_equal(&self) -> bool {
        self.lo == self.hi
    }

    /// `A(a, b)`, computed without overflow for entries up to `f64::MAX`.
    pub fn arithmetic(&self) -> f64 {
        0.5 * self.lo + 0.5 * self.hi
    }

    /// The coordinate `t = (b - a) / (b + a)` together with its complement
    /// `1 - t = 2a / (a + b)`, both computed directly from the pair.
    pub fn coordinate(&self) -> SymmetricCoordinate {
        let mean = self.arithmetic();
        let t = (0.5 * self.hi - 0.5 * self.lo) / mean;
        let complement = self.lo / mean;
        SymmetricCoordinate { t, complement }
    }

    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::new(self.lo * k, self.hi * k)
    }
}

/// The normalized coordinate `t ∈ [0, 1)` of a pair, `(a, b) = A·(1 - t, 1 + t)`.
///
/// The complement `1 - t` is carried separately so that pairs with enormous
/// ratios `b/a` keep full relative precision in `1 - t` even once `t` itself
/// rounds to `1.0`. The invariant is `0 <= t` and `complement > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricCoordinate {
    t: f64,
    complement: f64,
}

impl SymmetricCoordinate {
    pub fn new(t: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&t) {
            return Err(Error::Domain("t must lie in [0, 1)"));
        }
        Ok(Self { t, complement: 1.0 - t })
    }

    /// Builds the coordinate from `1 - t`, which must lie in `(0, 1]`.
    pub fn from_complement(complement: f64) -> Result<Self> {
        if !(complement > 0.0 && complement <= 1.0) {
            return Err(Error::Domain("1 - t must lie in (0, 1]"));
        }
        Ok(Self { t: 1.0 - complement, complement })
    }

    /// Builds the coordinate from the log-odds `z = ln(t / (1 - t))`.
    ///
    /// Both `t` and `1 - t` are recovered with full relative precision, which
    /// makes `z` a convenient search variable that resolves both endpoints.
    pub fn from_log_odds(z: f64) -> Result<Self> {
        if !z.is_finite() {
            return Err(Error::Domain("log-odds must be finite"));
        }
        let t = 1.0 / (1.0 + exp(-z));
        let complement = 1.0 / (1.0 + exp(z));
        if !(complement > 0.0) {
            return Err(Error::Domain("log-odds outside the representable range"));
        }
        Ok(Self { t, complement })
    }

    pub fn zero() -> Self {
        Self { t: 0.0, complement: 1.0 }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn complement(&self) -> f64 {
        self.complement
    }

    /// `ln(t / (1 - t))`.
    pub fn log_odds(&self) -> f64 {
        ln(self.t) - ln(self.complement)
    }

    /// The representative pair `(1 - t, 1 + t)`, whose arithmetic mean is 1.
    pub fn unit_pair(&self) -> Result<PositivePair> {
        PositivePair::new(self.complement, 1.0 + self.t)
    }

    /// `ln(1 + t)`.
    pub(crate) fn ln_plus(&self) -> f64 {
        log1p(self.t)
    }

    /// `ln(1 - t)`.
    pub(crate) fn ln_minus(&self) -> f64 {
        if self.t < 0.5 {
            log1p(-self.t)
        } else {
            ln(self.complement)
        }
    }

    /// `ln(1 - t^2)`.
    pub(crate) fn ln_one_minus_sq(&self) -> f64 {
        if self.t < 0.5 {
            log1p(-self.t * self.t)
        } else {
            ln(self.complement) + log1p(self.t)
        }
    }

    /// `atanh(t) = (ln(1 + t) - ln(1 - t)) / 2`.
    pub(crate) fn atanh(&self) -> f64 {
        if self.t < 0.5 {
            atanh(self.t)
        } else {
            0.5 * (log1p(self.t) - ln(self.complement))
        }
    }
}
