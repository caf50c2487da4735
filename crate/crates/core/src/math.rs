//! Thin wrappers over `libm` plus the few numerical helpers shared by the
//! evaluation modules.

pub(crate) use libm::{atanh, exp, expm1, log as ln, log1p, sqrt};

pub(crate) const LN_2: f64 = core::f64::consts::LN_2;
pub(crate) const E: f64 = core::f64::consts::E;

/// `expm1(eps * x) / eps`, continuous at `eps = 0` where it equals `x`.
pub(crate) fn expm1_scaled(eps: f64, x: f64) -> f64 {
    if eps == 0.0 {
        x
    } else {
        expm1(eps * x) / eps
    }
}

/// `sinh(z) / z`, equal to 1 at the origin.
pub(crate) fn sinhc(z: f64) -> f64 {
    if z.abs() < 1e-4 {
        1.0 + z * z / 6.0
    } else {
        libm::sinh(z) / z
    }
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

pub(crate) fn compensated<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut acc = CompensatedSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}
