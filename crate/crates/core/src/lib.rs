//! Jensen-functional quotient means and the one-parameter family `λ_s`.
//!
//! For convex `f, g` the quotient of Jensen functionals
//!
//! ```text
//!   Λ_{f,g}(p, x) = (Σ p_i f(x_i) - f(Σ p_i x_i)) / (Σ p_i g(x_i) - g(Σ p_i x_i))
//! ```
//!
//! is a mean of the points `x_i` exactly when `f''(t) = t g''(t)`. Taking the
//! pair `(f_{s+1}, f_s)` from the power family `f_s'' = t^{s-2}` with two equal
//! weights gives the bivariate means `λ_s(a, b)`, which interpolate between
//! the classical harmonic, geometric, logarithmic, identric, arithmetic and
//! Gini means.
//!
//! The crate is `no_std` (it needs `alloc` only for samples, reports and the
//! exact rational coefficient tables). Modules:
//!
//! - [`classical`]: the six classical means and their ratios to `A`.
//! - [`lambda`]: stable evaluation of `λ_s` over the whole `(s, t)` plane.
//! - [`jensen`]: Jensen functionals, `Λ_{f,g}`, the power family, `χ_s`
//!   and the cubic moment bound.
//! - [`lab`]: the comparison toolkit used to certify intermediate-mean
//!   inequalities and recover their critical exponents.
#![no_std]
// `!(x > 0.0)` is how NaN gets rejected along with the rest.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Reference values in tests keep all the digits they were computed with.
#![cfg_attr(test, allow(clippy::excessive_precision))]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classical;
mod error;
pub mod jensen;
pub mod lab;
pub mod lambda;
mod math;
mod pair;

pub use classical::MeanKind;
pub use error::{Error, Result};
pub use lambda::{Branch, LambdaValue, OrderParameter};
pub use pair::{PositivePair, SymmetricCoordinate};
