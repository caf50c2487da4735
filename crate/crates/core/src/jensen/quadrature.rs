//! Adaptive Simpson quadrature for antiderivatives that are not supplied.

/// Absolute tolerance declared for numerically integrated antiderivatives.
pub(crate) const TOLERANCE: f64 = 1e-10;

const MAX_DEPTH: u32 = 48;

/// `∫_a^b h`, adaptive Simpson with Richardson correction. Orientation is
/// respected, so `integrate(h, a, b) = -integrate(h, b, a)`.
pub fn integrate<F: Fn(f64) -> f64 + ?Sized>(h: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let (fa, fb) = (h(a), h(b));
    let m = 0.5 * (a + b);
    let fm = h(m);
    let whole = simpson(a, b, fa, fm, fb);
    refine(h, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64 + ?Sized>(h: &F, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (h(lm), h(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    refine(h, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + refine(h, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}
