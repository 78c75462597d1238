// Copyright 2026 QDL Contributors
// SPDX-License-Identifier: Apache-2.0

//! Independent numerical oracles for the qdl test suites.
//!
//! Everything in here is deliberately dumb and self-contained: adaptive
//! Simpson quadrature plus a couple of grid helpers. The solvers under test
//! must never be imported here, otherwise the oracles stop being oracles.

use num_complex::Complex64;

/// Adaptive Simpson quadrature of a complex-valued integrand on `[a, b]`.
///
/// Splits intervals until the Richardson error estimate of each panel drops
/// below its share of `tol`. Panics if the recursion depth exceeds 60, which
/// for smooth integrands means the tolerance was nonsense.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: f64) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    assert!(b >= a, "integration bounds out of order");
    assert!(tol > 0.0, "tolerance must be positive");
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&f, a, b, fa, fm, fb, whole, tol, 0)
}

/// Real-valued convenience wrapper around [`integrate`].
pub fn integrate_real<F>(f: F, a: f64, b: f64, tol: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    integrate(|x| Complex64::new(f(x), 0.0), a, b, tol).re
}

/// Quadrature of `f` over the whole real line via the substitution
/// `x = tan(theta)`, mapping `(-inf, inf)` onto `(-pi/2, pi/2)`.
///
/// Suitable for integrands that decay at least like `1/x^2`.
pub fn integrate_real_line<F>(f: F, tol: f64) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let eps = 1e-12;
    integrate(
        |theta| {
            let x = theta.tan();
            let sec2 = 1.0 / (theta.cos() * theta.cos());
            f(x) * sec2
        },
        -std::f64::consts::FRAC_PI_2 + eps,
        std::f64::consts::FRAC_PI_2 - eps,
        tol,
    )
}

fn simpson(a: f64, b: f64, fa: Complex64, fm: Complex64, fb: Complex64) -> Complex64 {
    (fa + fm * 4.0 + fb) * ((b - a) / 6.0)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: Complex64,
    fm: Complex64,
    fb: Complex64,
    whole: Complex64,
    tol: f64,
    depth: u32,
) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    assert!(depth <= 60, "adaptive quadrature failed to converge");
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.norm() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
            + adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)
    }
}

/// `n` logarithmically spaced points between `lo` and `hi` (inclusive).
pub fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2);
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// `n` linearly spaced points between `lo` and `hi` (inclusive).
pub fn lin_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
