// Copyright 2026 QDL Contributors
// SPDX-License-Identifier: Apache-2.0

//! Adaptive Dormand-Prince 5(4) integration of complex linear systems.
//!
//! All solvers in this crate reduce to small systems of complex ODEs; this
//! module drives them across a caller-supplied output grid, stepping
//! adaptively inside each grid interval and landing exactly on the nodes.

use num_complex::Complex64;

use crate::error::{CoreError, Result};

/// Tolerances and limits for the adaptive stepper.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorOptions {
    /// Absolute tolerance per component.
    pub abs_tol: f64,
    /// Relative tolerance per component.
    pub rel_tol: f64,
    /// Hard cap on accepted + rejected steps per solve.
    pub max_steps: usize,
}

impl Default for IntegratorOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-8,
            max_steps: 4_000_000,
        }
    }
}

impl IntegratorOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0)
            || !(self.rel_tol.is_finite() && self.rel_tol >= 0.0)
        {
            return Err(CoreError::InvalidOptions(format!(
                "tolerances must be positive and finite, got abs {} rel {}",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.max_steps == 0 {
            return Err(CoreError::InvalidOptions("max_steps must be > 0".into()));
        }
        Ok(())
    }
}

// Dormand-Prince 5(4) tableau. The b row equals the last a row (FSAL); the
// e row is the difference between the 5th and embedded 4th order weights.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A2: [f64; 1] = [1.0 / 5.0];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
const A7: [f64; 6] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Integrate `dy/dt = rhs(t, y)` from `times[0]` and return the state at
/// every grid node, including the initial one.
///
/// The contract is plain local error control: halving the tolerances must
/// change the solution by less than the implied error estimate. Callers
/// that need a guarantee cross-check against an independent route.
pub fn integrate_on_grid<F>(
    mut rhs: F,
    y0: &[Complex64],
    times: &[f64],
    opts: &IntegratorOptions,
) -> Result<Vec<Vec<Complex64>>>
where
    F: FnMut(f64, &[Complex64], &mut [Complex64]),
{
    opts.validate()?;
    assert!(times.len() >= 2, "need at least two output times");
    let dim = y0.len();
    let span = times[times.len() - 1] - times[0];
    let h_min = span * 1e-13;

    let mut y = y0.to_vec();
    let mut t = times[0];
    let mut out = Vec::with_capacity(times.len());
    out.push(y.clone());

    let mut k: [Vec<Complex64>; 7] = Default::default();
    for kj in &mut k {
        *kj = vec![Complex64::ZERO; dim];
    }
    let mut stage = vec![Complex64::ZERO; dim];
    let mut y_new = vec![Complex64::ZERO; dim];

    rhs(t, &y, &mut k[0]);
    let mut h = (span / 100.0).min(times[1] - times[0]);
    let mut steps = 0usize;

    for &target in &times[1..] {
        while target - t > span * 1e-14 {
            steps += 1;
            if steps > opts.max_steps {
                return Err(CoreError::Stiffness {
                    t,
                    hint: format!(
                        "exceeded {} steps; for extreme bandwidths use the Laplace route \
                         or the Markovian baseline",
                        opts.max_steps
                    ),
                });
            }
            let clamped = h >= target - t;
            let h_eff = if clamped { target - t } else { h };

            // stages 2..7
            for (s, a_row) in [
                &A2[..], &A3[..], &A4[..], &A5[..], &A6[..], &A7[..],
            ]
            .iter()
            .enumerate()
            {
                for i in 0..dim {
                    let mut acc = Complex64::ZERO;
                    for (j, &a) in a_row.iter().enumerate() {
                        if a != 0.0 {
                            acc += k[j][i] * a;
                        }
                    }
                    stage[i] = y[i] + acc * h_eff;
                }
                let (head, tail) = k.split_at_mut(s + 1);
                let _ = head;
                rhs(t + C[s + 1] * h_eff, &stage, &mut tail[0]);
            }
            // 5th order solution is stage 7 itself (A7 == b)
            y_new.copy_from_slice(&stage);

            // scaled error norm
            let mut err_sq = 0.0;
            for i in 0..dim {
                let mut e = Complex64::ZERO;
                for j in 0..7 {
                    if E[j] != 0.0 {
                        e += k[j][i] * E[j];
                    }
                }
                let e = e.norm() * h_eff;
                let sc = opts.abs_tol + opts.rel_tol * y[i].norm().max(y_new[i].norm());
                err_sq += (e / sc) * (e / sc);
            }
            let err = (err_sq / dim as f64).sqrt();

            if err.is_finite() && err <= 1.0 {
                t += h_eff;
                std::mem::swap(&mut y, &mut y_new);
                k.swap(0, 6); // FSAL: k7 at the new point becomes k1
                let fac = if err == 0.0 {
                    5.0
                } else {
                    (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
                };
                if clamped {
                    h = h.max(h_eff * fac);
                } else {
                    h = h_eff * fac;
                }
                if target - t <= span * 1e-14 {
                    t = target;
                    out.push(y.clone());
                }
            } else {
                let fac = if err.is_finite() {
                    (0.9 * err.powf(-0.2)).clamp(0.1, 0.5)
                } else {
                    0.1
                };
                h = h_eff * fac;
                if h < h_min {
                    return Err(CoreError::Stiffness {
                        t,
                        hint: "step size underflow; for extreme bandwidths use the \
                               Laplace route or the Markovian baseline"
                            .into(),
                    });
                }
                // k1 still belongs to (t, y); nothing else to restore
            }
        }
    }
    Ok(out)
}
