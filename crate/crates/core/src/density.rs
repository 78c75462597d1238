// Copyright 2026 QDL Contributors
// SPDX-License-Identifier: Apache-2.0

//! Two-qubit density matrices in the ordered product basis
//! `{|11>, |10>, |01>, |00>}`.
//!
//! The doubly excited state is kept explicit even though the in-scope
//! dynamics never populates it: that emptiness is an invariant worth
//! measuring, not assuming.

use nalgebra::{Matrix4, SMatrix};
use num_complex::Complex64;

use crate::error::{CoreError, Result};

/// Hermiticity tolerance on stored density matrices.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Trace tolerance on stored density matrices.
pub const TRACE_TOL: f64 = 1e-9;
/// Allowed excess of `|a|^2 + |b|^2` above one when building states from
/// amplitudes.
pub const AMPLITUDE_EXCESS_TOL: f64 = 1e-9;
/// Imaginary parts larger than this on a population are a hermiticity
/// violation rather than rounding noise.
pub const POPULATION_IMAG_TOL: f64 = 1e-10;

/// Labels of the four product-basis states, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisState {
    /// `|11>`: both qubits excited (index 0).
    BothExcited,
    /// `|10>`: qubit 1 excited, qubit 2 in the ground state (index 1).
    QubitOneExcited,
    /// `|01>`: qubit 2 excited, qubit 1 in the ground state (index 2).
    QubitTwoExcited,
    /// `|00>`: both qubits in the ground state (index 3).
    BothGround,
}

impl BasisState {
    /// Row/column index of this state in the 4x4 matrix.
    pub fn index(self) -> usize {
        match self {
            BasisState::BothExcited => 0,
            BasisState::QubitOneExcited => 1,
            BasisState::QubitTwoExcited => 2,
            BasisState::BothGround => 3,
        }
    }

    /// Two-character ket label, e.g. `"10"`.
    pub fn label(self) -> &'static str {
        match self {
            BasisState::BothExcited => "11",
            BasisState::QubitOneExcited => "10",
            BasisState::QubitTwoExcited => "01",
            BasisState::BothGround => "00",
        }
    }
}

/// A validated 4x4 reduced density matrix of the two qubits.
///
/// Construction checks hermiticity and unit trace. Positivity is *not*
/// checked: approximate master equations may legitimately produce negative
/// populations, and that failure is one of the observables this library
/// exists to measure. Use [`DensityMatrix::min_eigenvalue`] to quantify it.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: Matrix4<Complex64>,
}

impl DensityMatrix {
    /// Validate and wrap a raw matrix.
    pub fn new(m: Matrix4<Complex64>) -> Result<Self> {
        let herm = hermiticity_error(&m);
        if !herm.is_finite() || herm > HERMITICITY_TOL {
            return Err(CoreError::InvalidDensityMatrix(format!(
                "hermiticity error {herm:.3e} exceeds {HERMITICITY_TOL:.0e}"
            )));
        }
        let tr = m.trace();
        let tr_err = (tr - Complex64::new(1.0, 0.0)).norm();
        if !tr_err.is_finite() || tr_err > TRACE_TOL {
            return Err(CoreError::InvalidDensityMatrix(format!(
                "trace {tr} deviates from 1 by {tr_err:.3e}, tolerance {TRACE_TOL:.0e}"
            )));
        }
        Ok(Self { m })
    }

    /// Density matrix of the pure one-excitation state with amplitudes `a`
    /// on `|10>` and `b` on `|01>`, the rest of the weight sitting in
    /// `|00>` (excitation lost to the reservoirs).
    ///
    /// Populations are `|a|^2`, `|b|^2`, `1 - |a|^2 - |b|^2` and the only
    /// coherence is `<10|rho|01> = a * conj(b)`; the result is positive
    /// semidefinite by construction. Fails if `|a|^2 + |b|^2` exceeds one
    /// beyond [`AMPLITUDE_EXCESS_TOL`].
    pub fn from_amplitudes(a: Complex64, b: Complex64) -> Result<Self> {
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if !norm_sq.is_finite() || norm_sq > 1.0 + AMPLITUDE_EXCESS_TOL {
            return Err(CoreError::InvalidAmplitudes { norm_sq });
        }
        let mut m = Matrix4::zeros();
        m[(1, 1)] = Complex64::new(a.norm_sqr(), 0.0);
        m[(2, 2)] = Complex64::new(b.norm_sqr(), 0.0);
        m[(1, 2)] = a * b.conj();
        m[(2, 1)] = b * a.conj();
        m[(3, 3)] = Complex64::new(1.0 - norm_sq, 0.0);
        Self::new(m)
    }

    /// Diagonal element `<which|rho|which>` as a real probability.
    ///
    /// The imaginary part is discarded after checking it is below
    /// [`POPULATION_IMAG_TOL`]; anything larger is reported as a
    /// hermiticity violation.
    pub fn population(&self, which: BasisState) -> Result<f64> {
        let v = self.m[(which.index(), which.index())];
        if v.im.abs() >= POPULATION_IMAG_TOL {
            return Err(CoreError::HermiticityViolation { imag: v.im });
        }
        Ok(v.re)
    }

    /// The one-excitation coherence `<10|rho|01>`.
    pub fn coherence(&self) -> Complex64 {
        self.m[(1, 2)]
    }

    /// Borrow the raw matrix.
    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.m
    }

    /// Max-norm deviation from hermiticity.
    pub fn hermiticity_error(&self) -> f64 {
        hermiticity_error(&self.m)
    }

    /// Absolute deviation of the trace from one.
    pub fn trace_error(&self) -> f64 {
        (self.m.trace() - Complex64::new(1.0, 0.0)).norm()
    }

    /// Largest magnitude in the `|11>` row and column. Zero-temperature
    /// one-excitation dynamics must keep this at integration-noise level.
    pub fn doubly_excited_weight(&self) -> f64 {
        (0..4)
            .flat_map(|k| [self.m[(0, k)].norm(), self.m[(k, 0)].norm()])
            .fold(0.0, f64::max)
    }

    /// Eigenvalues in ascending order.
    ///
    /// Computed from the real symmetric 8x8 embedding
    /// `[[X, -Y], [Y, X]]` of the Hermitian matrix `X + iY`, whose spectrum
    /// is the wanted one with every eigenvalue doubled.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let mut e: SMatrix<f64, 8, 8> = SMatrix::zeros();
        for r in 0..4 {
            for c in 0..4 {
                let x = self.m[(r, c)].re;
                let y = self.m[(r, c)].im;
                e[(r, c)] = x;
                e[(r + 4, c + 4)] = x;
                e[(r, c + 4)] = -y;
                e[(r + 4, c)] = y;
            }
        }
        let mut ev: Vec<f64> = e.symmetric_eigen().eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        [ev[0], ev[2], ev[4], ev[6]]
    }

    /// Smallest eigenvalue; negative values witness positivity violation.
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }
}

fn hermiticity_error(m: &Matrix4<Complex64>) -> f64 {
    let mut err: f64 = 0.0;
    for r in 0..4 {
        for c in 0..4 {
            err = err.max((m[(r, c)] - m[(c, r)].conj()).norm());
        }
    }
    err
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn pure_excited_first_qubit() {
        let rho = DensityMatrix::from_amplitudes(Complex64::new(1.0, 0.0), Complex64::ZERO)
            .unwrap();
        assert_relative_eq!(rho.population(BasisState::QubitOneExcited).unwrap(), 1.0);
        assert_relative_eq!(rho.population(BasisState::QubitTwoExcited).unwrap(), 0.0);
        assert_relative_eq!(rho.population(BasisState::BothGround).unwrap(), 0.0);
        assert_relative_eq!(rho.population(BasisState::BothExcited).unwrap(), 0.0);
    }

    #[test]
    fn antisymmetric_bell_state() {
        let amp = std::f64::consts::FRAC_1_SQRT_2;
        let rho = DensityMatrix::from_amplitudes(
            Complex64::new(amp, 0.0),
            Complex64::new(-amp, 0.0),
        )
        .unwrap();
        assert_relative_eq!(
            rho.population(BasisState::QubitOneExcited).unwrap(),
            0.5,
            epsilon = 1e-15
        );
        assert_relative_eq!(
            rho.population(BasisState::QubitTwoExcited).unwrap(),
            0.5,
            epsilon = 1e-15
        );
        assert_relative_eq!(rho.coherence().re, -0.5, epsilon = 1e-15);
        assert_relative_eq!(rho.coherence().im, 0.0, epsilon = 1e-15);
        assert_relative_eq!(
            rho.population(BasisState::BothGround).unwrap(),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn partially_decayed_amplitudes() {
        // a = 0.6, b = 0.4i: populations 0.36 / 0.16 / 0.48, coherence -0.24i
        let rho =
            DensityMatrix::from_amplitudes(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.4))
                .unwrap();
        assert_relative_eq!(
            rho.population(BasisState::QubitOneExcited).unwrap(),
            0.36,
            epsilon = 1e-15
        );
        assert_relative_eq!(
            rho.population(BasisState::QubitTwoExcited).unwrap(),
            0.16,
            epsilon = 1e-15
        );
        assert_relative_eq!(
            rho.population(BasisState::BothGround).unwrap(),
            0.48,
            epsilon = 1e-15
        );
        assert_relative_eq!(rho.coherence().re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(rho.coherence().im, -0.24, epsilon = 1e-15);
    }

    #[test]
    fn overfilled_amplitudes_rejected() {
        let err = DensityMatrix::from_amplitudes(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.1, 0.0),
        )
        .unwrap_err();
        assert!(matches!(err, CoreError::InvalidAmplitudes { .. }));
    }

    #[test]
    fn population_of_explicit_diagonal() {
        let mut m = Matrix4::zeros();
        m[(1, 1)] = Complex64::new(0.3, 0.0);
        m[(2, 2)] = Complex64::new(0.3, 0.0);
        m[(3, 3)] = Complex64::new(0.4, 0.0);
        let rho = DensityMatrix::new(m).unwrap();
        assert_relative_eq!(rho.population(BasisState::BothGround).unwrap(), 0.4);
    }

    #[test]
    fn hermiticity_violation_detected_on_population() {
        let mut m = Matrix4::zeros();
        m[(1, 1)] = Complex64::new(1.0, 5e-11);
        // keep the matrix itself within construction tolerance
        let rho = DensityMatrix { m };
        assert!(rho.population(BasisState::QubitOneExcited).is_ok());
        let mut m = Matrix4::zeros();
        m[(1, 1)] = Complex64::new(1.0, 5e-10);
        let rho = DensityMatrix { m };
        assert!(matches!(
            rho.population(BasisState::QubitOneExcited),
            Err(CoreError::HermiticityViolation { .. })
        ));
    }

    #[test]
    fn construction_rejects_bad_matrices() {
        // non-hermitian
        let mut m = Matrix4::<Complex64>::zeros();
        m[(1, 2)] = Complex64::new(0.5, 0.0);
        m[(1, 1)] = Complex64::new(1.0, 0.0);
        assert!(DensityMatrix::new(m).is_err());
        // wrong trace
        let mut m = Matrix4::<Complex64>::zeros();
        m[(1, 1)] = Complex64::new(0.9, 0.0);
        assert!(DensityMatrix::new(m).is_err());
    }

    #[test]
    fn eigenvalues_of_bell_mixture() {
        // rho = 1/2 |psi-><psi-| + 1/2 |00><00| has eigenvalues {0, 0, 1/2, 1/2}
        let amp = 0.5f64.sqrt();
        let pure = DensityMatrix::from_amplitudes(
            Complex64::new(amp, 0.0),
            Complex64::new(-amp, 0.0),
        )
        .unwrap();
        let mut m = pure.matrix() * Complex64::new(0.5, 0.0);
        m[(3, 3)] += Complex64::new(0.5, 0.0);
        let rho = DensityMatrix::new(m).unwrap();
        let ev = rho.eigenvalues();
        assert_relative_eq!(ev[0], 0.0, epsilon = 1e-12);
        assert_relative_eq!(ev[1], 0.0, epsilon = 1e-12);
        assert_relative_eq!(ev[2], 0.5, epsilon = 1e-12);
        assert_relative_eq!(ev[3], 0.5, epsilon = 1e-12);
        assert!(rho.min_eigenvalue().abs() < 1e-12);
    }

    #[test]
    fn doubly_excited_weight_sees_row_and_column() {
        let mut m = Matrix4::<Complex64>::zeros();
        m[(1, 1)] = Complex64::new(1.0, 0.0);
        m[(0, 3)] = Complex64::new(0.0, 1e-11);
        m[(3, 0)] = Complex64::new(0.0, -1e-11);
        let rho = DensityMatrix::new(m).unwrap();
        assert_relative_eq!(rho.doubly_excited_weight(), 1e-11, epsilon = 1e-25);
    }
}
