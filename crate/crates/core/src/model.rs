// Copyright 2026 QDL Contributors
// SPDX-License-Identifier: Apache-2.0

//! Physical parameters of the two-qubit model and the Lorentzian reservoirs.
//!
//! Two qubits with a common transition frequency `omega0` are coupled to each
//! other with strength `omega_coupling` and each to its own zero-temperature
//! bosonic reservoir. A reservoir is summarized by its Lorentzian spectral
//! density, the resulting exponential memory kernel, and the kernel's Laplace
//! image; those three are everything the solvers need.
//!
//! # Units
//!
//! All rates and angular frequencies are expressed in units of a reference
//! decay rate `gamma_ref` and all times in `1/gamma_ref`, so a time axis is
//! the dimensionless product `gamma_ref * t`. By convention `gamma_ref` is
//! the Markovian decay rate of bath 1, i.e. presets simply set
//! `bath1.gamma = 1`. Nothing in the code rescales anything; the convention
//! only fixes how numbers are read.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{CoreError, Result};

/// Tolerance on the one-excitation normalization of the initial amplitudes.
pub const NORM_TOL: f64 = 1e-12;

/// Lorentzian description of one bosonic reservoir at zero temperature.
///
/// The spectral density is
///
/// ```text
/// J(omega) = (1/2pi) * gamma * lambda^2 / ((center - omega)^2 + lambda^2)
/// ```
///
/// `gamma` is the decay rate the qubit would have in the Markovian limit,
/// `lambda` the half-width of the Lorentzian and therefore the inverse
/// memory time of the reservoir. `center` is the resonance frequency, equal
/// to the qubit frequency for the resonant coupling assumed throughout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralDensity {
    /// Markovian-limit decay rate (units of `gamma_ref`).
    pub gamma: f64,
    /// Lorentzian half-width, the inverse reservoir memory time.
    pub lambda: f64,
    /// Resonance center of the Lorentzian (angular frequency).
    pub center: f64,
}

impl SpectralDensity {
    /// Build a validated spectral density.
    ///
    /// `gamma = 0` is accepted and describes a decoupled reservoir, which the
    /// closed-system limits rely on; negative rates and non-positive widths
    /// are rejected.
    pub fn new(gamma: f64, lambda: f64, center: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma < 0.0 {
            return Err(CoreError::InvalidParameter(format!(
                "bath gamma must be finite and >= 0, got {gamma}"
            )));
        }
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(CoreError::InvalidParameter(format!(
                "bath lambda must be finite and > 0, got {lambda}"
            )));
        }
        if !center.is_finite() || center <= 0.0 {
            return Err(CoreError::InvalidParameter(format!(
                "bath center frequency must be finite and > 0, got {center}"
            )));
        }
        Ok(Self {
            gamma,
            lambda,
            center,
        })
    }

    /// Spectral weight `J(omega)` of the Lorentzian; non-negative for all
    /// real `omega` and normalized so the full-line integral is
    /// `gamma * lambda / 2`.
    pub fn spectral_weight(&self, omega: f64) -> f64 {
        let d = self.center - omega;
        self.gamma * self.lambda * self.lambda / (2.0 * PI * (d * d + self.lambda * self.lambda))
    }

    /// Two-time reservoir correlation kernel
    /// `f(tau) = (gamma * lambda / 2) * exp(-lambda |tau|)`.
    ///
    /// This is the closed form for the resonant Lorentzian with the
    /// frequency integral extended over the whole real line, valid for
    /// `lambda << center`; it is real and even in `tau`.
    pub fn correlation_kernel(&self, tau: f64) -> Complex64 {
        Complex64::new(
            0.5 * self.gamma * self.lambda * (-self.lambda * tau.abs()).exp(),
            0.0,
        )
    }

    /// Laplace image of the kernel,
    /// `f~(s) = gamma * lambda / (2 (s + lambda))`, defined for
    /// `Re(s) > -lambda`.
    pub fn kernel_laplace(&self, s: Complex64) -> Result<Complex64> {
        if s.re <= -self.lambda {
            return Err(CoreError::LaplaceDomain {
                re_s: s.re,
                neg_lambda: -self.lambda,
            });
        }
        Ok(Complex64::new(0.5 * self.gamma * self.lambda, 0.0) / (s + self.lambda))
    }

    /// Time-integrated kernel `Gamma(t) = (gamma/2)(1 - exp(-lambda t))`,
    /// the dissipation rate accumulated up to `t`.
    pub(crate) fn integrated_kernel(&self, t: f64) -> f64 {
        0.5 * self.gamma * (1.0 - (-self.lambda * t).exp())
    }

    /// `gamma * lambda / 2`, the kernel value at zero delay.
    pub(crate) fn kernel_at_zero(&self) -> f64 {
        0.5 * self.gamma * self.lambda
    }
}

/// Full parameter set of the model: qubit frequencies, qubit-qubit coupling,
/// the two reservoirs, and the initial one-excitation amplitudes of
/// `|10>` and `|01>`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    /// Common qubit transition frequency (units of `gamma_ref`).
    pub omega0: f64,
    /// Qubit-qubit exchange coupling strength (units of `gamma_ref`).
    pub omega_coupling: f64,
    /// Reservoir coupled to qubit 1.
    pub bath1: SpectralDensity,
    /// Reservoir coupled to qubit 2.
    pub bath2: SpectralDensity,
    /// Initial amplitude of `|10>`.
    pub a0: Complex64,
    /// Initial amplitude of `|01>`.
    pub b0: Complex64,
}

impl ModelParams {
    /// Build a validated parameter set.
    ///
    /// Requires `omega0 > 0`, `omega_coupling >= 0`, and normalized initial
    /// amplitudes `|a0|^2 + |b0|^2 = 1` within [`NORM_TOL`].
    pub fn new(
        omega0: f64,
        omega_coupling: f64,
        bath1: SpectralDensity,
        bath2: SpectralDensity,
        a0: Complex64,
        b0: Complex64,
    ) -> Result<Self> {
        if !omega0.is_finite() || omega0 <= 0.0 {
            return Err(CoreError::InvalidParameter(format!(
                "omega0 must be finite and > 0, got {omega0}"
            )));
        }
        if !omega_coupling.is_finite() || omega_coupling < 0.0 {
            return Err(CoreError::InvalidParameter(format!(
                "omega_coupling must be finite and >= 0, got {omega_coupling}"
            )));
        }
        let norm_sq = a0.norm_sqr() + b0.norm_sqr();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(CoreError::InvalidAmplitudes { norm_sq });
        }
        Ok(Self {
            omega0,
            omega_coupling,
            bath1,
            bath2,
            a0,
            b0,
        })
    }

    /// Identical reservoirs on both qubits.
    pub fn symmetric(
        omega0: f64,
        omega_coupling: f64,
        bath: SpectralDensity,
        a0: Complex64,
        b0: Complex64,
    ) -> Result<Self> {
        Self::new(omega0, omega_coupling, bath, bath, a0, b0)
    }

    /// Identical reservoirs with the maximally entangled antisymmetric
    /// initial state `(|10> - |01>)/sqrt(2)`.
    pub fn bell_antisymmetric(
        omega0: f64,
        omega_coupling: f64,
        bath: SpectralDensity,
    ) -> Result<Self> {
        let amp = std::f64::consts::FRAC_1_SQRT_2;
        Self::symmetric(
            omega0,
            omega_coupling,
            bath,
            Complex64::new(amp, 0.0),
            Complex64::new(-amp, 0.0),
        )
    }

    /// Whether the two reservoirs have exactly equal parameters. The normal
    /// mode decomposition is only valid in that case.
    pub fn identical_baths(&self) -> bool {
        self.bath1 == self.bath2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sd(gamma: f64, lambda: f64) -> SpectralDensity {
        SpectralDensity::new(gamma, lambda, 100.0).unwrap()
    }

    #[test]
    fn lorentzian_peak_value() {
        // at the center, J = gamma / (2 pi)
        let s = sd(1.0, 1.0);
        assert_relative_eq!(s.spectral_weight(100.0), 1.0 / (2.0 * PI), epsilon = 1e-15);
    }

    #[test]
    fn lorentzian_half_maximum_at_half_width() {
        let s = sd(1.0, 1.0);
        let peak = s.spectral_weight(100.0);
        assert_relative_eq!(s.spectral_weight(101.0), 0.5 * peak, epsilon = 1e-15);
        assert_relative_eq!(s.spectral_weight(99.0), 0.5 * peak, epsilon = 1e-15);
        assert_relative_eq!(s.spectral_weight(101.0), 1.0 / (4.0 * PI), epsilon = 1e-15);
    }

    #[test]
    fn kernel_at_zero_delay() {
        let s = sd(1.0, 1.0);
        assert_relative_eq!(s.correlation_kernel(0.0).re, 0.5, epsilon = 1e-15);
        assert_eq!(s.correlation_kernel(0.0).im, 0.0);
    }

    #[test]
    fn kernel_at_one_memory_time() {
        // gamma = 1, lambda = 10, tau = 1/lambda: 5 e^{-1}
        let s = sd(1.0, 10.0);
        assert_relative_eq!(
            s.correlation_kernel(0.1).re,
            5.0 * (-1.0f64).exp(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn kernel_is_even_and_peaked_at_zero() {
        let s = sd(0.7, 3.0);
        for tau in [0.0, 0.3, 1.7, 12.0] {
            assert_eq!(s.correlation_kernel(tau), s.correlation_kernel(-tau));
            assert!(s.correlation_kernel(tau).norm() <= s.correlation_kernel(0.0).re + 1e-15);
        }
        assert_relative_eq!(s.correlation_kernel(0.0).re, s.kernel_at_zero());
    }

    #[test]
    fn laplace_image_values() {
        let s = sd(1.0, 1.0);
        // s = 0: gamma/2
        let v = s.kernel_laplace(Complex64::new(0.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 0.5, epsilon = 1e-15);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-15);

        // s = lambda: gamma/4
        let s4 = sd(1.0, 4.0);
        let v = s4.kernel_laplace(Complex64::new(4.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 0.25, epsilon = 1e-15);

        // decay at infinity
        let v = s.kernel_laplace(Complex64::new(1e6, 0.0)).unwrap();
        assert!(v.norm() < 5.1e-7 && v.norm() > 4.9e-7);
    }

    #[test]
    fn laplace_image_domain_error() {
        let s = sd(1.0, 2.0);
        let err = s.kernel_laplace(Complex64::new(-2.0, 1.0)).unwrap_err();
        assert!(matches!(err, CoreError::LaplaceDomain { .. }));
        let err = s.kernel_laplace(Complex64::new(-3.0, 0.0)).unwrap_err();
        assert!(matches!(err, CoreError::LaplaceDomain { .. }));
        assert!(s.kernel_laplace(Complex64::new(-1.9, 5.0)).is_ok());
    }

    #[test]
    fn integrated_kernel_matches_closed_form() {
        let s = sd(1.0, 10.0);
        assert_relative_eq!(
            s.integrated_kernel(0.1),
            0.5 * (1.0 - (-1.0f64).exp()),
            epsilon = 1e-15
        );
        assert_relative_eq!(s.integrated_kernel(1e4), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn bath_validation() {
        assert!(SpectralDensity::new(-0.1, 1.0, 100.0).is_err());
        assert!(SpectralDensity::new(1.0, 0.0, 100.0).is_err());
        assert!(SpectralDensity::new(1.0, -2.0, 100.0).is_err());
        assert!(SpectralDensity::new(1.0, 1.0, -5.0).is_err());
        // decoupled bath is allowed
        assert!(SpectralDensity::new(0.0, 1.0, 100.0).is_ok());
    }

    #[test]
    fn params_validation() {
        let bath = sd(1.0, 1.0);
        let norm = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        assert!(ModelParams::new(100.0, 0.1, bath, bath, norm, -norm).is_ok());
        // unnormalized amplitudes
        let err = ModelParams::new(100.0, 0.1, bath, bath, norm, norm * 1.01).unwrap_err();
        assert!(matches!(err, CoreError::InvalidAmplitudes { .. }));
        // negative coupling
        assert!(ModelParams::new(100.0, -0.1, bath, bath, norm, -norm).is_err());
        // non-positive qubit frequency
        assert!(ModelParams::new(0.0, 0.1, bath, bath, norm, -norm).is_err());
    }

    #[test]
    fn bell_state_is_normalized_and_antisymmetric() {
        let p = ModelParams::bell_antisymmetric(100.0, 0.001, sd(1.0, 10.0)).unwrap();
        assert_relative_eq!(p.a0.norm_sqr() + p.b0.norm_sqr(), 1.0, epsilon = 1e-15);
        assert_relative_eq!((p.a0 + p.b0).norm(), 0.0, epsilon = 1e-15);
        assert!(p.identical_baths());
    }
}
