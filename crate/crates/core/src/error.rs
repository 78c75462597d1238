// Copyright 2026 QDL Contributors
// SPDX-License-Identifier: Apache-2.0

//! Error type shared by the model and the solvers.

use num_complex::Complex64;
use thiserror::Error;

/// Everything that can go wrong when building models or running solvers.
#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// A physical parameter violates its constraint (sign, range, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Initial or derived amplitudes exceed the one-excitation normalization.
    #[error("invalid amplitudes: |a|^2 + |b|^2 = {norm_sq} exceeds 1 beyond tolerance")]
    InvalidAmplitudes { norm_sq: f64 },

    /// Laplace image requested left of the kernel pole (Re s <= -lambda).
    #[error("Laplace domain error: Re(s) = {re_s} is not > -lambda = {neg_lambda}")]
    LaplaceDomain { re_s: f64, neg_lambda: f64 },

    /// Amplitude transform evaluated at (or numerically on top of) a pole.
    #[error("evaluation at a pole of the Laplace denominator, s = {s}")]
    PoleEvaluation { s: Complex64 },

    /// A quantity that must be real carries a non-negligible imaginary part.
    #[error("hermiticity violation: imaginary part {imag:.3e} on a real observable")]
    HermiticityViolation { imag: f64 },

    /// A density matrix failed its structural invariants.
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    /// A time grid is empty, unordered, or does not start at zero.
    #[error("invalid time grid: {0}")]
    InvalidGrid(String),

    /// The requested route cannot handle these parameters.
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),

    /// Ill-conditioned intermediate (residue overflow, unstable pole, ...).
    #[error("numerical conditioning failure: {0}")]
    NumericalConditioning(String),

    /// The adaptive integrator drove the step size below its floor.
    #[error("integration stalled near t = {t}: {hint}")]
    Stiffness { t: f64, hint: String },

    /// A memory integral was requested beyond the stored history.
    #[error("missing history at t = {t}: {reason}")]
    MissingHistory { t: f64, reason: String },

    /// Solver options violate their own invariants.
    #[error("invalid solver options: {0}")]
    InvalidOptions(String),

    /// The Volterra history buffer would exceed its hard cap.
    #[error("history buffer overflow: {steps} steps exceeds the {max} cap")]
    HistoryOverflow { steps: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, CoreError>;
