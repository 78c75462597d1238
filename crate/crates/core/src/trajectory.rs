// Copyright 2026 QDL Contributors
// SPDX-License-Identifier: Apache-2.0

//! Time grids and solver outputs: amplitude and density-matrix trajectories.

use num_complex::Complex64;

use crate::density::{BasisState, DensityMatrix};
use crate::error::{CoreError, Result};

/// Allowed excess of `|a|^2 + |b|^2` above one along a trajectory, and the
/// allowed dip of the bath occupation below zero.
pub const OCCUPATION_TOL: f64 = 1e-9;

/// A strictly increasing grid of dimensionless times starting at zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    times: Vec<f64>,
}

impl TimeGrid {
    /// `n_points` equally spaced times covering `[0, t_max]`.
    pub fn uniform(t_max: f64, n_points: usize) -> Result<Self> {
        if !(t_max.is_finite() && t_max > 0.0) {
            return Err(CoreError::InvalidGrid(format!(
                "t_max must be finite and > 0, got {t_max}"
            )));
        }
        if n_points < 2 {
            return Err(CoreError::InvalidGrid(format!(
                "need at least 2 grid points, got {n_points}"
            )));
        }
        let times = (0..n_points)
            .map(|i| t_max * i as f64 / (n_points - 1) as f64)
            .collect();
        Ok(Self { times })
    }

    /// Wrap an explicit list of times; must start at exactly zero and be
    /// strictly increasing.
    pub fn from_times(times: Vec<f64>) -> Result<Self> {
        if times.len() < 2 {
            return Err(CoreError::InvalidGrid("need at least 2 grid points".into()));
        }
        if times[0] != 0.0 {
            return Err(CoreError::InvalidGrid(format!(
                "grid must start at 0, got {}",
                times[0]
            )));
        }
        for w in times.windows(2) {
            if !(w[1].is_finite() && w[1] > w[0]) {
                return Err(CoreError::InvalidGrid(format!(
                    "times must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { times })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn t_max(&self) -> f64 {
        *self.times.last().unwrap()
    }
}

/// Which solver produced a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Exact,
    Nz,
    Tcl,
    Markov,
}

impl Method {
    /// Short lowercase tag used in CSV headers and CLI arguments.
    pub fn tag(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Nz => "nz",
            Method::Tcl => "tcl",
            Method::Markov => "markov",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Method {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" => Ok(Method::Exact),
            "nz" => Ok(Method::Nz),
            "tcl" => Ok(Method::Tcl),
            "markov" => Ok(Method::Markov),
            other => Err(CoreError::InvalidParameter(format!(
                "unknown method '{other}' (expected exact, nz, tcl or markov)"
            ))),
        }
    }
}

/// One-excitation amplitudes `a(t)`, `b(t)` on a time grid, together with
/// the aggregate reservoir occupation `1 - |a|^2 - |b|^2`.
///
/// Amplitudes are interaction-picture quantities: the free phases
/// `exp(+/- i omega0 t)` have been removed. Populations are picture
/// independent; coherences are reported in the interaction picture.
#[derive(Debug, Clone)]
pub struct AmplitudeTrajectory {
    times: Vec<f64>,
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    bath_occupation: Vec<f64>,
}

impl AmplitudeTrajectory {
    /// Validate and assemble a trajectory. Checks the grid shape, that the
    /// total qubit weight never exceeds one, and that the implied bath
    /// occupation never goes negative (both within [`OCCUPATION_TOL`]).
    pub fn new(times: Vec<f64>, a: Vec<Complex64>, b: Vec<Complex64>) -> Result<Self> {
        let grid = TimeGrid::from_times(times)?;
        let times = grid.times;
        if a.len() != times.len() || b.len() != times.len() {
            return Err(CoreError::InvalidGrid(format!(
                "amplitude sequences ({}, {}) do not match grid length {}",
                a.len(),
                b.len(),
                times.len()
            )));
        }
        let mut occ = Vec::with_capacity(times.len());
        for (k, (av, bv)) in a.iter().zip(&b).enumerate() {
            let norm_sq = av.norm_sqr() + bv.norm_sqr();
            if !norm_sq.is_finite() || norm_sq > 1.0 + OCCUPATION_TOL {
                return Err(CoreError::InvalidAmplitudes { norm_sq });
            }
            let o = 1.0 - norm_sq;
            if o < -OCCUPATION_TOL {
                return Err(CoreError::InvalidDensityMatrix(format!(
                    "bath occupation {o:.3e} at t = {} below -{OCCUPATION_TOL:.0e}",
                    times[k]
                )));
            }
            occ.push(o);
        }
        Ok(Self {
            times,
            a,
            b,
            bath_occupation: occ,
        })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn a(&self) -> &[Complex64] {
        &self.a
    }

    pub fn b(&self) -> &[Complex64] {
        &self.b
    }

    /// Aggregate probability of the excitation having leaked into either
    /// reservoir, `1 - |a|^2 - |b|^2`.
    pub fn bath_occupation(&self) -> &[f64] {
        &self.bath_occupation
    }

    /// `P10(t) = |a(t)|^2`.
    pub fn population_10(&self) -> Vec<f64> {
        self.a.iter().map(|v| v.norm_sqr()).collect()
    }

    /// Convert to a density-matrix trajectory tagged [`Method::Exact`].
    pub fn to_density_trajectory(&self) -> Result<DensityTrajectory> {
        let states = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(&a, &b)| DensityMatrix::from_amplitudes(a, b))
            .collect::<Result<Vec<_>>>()?;
        DensityTrajectory::new(self.times.clone(), states, Method::Exact)
    }
}

/// Reduced density matrices on a time grid, tagged with the producing
/// method.
///
/// Every state satisfies the hermiticity and trace invariants of
/// [`DensityMatrix`]; positivity is deliberately not enforced, since losing
/// it is a legitimate (and measured) behaviour of the approximate methods.
#[derive(Debug, Clone)]
pub struct DensityTrajectory {
    times: Vec<f64>,
    states: Vec<DensityMatrix>,
    method: Method,
}

impl DensityTrajectory {
    pub fn new(times: Vec<f64>, states: Vec<DensityMatrix>, method: Method) -> Result<Self> {
        let grid = TimeGrid::from_times(times)?;
        let times = grid.times;
        if states.len() != times.len() {
            return Err(CoreError::InvalidGrid(format!(
                "state sequence ({}) does not match grid length {}",
                states.len(),
                times.len()
            )));
        }
        Ok(Self {
            times,
            states,
            method,
        })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[DensityMatrix] {
        &self.states
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Population of `which` along the trajectory.
    pub fn populations(&self, which: BasisState) -> Result<Vec<f64>> {
        self.states.iter().map(|s| s.population(which)).collect()
    }

    /// Coherence `<10|rho|01>` along the trajectory.
    pub fn coherences(&self) -> Vec<Complex64> {
        self.states.iter().map(|s| s.coherence()).collect()
    }

    pub fn max_trace_error(&self) -> f64 {
        self.states
            .iter()
            .map(DensityMatrix::trace_error)
            .fold(0.0, f64::max)
    }

    pub fn max_hermiticity_error(&self) -> f64 {
        self.states
            .iter()
            .map(DensityMatrix::hermiticity_error)
            .fold(0.0, f64::max)
    }

    pub fn max_doubly_excited_weight(&self) -> f64 {
        self.states
            .iter()
            .map(DensityMatrix::doubly_excited_weight)
            .fold(0.0, f64::max)
    }

    /// Smallest eigenvalue over all states; negative values witness
    /// positivity violation somewhere along the trajectory.
    pub fn min_eigenvalue(&self) -> f64 {
        self.states
            .iter()
            .map(DensityMatrix::min_eigenvalue)
            .fold(f64::INFINITY, f64::min)
    }
}
