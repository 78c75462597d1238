// Copyright 2026 QDL Contributors
// SPDX-License-Identifier: Apache-2.0

//! Fixed 4x4 operators of the two-qubit system, precomputed per solve.

use nalgebra::Matrix4;
use num_complex::Complex64;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Lowering/raising operators of both qubits and the exchange Hamiltonian,
/// in the product basis `{|11>, |10>, |01>, |00>}`.
pub(crate) struct TwoQubitOps {
    /// Exchange Hamiltonian `H = omega (|10><01| + |01><10|)`.
    pub h_coupling: Matrix4<Complex64>,
    /// `sigma_minus` of qubit 1 and 2.
    pub sm: [Matrix4<Complex64>; 2],
    /// `sigma_plus` of qubit 1 and 2.
    pub sp: [Matrix4<Complex64>; 2],
    /// Products `sigma_plus * sigma_minus` (excited-state projectors).
    pub sp_sm: [Matrix4<Complex64>; 2],
}

impl TwoQubitOps {
    pub fn new(omega_coupling: f64) -> Self {
        // qubit 1 lowering: |11> -> |01>, |10> -> |00>
        let mut sm1 = Matrix4::zeros();
        sm1[(2, 0)] = ONE;
        sm1[(3, 1)] = ONE;
        // qubit 2 lowering: |11> -> |10>, |01> -> |00>
        let mut sm2 = Matrix4::zeros();
        sm2[(1, 0)] = ONE;
        sm2[(3, 2)] = ONE;

        let sp1 = sm1.adjoint();
        let sp2 = sm2.adjoint();

        let mut h = Matrix4::zeros();
        h[(1, 2)] = Complex64::new(omega_coupling, 0.0);
        h[(2, 1)] = Complex64::new(omega_coupling, 0.0);

        Self {
            h_coupling: h,
            sp_sm: [sp1 * sm1, sp2 * sm2],
            sm: [sm1, sm2],
            sp: [sp1, sp2],
        }
    }

    /// `-i [H, x]`.
    pub fn coherent_term(&self, x: &Matrix4<Complex64>) -> Matrix4<Complex64> {
        commutator(&self.h_coupling, x) * Complex64::new(0.0, -1.0)
    }

    /// `[H, [H, x]]`.
    pub fn double_commutator(&self, x: &Matrix4<Complex64>) -> Matrix4<Complex64> {
        commutator(&self.h_coupling, &commutator(&self.h_coupling, x))
    }

    /// Dissipation channel of qubit `j` (0 or 1) applied to `x` with kernel
    /// weight `g`:
    ///
    /// ```text
    /// g [sm x, sp] + conj(g) [sm, x sp]
    ///   = g (sm x sp - sp sm x) + conj(g) (sm x sp - x sp sm)
    /// ```
    ///
    /// For real `g` this is `g (2 sm x sp - {sp sm, x})`, the familiar
    /// zero-temperature decay structure.
    pub fn dissipation_channel(
        &self,
        j: usize,
        g: Complex64,
        x: &Matrix4<Complex64>,
    ) -> Matrix4<Complex64> {
        let sm_x_sp = self.sm[j] * x * self.sp[j];
        (sm_x_sp - self.sp_sm[j] * x) * g + (sm_x_sp - x * self.sp_sm[j]) * g.conj()
    }
}

pub(crate) fn commutator(
    a: &Matrix4<Complex64>,
    b: &Matrix4<Complex64>,
) -> Matrix4<Complex64> {
    a * b - b * a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::DensityMatrix;

    #[test]
    fn projectors_are_diagonal() {
        let ops = TwoQubitOps::new(0.3);
        // qubit 1 excited on |11>, |10>
        for (k, expect) in [(0, 1.0), (1, 1.0), (2, 0.0), (3, 0.0)] {
            assert_eq!(ops.sp_sm[0][(k, k)].re, expect);
        }
        // qubit 2 excited on |11>, |01>
        for (k, expect) in [(0, 1.0), (1, 0.0), (2, 1.0), (3, 0.0)] {
            assert_eq!(ops.sp_sm[1][(k, k)].re, expect);
        }
    }

    #[test]
    fn coupling_exchanges_single_excitations() {
        let ops = TwoQubitOps::new(2.0);
        let mut ket10 = nalgebra::Vector4::<Complex64>::zeros();
        ket10[1] = ONE;
        let out = ops.h_coupling * ket10;
        assert_eq!(out[2].re, 2.0);
        assert_eq!(out[0].norm() + out[1].norm() + out[3].norm(), 0.0);
    }

    #[test]
    fn dissipator_is_traceless_and_hermiticity_preserving() {
        let ops = TwoQubitOps::new(0.7);
        let rho = DensityMatrix::from_amplitudes(
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.4),
        )
        .unwrap();
        for j in 0..2 {
            let d = ops.dissipation_channel(j, Complex64::new(0.25, 0.0), rho.matrix());
            assert!(d.trace().norm() < 1e-15);
            let herm = (d - d.adjoint()).norm();
            assert!(herm < 1e-15);
        }
        // commutator terms are traceless too
        assert!(ops.coherent_term(rho.matrix()).trace().norm() < 1e-15);
        assert!(ops.double_commutator(rho.matrix()).trace().norm() < 1e-15);
    }
}
