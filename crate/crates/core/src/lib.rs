//! Simulator of two semiconductor quantum dots coupled through a spherical
//! metal nanoparticle and driven by cw or pulsed laser fields.
//!
//! The crate integrates the nonlinear density-matrix master equation of the
//! hybrid system, quantifies two-qubit entanglement (Wootters concurrence and
//! entanglement of formation) along trajectories, and runs parameter sweeps
//! over field amplitude, geometry, and detuning.
//!
//! Internal unit system: energies in eV, times in ps, lengths in nm, dipole
//! moments in e·nm, electric fields in V/m (converted at the boundary,
//! 1 e·nm × 1 V/m = 1e-9 eV). Angular frequencies are stored in 1/ps.

pub mod constants;
pub mod dielectric;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod model;
pub mod sweep;

pub use dielectric::DielectricTable;
pub use dynamics::{BasisState, DensityMatrix, Trajectory};
pub use entanglement::EntanglementReport;
pub use error::{Error, Result};
pub use model::{Couplings, DriveMode, DriveSpec, SystemParams};
pub use sweep::{AxisParam, AxisSpec, AxisScale, Metric, SweepGrid, SweepSpec};

#[cfg(test)]
mod eigen_smoke {
    use nalgebra::{Matrix4, SymmetricEigen};
    use num_complex::Complex64;

    #[test]
    fn hermitian_eigenvalues_are_real_and_sorted_by_solver() {
        let i = Complex64::i();
        let m = Matrix4::new(
            Complex64::new(2.0, 0.0), i, Complex64::ZERO, Complex64::ZERO,
            -i, Complex64::new(2.0, 0.0), Complex64::ZERO, Complex64::ZERO,
            Complex64::ZERO, Complex64::ZERO, Complex64::new(1.0, 0.0), Complex64::ZERO,
            Complex64::ZERO, Complex64::ZERO, Complex64::ZERO, Complex64::new(5.0, 0.0),
        );
        let eig = SymmetricEigen::new(m);
        let mut ev: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expect = [1.0, 1.0, 3.0, 5.0];
        for (a, b) in ev.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }
}
