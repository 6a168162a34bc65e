//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("dielectric table format error: {0}")]
    TableFormat(String),

    #[error("duplicate photon energy {energy} eV in dielectric table")]
    DuplicateAbscissa { energy: f64 },

    #[error("photon energy {energy} eV outside tabulated range [{min}, {max}] eV")]
    OutOfRange { energy: f64, min: f64, max: f64 },

    #[error("plasmon pole: |2 eps_b + eps_m| = {denom} is below threshold")]
    PlasmonPole { denom: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("degenerate geometry: zeta = {zeta} is too small for the direct-coupling formula")]
    DegenerateGeometry { zeta: f64 },

    #[error("integrator step underflow at t = {t} ps (h = {h} ps); the problem appears stiff")]
    Stiffness { t: f64, h: f64 },

    #[error("state integrity breach at t = {t} ps: {what} = {value:e}")]
    Integrity { t: f64, what: &'static str, value: f64 },

    #[error("non-physical state: eigenvalue {eigenvalue:e} of the spin-flip product is below -1e-10")]
    NonPhysicalState { eigenvalue: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("time {t} ps outside trajectory range [{min}, {max}] ps")]
    TimeOutOfRange { t: f64, min: f64, max: f64 },

    #[error("sweep failed: {failed} of {total} cells did not integrate")]
    SweepFailed { failed: usize, total: usize },
}
