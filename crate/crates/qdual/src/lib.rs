//! Cost estimation and desk-scale verification for quantum-augmented dual attacks on LWE.
//!
//! The crate has two halves:
//!
//! * an *estimator* (`gaussian`, `guessing`, `costmodels`, `dualattack`, `presets`)
//!   that prices the attack on real parameter sets (Kyber, Saber, TFHE) under several
//!   lattice-reduction cost models and optimizes the attack parameters, and
//! * a *laboratory* (`simulator`, `quantum_emu`) that checks the underlying formulas
//!   at desk scale: exact enumeration oracles, Monte-Carlo runs of the FFT
//!   distinguisher, and query-counting classical emulation of the quantum subroutines.
//!
//! All costs are base-2 logarithms unless a name says otherwise. The discrete
//! Gaussian width convention is rho_sigma(x) = exp(-x^2 / (2 sigma^2)) throughout.

pub mod costmodels;
pub mod dualattack;
pub mod error;
pub mod gaussian;
pub mod guessing;
pub mod presets;
pub mod quantum_emu;
pub mod simulator;

pub use error::{Error, Result};
