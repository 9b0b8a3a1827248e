//! Simulation laboratory for freezing dynamics by repeated interruption.
//!
//! Two physical realizations of the same limit are implemented and
//! cross-validated:
//!
//! * a finite-dimensional quantum system under unitary evolution interrupted
//!   by projective survival measurements ([`quantum`], [`zeno`]), and
//! * an ideal switched LC oscillating circuit (equivalently a mechanical
//!   harmonic oscillator) whose current is zeroed by instantaneous OFF/ON
//!   flicks ([`classical`]).
//!
//! Both share the short-time form `1 - (t/tau)^2` and the `n`-step product
//! `(1 - (t/(n tau))^2)^n -> 1`; the [`convergence`] module fits the `1/n`
//! deficit law, recovers `tau` from short-time samples, and checks the
//! structural identity between the two readings. [`io`] pins the file
//! formats.
//!
//! All numerics are generic over the scalar type via [`Scalar`] (`f32` or
//! `f64`); the `*64` aliases below name the common `f64` instantiation.

pub mod classical;
pub mod convergence;
pub mod error;
pub mod io;
pub mod quantum;
pub mod scalar;
pub mod zeno;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Value of a short-time approximation together with its validity flag.
///
/// Out-of-window evaluations are not errors: the value is still the formula's
/// output, the flag records that the approximation no longer brackets the
/// exact dynamics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flagged<T> {
    pub value: T,
    pub in_domain: bool,
}

pub type ComplexMatrix64 = quantum::ComplexMatrix<f64>;
pub type Hamiltonian64 = quantum::Hamiltonian<f64>;
pub type QuantumState64 = quantum::QuantumState<f64>;
pub type ZenoSchedule64 = zeno::ZenoSchedule<f64>;
pub type ZenoResult64 = zeno::ZenoResult<f64>;
pub type LcCircuit64 = classical::LcCircuit<f64>;
pub type OscillatorState64 = classical::OscillatorState<f64>;
pub type SwitchProtocol64 = classical::SwitchProtocol<f64>;
pub type ConvergenceRecord64 = convergence::ConvergenceRecord<f64>;

pub type ComplexMatrix32 = quantum::ComplexMatrix<f32>;
pub type Hamiltonian32 = quantum::Hamiltonian<f32>;
pub type QuantumState32 = quantum::QuantumState<f32>;
pub type LcCircuit32 = classical::LcCircuit<f32>;
