//! Finite-dimensional quantum state and operator algebra: unitary propagation
//! via Hermitian eigendecomposition, short-time expansions, and projective
//! survival measurement.

mod eigen;
mod hamiltonian;
mod matrix;
mod measurement;
mod state;

pub use eigen::{gram_deviation, hermitian_eigen, HermitianEigen};
pub use hamiltonian::{
    expectation, hamiltonian_variance, pauli_x, pauli_z, propagate, taylor_final_state,
    Hamiltonian, Propagator, HERMITICITY_TOL, MAX_DIM,
};
pub use matrix::{hermitian_check, ComplexMatrix};
pub use measurement::{measure_survival, MeasurementOutcome, DEGENERATE_PROBABILITY_TOL};
pub use state::QuantumState;
