use std::path::Path;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::{ComplexMatrix, Hamiltonian, QuantumState};

/// On-disk Hamiltonian spec:
///
/// ```json
/// {
///   "dim": 2,
///   "hbar": 1.0,
///   "matrix": [[[0.0, 0.0], [1.0, 0.0]], [[1.0, 0.0], [0.0, 0.0]]],
///   "initial": { "basis_index": 0 }
/// }
/// ```
///
/// Entries are `[re, im]` pairs; `initial` is either `{"basis_index": k}` or
/// `{"vector": [[re, im], ...]}`. Hermiticity is validated on load with
/// relative tolerance 1e-12.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HamiltonianFile {
    pub dim: usize,
    #[serde(default = "default_hbar")]
    pub hbar: f64,
    pub matrix: Vec<Vec<[f64; 2]>>,
    pub initial: InitialStateSpec,
}

fn default_hbar() -> f64 {
    1.0
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InitialStateSpec {
    Basis { basis_index: usize },
    Vector { vector: Vec<[f64; 2]> },
}

pub fn parse_hamiltonian(json: &str) -> Result<(Hamiltonian<f64>, QuantumState<f64>)> {
    let file: HamiltonianFile =
        serde_json::from_str(json).map_err(|e| Error::Malformed(format!("hamiltonian spec: {e}")))?;
    build(&file)
}

pub fn load_hamiltonian(path: &Path) -> Result<(Hamiltonian<f64>, QuantumState<f64>)> {
    let text = std::fs::read_to_string(path)?;
    parse_hamiltonian(&text)
}

fn build(file: &HamiltonianFile) -> Result<(Hamiltonian<f64>, QuantumState<f64>)> {
    if file.matrix.len() != file.dim {
        return Err(Error::Malformed(format!(
            "matrix has {} rows but dim is {}",
            file.matrix.len(),
            file.dim
        )));
    }
    let mut entries = Vec::with_capacity(file.dim * file.dim);
    for (r, row) in file.matrix.iter().enumerate() {
        if row.len() != file.dim {
            return Err(Error::Malformed(format!(
                "matrix row {r} has {} columns but dim is {}",
                row.len(),
                file.dim
            )));
        }
        entries.extend(row.iter().map(|&[re, im]| Complex::new(re, im)));
    }
    let matrix = ComplexMatrix::new(file.dim, entries)?;
    let hamiltonian = Hamiltonian::new(matrix, file.hbar)?;

    let state = match &file.initial {
        InitialStateSpec::Basis { basis_index } => {
            if *basis_index >= file.dim {
                return Err(Error::Malformed(format!(
                    "basis_index {basis_index} out of range for dim {}",
                    file.dim
                )));
            }
            QuantumState::basis(file.dim, *basis_index)?
        }
        InitialStateSpec::Vector { vector } => {
            if vector.len() != file.dim {
                return Err(Error::Malformed(format!(
                    "initial vector has {} entries but dim is {}",
                    vector.len(),
                    file.dim
                )));
            }
            QuantumState::new(vector.iter().map(|&[re, im]| Complex::new(re, im)).collect())?
        }
    };
    Ok((hamiltonian, state))
}
