use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quantum::eigen::{hermitian_eigen, HermitianEigen};
use crate::quantum::matrix::ComplexMatrix;
use crate::quantum::state::QuantumState;
use crate::scalar::Scalar;

/// Default relative tolerance for the Hermiticity check (scaled by the
/// Frobenius norm of the matrix).
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Largest supported Hilbert-space dimension; everything here is small dense.
pub const MAX_DIM: usize = 64;

/// Hermitian operator in energy units together with the action scale `hbar`.
#[derive(Debug, Clone)]
pub struct Hamiltonian<T> {
    matrix: ComplexMatrix<T>,
    hbar: T,
}

impl<T: Scalar> Hamiltonian<T> {
    pub fn new(matrix: ComplexMatrix<T>, hbar: T) -> Result<Self> {
        Self::with_tolerance(matrix, hbar, T::tol(HERMITICITY_TOL))
    }

    pub fn with_tolerance(matrix: ComplexMatrix<T>, hbar: T, tol: T) -> Result<Self> {
        if matrix.dim() > MAX_DIM {
            return Err(Error::InvalidParameter(format!(
                "dimension {} exceeds the supported maximum {MAX_DIM}",
                matrix.dim()
            )));
        }
        if !(hbar.is_finite() && hbar > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "hbar must be finite and positive, got {hbar}"
            )));
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite("Hamiltonian matrix entry".into()));
        }
        let deviation = matrix.hermitian_deviation();
        let threshold = tol * matrix.frobenius_norm();
        if deviation > threshold {
            return Err(Error::NotHermitian {
                deviation: deviation.to_f64_lossy(),
                tolerance: threshold.to_f64_lossy(),
            });
        }
        Ok(Self { matrix, hbar })
    }

    /// Two-level Rabi Hamiltonian `(omega/2) sigma_x` with `hbar = 1`.
    ///
    /// The canonical unstable system: starting from `|0>` the survival
    /// probability after time `t` is `cos^2(omega t / 2)` in closed form.
    pub fn rabi(omega: T) -> Result<Self> {
        if !omega.is_finite() {
            return Err(Error::NonFinite("rabi frequency".into()));
        }
        let half = omega / (T::one() + T::one());
        let z = Complex::new(T::zero(), T::zero());
        let h = Complex::new(half, T::zero());
        let matrix = ComplexMatrix::new(2, vec![z, h, h, z])?;
        Self::new(matrix, T::one())
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn hbar(&self) -> T {
        self.hbar
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Cached unitary evolution operator `exp(-i H dt / hbar)`, built once from
/// the eigendecomposition and applied for arbitrary `dt`.
#[derive(Debug, Clone)]
pub struct Propagator<T> {
    eigen: HermitianEigen<T>,
    hbar: T,
    dim: usize,
}

impl<T: Scalar> Propagator<T> {
    pub fn new(h: &Hamiltonian<T>) -> Result<Self> {
        let eigen = hermitian_eigen(h.matrix())?;
        Ok(Self {
            eigen,
            hbar: h.hbar(),
            dim: h.dim(),
        })
    }

    /// Evolve `state` for `dt`: expand in the eigenbasis, attach the phases
    /// `exp(-i lambda dt / hbar)`, and map back. Exact for any `dt` up to
    /// floating-point rounding; the output norm is not adjusted.
    pub fn apply(&self, state: &QuantumState<T>, dt: T) -> Result<QuantumState<T>> {
        if state.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: state.dim(),
            });
        }
        if !(dt.is_finite() && dt >= T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "propagation time must be finite and non-negative, got {dt}"
            )));
        }
        let n = self.dim;
        let v = &self.eigen.eigenvectors;
        let amps = state.amplitudes();

        // y = V^H psi
        let mut y = vec![Complex::new(T::zero(), T::zero()); n];
        for k in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for r in 0..n {
                acc = acc + v.get(r, k).conj() * amps[r];
            }
            y[k] = acc;
        }
        // attach eigenphases
        for (k, yk) in y.iter_mut().enumerate() {
            let theta = self.eigen.eigenvalues[k] * dt / self.hbar;
            let (sin, cos) = theta.sin_cos();
            *yk = *yk * Complex::new(cos, -sin);
        }
        // psi' = V y
        let mut out = vec![Complex::new(T::zero(), T::zero()); n];
        for r in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for k in 0..n {
                acc = acc + v.get(r, k) * y[k];
            }
            out[r] = acc;
        }
        Ok(QuantumState::from_raw(out))
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigen.eigenvalues
    }
}

/// Evolve `state` under `h` for `dt` via the Hermitian eigendecomposition.
pub fn propagate<T: Scalar>(
    state: &QuantumState<T>,
    h: &Hamiltonian<T>,
    dt: T,
) -> Result<QuantumState<T>> {
    Propagator::new(h)?.apply(state, dt)
}

/// Second-order short-time expansion of the final state:
/// `(I - H^2 dt^2 / (2 hbar^2) - i H dt / hbar) |state>`.
///
/// Deliberately not renormalized; its norm deviates from 1 at `O(dt^4)`,
/// which is part of what the approximation-error scans measure.
pub fn taylor_final_state<T: Scalar>(
    state: &QuantumState<T>,
    h: &Hamiltonian<T>,
    dt: T,
) -> Result<Vec<Complex<T>>> {
    if !dt.is_finite() {
        return Err(Error::NonFinite("expansion time".into()));
    }
    let hpsi = h.matrix().mul_vec(state.amplitudes())?;
    let h2psi = h.matrix().mul_vec(&hpsi)?;
    let two = T::one() + T::one();
    let quad = dt * dt / (two * h.hbar() * h.hbar());
    let lin = dt / h.hbar();
    let i = Complex::new(T::zero(), T::one());
    Ok(state
        .amplitudes()
        .iter()
        .zip(hpsi.iter().zip(&h2psi))
        .map(|(psi, (hp, h2p))| *psi - h2p.scale(quad) - i * hp.scale(lin))
        .collect())
}

/// Real expectation value `<state| m |state>` of a Hermitian observable.
pub fn expectation<T: Scalar>(state: &QuantumState<T>, m: &ComplexMatrix<T>) -> Result<T> {
    let mpsi = m.mul_vec(state.amplitudes())?;
    let mut acc = Complex::new(T::zero(), T::zero());
    for (a, b) in state.amplitudes().iter().zip(&mpsi) {
        acc = acc + a.conj() * *b;
    }
    let scale = T::one().max(m.frobenius_norm());
    if acc.im.abs() > T::tol(1e-12) * scale {
        return Err(Error::Numerical(format!(
            "expectation value has imaginary part {:.3e}; observable is not Hermitian",
            acc.im.to_f64_lossy()
        )));
    }
    Ok(acc.re)
}

/// Energy variance `<H^2> - <H>^2` in the given state.
///
/// `<H^2>` is computed as `|H psi|^2`, which keeps the result non-negative up
/// to rounding; residues within tolerance below zero are clamped to 0.
pub fn hamiltonian_variance<T: Scalar>(state: &QuantumState<T>, h: &Hamiltonian<T>) -> Result<T> {
    let hpsi = h.matrix().mul_vec(state.amplitudes())?;
    let h2: T = hpsi.iter().map(|z| z.norm_sqr()).sum();
    let mean = expectation(state, h.matrix())?;
    let var = h2 - mean * mean;
    if var < T::zero() {
        let threshold = T::tol(1e-12) * T::one().max(h2);
        if var < -threshold {
            return Err(Error::Numerical(format!(
                "variance {:.3e} is negative beyond tolerance",
                var.to_f64_lossy()
            )));
        }
        return Ok(T::zero());
    }
    Ok(var)
}

/// Pauli X matrix.
pub fn pauli_x<T: Scalar>() -> ComplexMatrix<T> {
    let z = Complex::new(T::zero(), T::zero());
    let o = Complex::new(T::one(), T::zero());
    ComplexMatrix::new(2, vec![z, o, o, z]).expect("2x2")
}

/// Pauli Z matrix.
pub fn pauli_z<T: Scalar>() -> ComplexMatrix<T> {
    let z = Complex::new(T::zero(), T::zero());
    let o = Complex::new(T::one(), T::zero());
    ComplexMatrix::new(2, vec![o, z, z, -o]).expect("2x2")
}
