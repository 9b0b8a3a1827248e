use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Normalized complex amplitude vector over a finite-dimensional Hilbert
/// space.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> QuantumState<T> {
    /// Build a state from amplitudes that are already normalized:
    /// `|<psi|psi> - 1| <= 1e-12` (scaled to the scalar's precision).
    pub fn new(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidParameter(
                "state must have at least one amplitude".into(),
            ));
        }
        if !amplitudes
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
        {
            return Err(Error::NonFinite("state amplitude".into()));
        }
        let state = Self { amplitudes };
        let norm_sq = state.norm_sqr();
        if (norm_sq - T::one()).abs() > T::tol(1e-12) {
            return Err(Error::NotNormalized {
                norm_sq: norm_sq.to_f64_lossy(),
            });
        }
        Ok(state)
    }

    /// Rescale arbitrary amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidParameter(
                "state must have at least one amplitude".into(),
            ));
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if !norm.is_finite() || norm == T::zero() {
            return Err(Error::NotNormalized {
                norm_sq: (norm * norm).to_f64_lossy(),
            });
        }
        Ok(Self {
            amplitudes: amplitudes.into_iter().map(|z| z.unscale(norm)).collect(),
        })
    }

    /// Basis vector `|index>` in a `dim`-dimensional space.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if dim == 0 || index >= dim {
            return Err(Error::InvalidParameter(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); dim];
        amplitudes[index] = Complex::new(T::one(), T::zero());
        Ok(Self { amplitudes })
    }

    /// Construct without the normalization check. Reserved for outputs of
    /// operations that preserve the norm by construction (unitary
    /// propagation, measurement collapse), so that callers can observe the
    /// actual norm drift.
    pub(crate) fn from_raw(amplitudes: Vec<Complex<T>>) -> Self {
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// Inner product `<self|other>` (conjugate-linear in `self`).
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if other.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let mut acc = Complex::new(T::zero(), T::zero());
        for (a, b) in self.amplitudes.iter().zip(&other.amplitudes) {
            acc = acc + a.conj() * *b;
        }
        Ok(acc)
    }

    /// `|<self|other>|^2`, clamped to at most 1 (rounding can push the exact
    /// value a few ulp past unity).
    pub fn overlap_probability(&self, other: &Self) -> Result<T> {
        let p = self.inner(other)?.norm_sqr();
        Ok(p.min(T::one()))
    }
}
