//! Eigendecomposition of Hermitian matrices by the cyclic complex Jacobi
//! method.
//!
//! Matrices in this crate are small dense (dimension <= 64), a regime where
//! Jacobi is simple and robust: each sweep applies a unitary plane rotation
//! per off-diagonal pair, so the accumulated eigenvector matrix stays unitary
//! to machine precision and the propagator built from it preserves state
//! norms without any fixup.
//!
//! For the pair (p, q) with diagonal entries `a`, `g` (real) and off-diagonal
//! `b = |b| e^{i phi}`, the rotation
//!
//! ```text
//!     U = [ cos th            -sin th e^{i phi} ]
//!         [ sin th e^{-i phi}  cos th           ]
//! ```
//!
//! zeroes the (p, q) entry of `U^H A U` when `tan 2th = 2|b| / (a - g)`; the
//! smaller-angle root is chosen for guaranteed convergence.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quantum::matrix::ComplexMatrix;
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 64;

/// Spectral decomposition `H = V diag(eigenvalues) V^H` with unitary `V`.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    /// Real eigenvalues in ascending order.
    pub eigenvalues: Vec<T>,
    /// Orthonormal eigenvectors as matrix columns, ordered like `eigenvalues`.
    pub eigenvectors: ComplexMatrix<T>,
}

pub fn hermitian_eigen<T: Scalar>(m: &ComplexMatrix<T>) -> Result<HermitianEigen<T>> {
    if !m.is_finite() {
        return Err(Error::NonFinite("matrix entry".into()));
    }
    let dim = m.dim();
    let zero = T::zero();
    let one = T::one();
    let two = one + one;

    let mut a: Vec<Complex<T>> = m.entries().to_vec();
    let mut v: Vec<Complex<T>> = ComplexMatrix::<T>::identity(dim).entries().to_vec();

    let fro = m.frobenius_norm();
    let stop = fro * T::epsilon() * T::from_f64_lossy(dim as f64);

    let mut converged = fro == zero || dim == 1;
    if !converged {
        for _ in 0..MAX_SWEEPS {
            if off_diagonal_norm(&a, dim) <= stop {
                converged = true;
                break;
            }
            for p in 0..dim {
                for q in (p + 1)..dim {
                    rotate(&mut a, &mut v, dim, p, q, two);
                }
            }
        }
        if !converged && off_diagonal_norm(&a, dim) <= stop {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::Eigen(format!(
            "Jacobi iteration did not converge within {MAX_SWEEPS} sweeps"
        )));
    }

    // Sort eigenvalues ascending, carrying eigenvector columns along.
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| {
        a[i * dim + i]
            .re
            .partial_cmp(&a[j * dim + j].re)
            .expect("eigenvalues are finite")
    });
    let eigenvalues: Vec<T> = order.iter().map(|&i| a[i * dim + i].re).collect();
    let mut columns = vec![Complex::new(zero, zero); dim * dim];
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..dim {
            columns[row * dim + new_col] = v[row * dim + old_col];
        }
    }
    let mut eigenvectors = ComplexMatrix::new(dim, columns)?;

    if gram_deviation(&eigenvectors) > T::tol(1e-12) {
        reorthonormalize(&mut eigenvectors)?;
    }

    Ok(HermitianEigen {
        eigenvalues,
        eigenvectors,
    })
}

/// `sqrt(2 sum_{i<j} |a_ij|^2)`, the classic Jacobi convergence measure.
fn off_diagonal_norm<T: Scalar>(a: &[Complex<T>], dim: usize) -> T {
    let mut sum = T::zero();
    for i in 0..dim {
        for j in (i + 1)..dim {
            sum = sum + a[i * dim + j].norm_sqr();
        }
    }
    (sum + sum).sqrt()
}

fn rotate<T: Scalar>(a: &mut [Complex<T>], v: &mut [Complex<T>], dim: usize, p: usize, q: usize, two: T) {
    let zero = T::zero();
    let one = T::one();

    let apq = a[p * dim + q];
    let babs = apq.norm();
    if babs == zero {
        return;
    }
    let phase = apq.unscale(babs); // e^{i phi}
    let alpha = a[p * dim + p].re;
    let gamma = a[q * dim + q].re;

    let d = (alpha - gamma) / (two * babs);
    let t = if d >= zero {
        one / (d + (d * d + one).sqrt())
    } else {
        -one / (-d + (d * d + one).sqrt())
    };
    let c = one / (one + t * t).sqrt();
    let s = t * c;
    let s_phase = phase.scale(s); // s e^{+i phi}
    let s_conj_phase = phase.conj().scale(s); // s e^{-i phi}

    // A <- A U (columns p and q).
    for k in 0..dim {
        let akp = a[k * dim + p];
        let akq = a[k * dim + q];
        a[k * dim + p] = akp.scale(c) + akq * s_conj_phase;
        a[k * dim + q] = akq.scale(c) - akp * s_phase;
    }
    // A <- U^H A (rows p and q).
    for k in 0..dim {
        let apk = a[p * dim + k];
        let aqk = a[q * dim + k];
        a[p * dim + k] = apk.scale(c) + aqk * s_phase;
        a[q * dim + k] = aqk.scale(c) - apk * s_conj_phase;
    }
    // V <- V U.
    for k in 0..dim {
        let vkp = v[k * dim + p];
        let vkq = v[k * dim + q];
        v[k * dim + p] = vkp.scale(c) + vkq * s_conj_phase;
        v[k * dim + q] = vkq.scale(c) - vkp * s_phase;
    }

    // The rotation annihilates (p, q) exactly; clear the rounding residue and
    // keep the diagonal real.
    a[p * dim + q] = Complex::new(zero, zero);
    a[q * dim + p] = Complex::new(zero, zero);
    a[p * dim + p] = Complex::new(a[p * dim + p].re, zero);
    a[q * dim + q] = Complex::new(a[q * dim + q].re, zero);
}

/// Largest entry-wise deviation of `V^H V` from the identity.
pub fn gram_deviation<T: Scalar>(v: &ComplexMatrix<T>) -> T {
    let dim = v.dim();
    let mut max = T::zero();
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = Complex::new(T::zero(), T::zero());
            for k in 0..dim {
                acc = acc + v.get(k, i).conj() * v.get(k, j);
            }
            let target = if i == j { T::one() } else { T::zero() };
            let d = (acc - Complex::new(target, T::zero())).norm();
            if d > max {
                max = d;
            }
        }
    }
    max
}

/// Modified Gram-Schmidt over the columns of `v`, in place.
fn reorthonormalize<T: Scalar>(v: &mut ComplexMatrix<T>) -> Result<()> {
    let dim = v.dim();
    for j in 0..dim {
        for i in 0..j {
            // projection of column j onto column i
            let mut proj = Complex::new(T::zero(), T::zero());
            for k in 0..dim {
                proj = proj + v.get(k, i).conj() * v.get(k, j);
            }
            for k in 0..dim {
                let updated = v.get(k, j) - proj * v.get(k, i);
                v.set(k, j, updated);
            }
        }
        let norm = (0..dim)
            .map(|k| v.get(k, j).norm_sqr())
            .sum::<T>()
            .sqrt();
        if norm <= T::epsilon() {
            return Err(Error::Eigen(
                "eigenvector columns are numerically degenerate".into(),
            ));
        }
        for k in 0..dim {
            let scaled = v.get(k, j).unscale(norm);
            v.set(k, j, scaled);
        }
    }
    Ok(())
}
