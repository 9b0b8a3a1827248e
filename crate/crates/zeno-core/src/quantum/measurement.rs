use num_complex::Complex;
use rand::Rng;

use crate::error::Result;
use crate::quantum::state::QuantumState;
use crate::scalar::Scalar;

/// Probabilities within this distance of 0 or 1 are resolved
/// deterministically, without consuming randomness, so trajectory streams
/// stay reproducible across samplers.
pub const DEGENERATE_PROBABILITY_TOL: f64 = 1e-15;

/// Result of one projective survival measurement.
#[derive(Debug, Clone)]
pub struct MeasurementOutcome<T> {
    pub survived: bool,
    /// Collapsed state: the reference on survival, the normalized projection
    /// onto its orthogonal complement on decay.
    pub post_state: QuantumState<T>,
    /// `|<reference|state>|^2`.
    pub probability: T,
}

/// Projective measurement against `reference`.
///
/// Survival is drawn Bernoulli with probability `|<reference|state>|^2` from
/// the provided source; the uniform variate is always drawn in `f64` so the
/// decision sequence is identical across scalar types.
pub fn measure_survival<T: Scalar, R: Rng + ?Sized>(
    state: &QuantumState<T>,
    reference: &QuantumState<T>,
    rng: &mut R,
) -> Result<MeasurementOutcome<T>> {
    let overlap = reference.inner(state)?;
    let probability = overlap.norm_sqr().min(T::one());

    let tol = T::tol(DEGENERATE_PROBABILITY_TOL);
    let survived = if probability >= T::one() - tol {
        true
    } else if probability <= tol {
        false
    } else {
        let u: f64 = rng.random();
        u < probability.to_f64_lossy()
    };

    let post_state = if survived {
        reference.clone()
    } else {
        let projected: Vec<Complex<T>> = state
            .amplitudes()
            .iter()
            .zip(reference.amplitudes())
            .map(|(s, r)| *s - overlap * *r)
            .collect();
        QuantumState::normalized(projected)?
    };

    Ok(MeasurementOutcome {
        survived,
        post_state,
        probability,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::hamiltonian::{propagate, Hamiltonian};
    use approx::assert_relative_eq;
    use rand::rngs::StdRng;
    use rand::{RngCore, SeedableRng};
    use std::f64::consts::PI;

    /// Random source that fails the test if it is ever consumed; used to
    /// verify that degenerate probabilities do not draw.
    struct NoDrawRng;

    impl RngCore for NoDrawRng {
        fn next_u32(&mut self) -> u32 {
            panic!("degenerate measurement must not consume randomness")
        }
        fn next_u64(&mut self) -> u64 {
            panic!("degenerate measurement must not consume randomness")
        }
        fn fill_bytes(&mut self, _dest: &mut [u8]) {
            panic!("degenerate measurement must not consume randomness")
        }
    }

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn perfect_overlap_survives_without_drawing() {
        let s = QuantumState::<f64>::basis(2, 0).unwrap();
        let out = measure_survival(&s, &s, &mut NoDrawRng).unwrap();
        assert!(out.survived);
        assert_eq!(out.probability, 1.0);
        assert_eq!(out.post_state, s);
    }

    #[test]
    fn orthogonal_state_decays_without_drawing() {
        let s = QuantumState::<f64>::basis(2, 1).unwrap();
        let r = QuantumState::<f64>::basis(2, 0).unwrap();
        let out = measure_survival(&s, &r, &mut NoDrawRng).unwrap();
        assert!(!out.survived);
        assert_eq!(out.probability, 0.0);
        // Projection of an already-orthogonal state is the state itself.
        assert_eq!(out.post_state, s);
    }

    #[test]
    fn propagated_state_survival_probability_matches_closed_form() {
        let h = Hamiltonian::rabi(PI).unwrap();
        let r = QuantumState::<f64>::basis(2, 0).unwrap();
        let evolved = propagate(&r, &h, 0.1).unwrap();
        let mut rng = StdRng::seed_from_u64(1);
        let out = measure_survival(&evolved, &r, &mut rng).unwrap();
        assert_relative_eq!(out.probability, (PI * 0.05).cos().powi(2), epsilon = 1e-14);
        assert_relative_eq!(out.probability, 0.9755282581475768, epsilon = 1e-12);
    }

    #[test]
    fn decayed_branch_is_orthogonal_to_reference_and_normalized() {
        let r = QuantumState::<f64>::basis(2, 0).unwrap();
        let s = QuantumState::normalized(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        // Force the decayed branch by drawing until it happens.
        let mut rng = StdRng::seed_from_u64(3);
        let out = loop {
            let out = measure_survival(&s, &r, &mut rng).unwrap();
            if !out.survived {
                break out;
            }
        };
        assert!((out.post_state.norm() - 1.0).abs() < 1e-14);
        assert!(out.post_state.inner(&r).unwrap().norm() < 1e-14);
    }

    #[test]
    fn empirical_frequency_tracks_probability() {
        // 1e5 seeded draws within 4 sqrt(p(1-p)/N) of the analytic value.
        let r = QuantumState::<f64>::basis(2, 0).unwrap();
        let h = Hamiltonian::rabi(PI).unwrap();
        let s = propagate(&r, &h, 0.1).unwrap();
        let p = 0.9755282581475768;
        let n = 100_000u32;
        let mut rng = StdRng::seed_from_u64(42);
        let mut hits = 0u32;
        for _ in 0..n {
            if measure_survival(&s, &r, &mut rng).unwrap().survived {
                hits += 1;
            }
        }
        let freq = f64::from(hits) / f64::from(n);
        let sigma = (p * (1.0 - p) / f64::from(n)).sqrt();
        assert!(
            (freq - p).abs() <= 4.0 * sigma,
            "freq {freq} vs p {p} (4 sigma = {})",
            4.0 * sigma
        );
    }
}
