//! Monte Carlo trajectory ensembles for the repeated-measurement protocol.
//!
//! Trajectories are embarrassingly parallel. Each one draws from its own
//! deterministically derived random stream `(seed, trajectory index)`, so the
//! ensemble result is bit-identical regardless of worker count or execution
//! order; the reduction is an integer sum, which commutes.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quantum::{measure_survival, Hamiltonian, Propagator, QuantumState};
use crate::scalar::Scalar;
use crate::zeno::ZenoSchedule;

/// Ensemble statistics from independent measured trajectories.
#[derive(Debug, Clone, Copy)]
pub struct EnsembleStats<T> {
    pub trials: u64,
    /// Trajectories that survived all `n` measurements.
    pub survived: u64,
    pub frequency: T,
    /// Binomial standard error `sqrt(f (1-f) / trials)`.
    pub std_error: T,
    /// Four standard errors; the reporting half-width used throughout.
    pub halfwidth: T,
}

/// Simulate `trials` independent trajectories, each alternating unitary
/// propagation over `t/n` with a projective survival measurement. A decayed
/// trajectory terminates (the decayed branch is absorbing).
pub fn run_trajectories<T: Scalar>(
    state: &QuantumState<T>,
    h: &Hamiltonian<T>,
    schedule: &ZenoSchedule<T>,
    trials: u64,
    seed: u64,
) -> Result<EnsembleStats<T>> {
    if trials == 0 {
        return Err(Error::InvalidParameter(
            "trial count must be at least 1".into(),
        ));
    }
    let propagator = Propagator::new(h)?;

    let survived: u64 = (0..trials)
        .into_par_iter()
        .map(|index| -> Result<u64> {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            rng.set_stream(index);
            Ok(u64::from(run_single(
                &propagator,
                state,
                schedule,
                &mut rng,
            )?))
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;

    let trials_t = T::from_f64_lossy(trials as f64);
    let frequency = T::from_f64_lossy(survived as f64) / trials_t;
    let std_error = (frequency * (T::one() - frequency) / trials_t).sqrt();
    let four = T::from_f64_lossy(4.0);
    Ok(EnsembleStats {
        trials,
        survived,
        frequency,
        std_error,
        halfwidth: four * std_error,
    })
}

fn run_single<T: Scalar>(
    propagator: &Propagator<T>,
    reference: &QuantumState<T>,
    schedule: &ZenoSchedule<T>,
    rng: &mut ChaCha12Rng,
) -> Result<bool> {
    let mut current = reference.clone();
    for _ in 0..schedule.n() {
        let evolved = propagator.apply(&current, schedule.dt())?;
        let outcome = measure_survival(&evolved, reference, rng)?;
        if !outcome.survived {
            return Ok(false);
        }
        current = outcome.post_state;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::pauli_z;
    use crate::zeno::zeno_survival_exact;
    use std::f64::consts::PI;

    fn basis0() -> QuantumState<f64> {
        QuantumState::basis(2, 0).unwrap()
    }

    #[test]
    fn certain_decay_is_never_sampled_as_survival() {
        // n = 1 at half Rabi period: survival probability cos^2(pi/2) = 0.
        let h = Hamiltonian::rabi(PI).unwrap();
        let sched = ZenoSchedule::new(1.0, 1).unwrap();
        let stats = run_trajectories(&basis0(), &h, &sched, 2000, 9).unwrap();
        assert_eq!(stats.survived, 0);
        assert_eq!(stats.frequency, 0.0);
    }

    #[test]
    fn stationary_state_always_survives() {
        let h = Hamiltonian::new(pauli_z(), 1.0).unwrap();
        let sched = ZenoSchedule::new(1.0, 10).unwrap();
        let stats = run_trajectories(&basis0(), &h, &sched, 500, 1).unwrap();
        assert_eq!(stats.survived, 500);
        assert_eq!(stats.frequency, 1.0);
    }

    #[test]
    fn frequency_agrees_with_exact_survival_within_four_sigma() {
        let h = Hamiltonian::rabi(PI).unwrap();
        let sched = ZenoSchedule::new(1.0, 10).unwrap();
        let trials = 100_000u64;
        let stats = run_trajectories(&basis0(), &h, &sched, trials, 42).unwrap();
        let p = zeno_survival_exact(&basis0(), &h, &sched).unwrap();
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        assert!(
            (stats.frequency - p).abs() <= 4.0 * sigma,
            "frequency {} vs exact {p} (4 sigma = {})",
            stats.frequency,
            4.0 * sigma
        );
    }

    #[test]
    fn fixed_seed_reproduces_bit_identically() {
        let h = Hamiltonian::rabi(PI).unwrap();
        let sched = ZenoSchedule::new(1.0, 10).unwrap();
        let a = run_trajectories(&basis0(), &h, &sched, 20_000, 7).unwrap();
        let b = run_trajectories(&basis0(), &h, &sched, 20_000, 7).unwrap();
        assert_eq!(a.survived, b.survived);
        assert_eq!(a.frequency.to_bits(), b.frequency.to_bits());
    }

    #[test]
    fn result_is_independent_of_worker_count() {
        let h = Hamiltonian::rabi(PI).unwrap();
        let sched = ZenoSchedule::new(1.0, 5).unwrap();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| run_trajectories(&basis0(), &h, &sched, 10_000, 11).unwrap());
        let many = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| run_trajectories(&basis0(), &h, &sched, 10_000, 11).unwrap());
        assert_eq!(single.survived, many.survived);
    }

    #[test]
    fn different_seeds_give_different_ensembles() {
        let h = Hamiltonian::rabi(PI).unwrap();
        let sched = ZenoSchedule::new(1.0, 10).unwrap();
        let a = run_trajectories(&basis0(), &h, &sched, 20_000, 1).unwrap();
        let b = run_trajectories(&basis0(), &h, &sched, 20_000, 2).unwrap();
        assert_ne!(a.survived, b.survived);
    }

    #[test]
    fn zero_trials_rejected() {
        let h = Hamiltonian::rabi(PI).unwrap();
        let sched = ZenoSchedule::new(1.0, 10).unwrap();
        assert!(run_trajectories(&basis0(), &h, &sched, 0, 1).is_err());
    }
}
