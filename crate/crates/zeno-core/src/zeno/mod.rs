//! Repeated-interruption survival protocol: an interval `[0, t]` is cut into
//! `n` equal pieces with a projective survival measurement at the end of each.
//!
//! Three routes to the `n`-step survival are provided and kept deliberately
//! distinct so that the approximation error between them is itself a measured
//! output:
//!
//! * exact: per-step survival `p = |<N| U(t/n) |N>|^2`, total `p^n`
//!   (licensed by the tested identity that survival collapses back to the
//!   reference state),
//! * Taylor product: `(1 - (t/(n tau))^2)^n`,
//! * first order: `1 - (t/tau)^2 / n`,
//!
//! with the characteristic time `tau = hbar / sqrt(<H^2> - <H>^2)`.

mod trajectories;

pub use trajectories::{run_trajectories, EnsembleStats};

use crate::error::{Error, Result};
use crate::quantum::{hamiltonian_variance, Hamiltonian, Propagator, QuantumState};
use crate::scalar::{pow_u64, Scalar};
use crate::Flagged;

/// Uniform measurement schedule: total interval and subdivision count.
///
/// `total_time = 0` is allowed as the degenerate no-evolution schedule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoSchedule<T> {
    total_time: T,
    n: u64,
    dt: T,
}

impl<T: Scalar> ZenoSchedule<T> {
    pub fn new(total_time: T, n: u64) -> Result<Self> {
        if !(total_time.is_finite() && total_time >= T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "total time must be finite and non-negative, got {total_time}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidParameter(
                "subdivision count must be at least 1".into(),
            ));
        }
        let dt = total_time / T::from_f64_lossy(n as f64);
        Ok(Self { total_time, n, dt })
    }

    pub fn total_time(&self) -> T {
        self.total_time
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Per-step interval `total_time / n`, computed once at construction.
    pub fn dt(&self) -> T {
        self.dt
    }
}

/// All survival routes evaluated on one schedule.
#[derive(Debug, Clone, Copy)]
pub struct ZenoResult<T> {
    pub n: u64,
    pub exact_survival: T,
    /// `None` when the Taylor product is outside its validity domain.
    pub taylor_product_survival: Option<T>,
    /// `None` when the first-order value would be negative.
    pub first_order_survival: Option<T>,
    /// `1 - exact_survival`.
    pub deficit: T,
    /// `None` for stationary states (zero energy variance).
    pub tau: Option<T>,
}

/// Short-time survival after a single interval: `1 - Var(H) dt^2 / hbar^2`.
///
/// The value is flagged out-of-domain (rather than erroring) when it drops
/// below zero, which signals `dt` outside the quadratic approximation window.
pub fn short_time_survival<T: Scalar>(
    state: &QuantumState<T>,
    h: &Hamiltonian<T>,
    dt: T,
) -> Result<Flagged<T>> {
    if !(dt.is_finite() && dt >= T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "dt must be finite and non-negative, got {dt}"
        )));
    }
    let var = hamiltonian_variance(state, h)?;
    let value = T::one() - var * dt * dt / (h.hbar() * h.hbar());
    Ok(Flagged {
        value,
        in_domain: value >= T::zero(),
    })
}

/// Characteristic interruption timescale `tau = hbar / sqrt(Var(H))`.
pub fn characteristic_time<T: Scalar>(state: &QuantumState<T>, h: &Hamiltonian<T>) -> Result<T> {
    let var = hamiltonian_variance(state, h)?;
    if var == T::zero() {
        return Err(Error::Stationary);
    }
    Ok(h.hbar() / var.sqrt())
}

/// Exact `n`-step survival probability `p^n` with
/// `p = |<state| U(t/n) |state>|^2`.
///
/// Every survival collapses back to the same reference state, so the product
/// over steps is a pure power of the single-step survival.
pub fn zeno_survival_exact<T: Scalar>(
    state: &QuantumState<T>,
    h: &Hamiltonian<T>,
    schedule: &ZenoSchedule<T>,
) -> Result<T> {
    let propagator = Propagator::new(h)?;
    zeno_survival_exact_with(&propagator, state, schedule)
}

/// Like [`zeno_survival_exact`], reusing an existing propagator across
/// schedule scans.
pub fn zeno_survival_exact_with<T: Scalar>(
    propagator: &Propagator<T>,
    state: &QuantumState<T>,
    schedule: &ZenoSchedule<T>,
) -> Result<T> {
    let evolved = propagator.apply(state, schedule.dt())?;
    let p = state.overlap_probability(&evolved)?;
    Ok(pow_u64(p, schedule.n()))
}

/// Taylor-product survival `(1 - (t/(n tau))^2)^n`.
pub fn zeno_survival_taylor<T: Scalar>(tau: T, schedule: &ZenoSchedule<T>) -> Result<T> {
    if !(tau.is_finite() && tau > T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "tau must be finite and positive, got {tau}"
        )));
    }
    let ratio = schedule.total_time() / (T::from_f64_lossy(schedule.n() as f64) * tau);
    // ratio == 1 is the closed boundary where the product is exactly 0;
    // beyond it the base turns negative and the form is meaningless.
    if ratio > T::one() {
        return Err(Error::OutOfDomain {
            context: "t/(n*tau)",
            value: ratio.to_f64_lossy(),
        });
    }
    let base = T::one() - ratio * ratio;
    Ok(pow_u64(base, schedule.n()))
}

/// First-order survival `1 - (t/tau)^2 / n`, flagged out-of-domain when
/// negative.
pub fn zeno_survival_first_order<T: Scalar>(tau: T, schedule: &ZenoSchedule<T>) -> Result<Flagged<T>> {
    if !(tau.is_finite() && tau > T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "tau must be finite and positive, got {tau}"
        )));
    }
    let x = schedule.total_time() / tau;
    let value = T::one() - x * x / T::from_f64_lossy(schedule.n() as f64);
    Ok(Flagged {
        value,
        in_domain: value >= T::zero(),
    })
}

/// Evaluate all survival routes for one `(state, h, schedule)` triple.
///
/// Stationary states (zero variance) have no Zeno timescale; all routes
/// return 1 there and `tau` is `None`.
pub fn evaluate_schedule<T: Scalar>(
    state: &QuantumState<T>,
    h: &Hamiltonian<T>,
    schedule: &ZenoSchedule<T>,
) -> Result<ZenoResult<T>> {
    let exact = zeno_survival_exact(state, h, schedule)?;
    let var = hamiltonian_variance(state, h)?;
    let (tau, taylor, first) = if var == T::zero() {
        (None, Some(T::one()), Some(T::one()))
    } else {
        let tau = h.hbar() / var.sqrt();
        let taylor = zeno_survival_taylor(tau, schedule).ok();
        let first = zeno_survival_first_order(tau, schedule)
            .ok()
            .filter(|f| f.in_domain)
            .map(|f| f.value);
        (Some(tau), taylor, first)
    };
    Ok(ZenoResult {
        n: schedule.n(),
        exact_survival: exact,
        taylor_product_survival: taylor,
        first_order_survival: first,
        deficit: T::one() - exact,
        tau,
    })
}
