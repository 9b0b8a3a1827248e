//! Fixed-step fourth-order Runge-Kutta integration of the circuit equation
//! `q' = i`, `i' = -q/(L C)`, with segment boundaries landed on exactly.
//!
//! Fixed stepping (rather than adaptive) because the event times of the
//! switching protocol are known a priori, which keeps runs bit-comparable
//! across implementations.

use crate::classical::{apply_switch_off, apply_switch_on, LcCircuit, OscillatorState, SwitchProtocol};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Hard cap on RK4 steps for a single segment; guards against accidentally
/// tiny steps turning a call into an unbounded loop.
pub const MAX_STEPS_PER_SEGMENT: u64 = 100_000_000;

/// Advance the oscillator through one uninterrupted ON segment.
///
/// Integrates with fixed step `step`; the final partial step is sized exactly
/// so the segment lands on `duration`. The returned `time` is
/// `state.time + duration`.
pub fn integrate_segment<T: Scalar>(
    state: &OscillatorState<T>,
    circuit: &LcCircuit<T>,
    duration: T,
    step: T,
) -> Result<OscillatorState<T>> {
    integrate_segment_impl(state, circuit, duration, step, None)
}

/// A switched numeric run: the final state plus the emitted sample trace.
#[derive(Debug, Clone)]
pub struct SwitchedRun<T> {
    pub final_state: OscillatorState<T>,
    /// Initial state, every interior RK4 step, and the post-event state at
    /// each segment boundary. The OFF/ON flick at a boundary is a single
    /// composite event of zero duration; no intermediate sample is emitted
    /// for it.
    pub trace: Vec<OscillatorState<T>>,
}

/// Run the full switching protocol numerically: alternate RK4 integration
/// over `t/n` with the instantaneous OFF/ON interruption, `n` times.
pub fn switched_run_numeric<T: Scalar>(
    circuit: &LcCircuit<T>,
    protocol: &SwitchProtocol<T>,
    step: T,
) -> Result<SwitchedRun<T>> {
    let dt = protocol.dt();
    if dt > T::zero() {
        let ten = T::from_f64_lossy(10.0);
        if step > dt / ten {
            return Err(Error::InvalidParameter(format!(
                "step {step} exceeds one tenth of the segment duration {dt}"
            )));
        }
    }
    let mut state = OscillatorState::at_rest(circuit);
    let mut trace = vec![state];
    for _ in 0..protocol.n() {
        state = integrate_segment_impl(&state, circuit, dt, step, Some(&mut trace))?;
        state = apply_switch_on(&apply_switch_off(&state));
        trace.push(state);
    }
    Ok(SwitchedRun {
        final_state: state,
        trace,
    })
}

fn integrate_segment_impl<T: Scalar>(
    state: &OscillatorState<T>,
    circuit: &LcCircuit<T>,
    duration: T,
    step: T,
    mut trace: Option<&mut Vec<OscillatorState<T>>>,
) -> Result<OscillatorState<T>> {
    if !state.switch_on {
        return Err(Error::InvalidParameter(
            "cannot integrate with the switch OFF: there is no current".into(),
        ));
    }
    if !state.is_finite() {
        return Err(Error::NonFinite("oscillator state".into()));
    }
    if !(step.is_finite() && step > T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "step must be finite and positive, got {step}"
        )));
    }
    if !(duration.is_finite() && duration >= T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "duration must be finite and non-negative, got {duration}"
        )));
    }
    if duration == T::zero() {
        return Ok(*state);
    }

    let ratio = (duration / step).floor().to_f64_lossy();
    if !(ratio >= 0.0) || ratio as u64 > MAX_STEPS_PER_SEGMENT {
        return Err(Error::InvalidParameter(format!(
            "segment would need more than {MAX_STEPS_PER_SEGMENT} steps"
        )));
    }
    let mut full_steps = ratio as u64;
    // floor() can overshoot by one ulp; keep the remainder non-negative.
    let mut remainder = duration - T::from_f64_lossy(full_steps as f64) * step;
    if remainder < T::zero() {
        full_steps -= 1;
        remainder = duration - T::from_f64_lossy(full_steps as f64) * step;
    }

    let inv_lc = T::one() / (circuit.inductance() * circuit.capacitance());
    let mut q = state.charge;
    let mut i = state.current;
    for k in 0..full_steps {
        (q, i) = rk4_step(q, i, step, inv_lc);
        if let Some(trace) = trace.as_deref_mut() {
            let is_last = k + 1 == full_steps && remainder <= T::zero();
            if !is_last {
                trace.push(OscillatorState {
                    charge: q,
                    current: i,
                    time: state.time + T::from_f64_lossy((k + 1) as f64) * step,
                    switch_on: true,
                });
            }
        }
    }
    if remainder > T::zero() {
        (q, i) = rk4_step(q, i, remainder, inv_lc);
    }
    if !(q.is_finite() && i.is_finite()) {
        return Err(Error::NonFinite("integrated oscillator state".into()));
    }
    Ok(OscillatorState {
        charge: q,
        current: i,
        time: state.time + duration,
        switch_on: true,
    })
}

fn rk4_step<T: Scalar>(q: T, i: T, h: T, inv_lc: T) -> (T, T) {
    let two = T::one() + T::one();
    let six = T::from_f64_lossy(6.0);
    let half_h = h / two;

    let k1q = i;
    let k1i = -q * inv_lc;
    let k2q = i + half_h * k1i;
    let k2i = -(q + half_h * k1q) * inv_lc;
    let k3q = i + half_h * k2i;
    let k3i = -(q + half_h * k2q) * inv_lc;
    let k4q = i + h * k3i;
    let k4i = -(q + h * k3q) * inv_lc;

    (
        q + h / six * (k1q + two * k2q + two * k3q + k4q),
        i + h / six * (k1i + two * k2i + two * k3i + k4i),
    )
}
