//! Ideal (lossless) LC oscillating circuit with an instantaneous ON/OFF
//! switch, and its mechanical harmonic-oscillator analog.
//!
//! The circuit obeys `-L q'' = q / C`, so an uninterrupted run from rest is
//! `q(t) = q0 cos(omega t)` with `omega = 1/sqrt(L C)`. Flicking the switch
//! OFF freezes the charge and drops the current to zero (the inductive energy
//! `L i^2 / 2` is discarded by the interruption); flicking it back ON restarts
//! the dynamics from rest. Interrupting `n` times over `[0, t]` therefore
//! multiplies the charge by `cos(omega t / n)` per segment.
//!
//! The characteristic time is `tau = sqrt(2)/omega`, fixed by matching the
//! short-time form `q0 (1 - omega^2 t^2 / 2) = q0 (1 - (t/tau)^2)`.

mod rk4;

pub use rk4::{integrate_segment, switched_run_numeric, SwitchedRun, MAX_STEPS_PER_SEGMENT};

use crate::error::{Error, Result};
use crate::scalar::{pow_u64, Scalar};
use crate::Flagged;

/// Lossless inductor-capacitor loop with an initial charge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LcCircuit<T> {
    inductance: T,
    capacitance: T,
    initial_charge: T,
}

impl<T: Scalar> LcCircuit<T> {
    pub fn new(inductance: T, capacitance: T, initial_charge: T) -> Result<Self> {
        if !(inductance.is_finite() && inductance > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "inductance must be finite and positive, got {inductance}"
            )));
        }
        if !(capacitance.is_finite() && capacitance > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "capacitance must be finite and positive, got {capacitance}"
            )));
        }
        if !initial_charge.is_finite() {
            return Err(Error::NonFinite("initial charge".into()));
        }
        Ok(Self {
            inductance,
            capacitance,
            initial_charge,
        })
    }

    /// Mechanical flavor: mass `m`, stiffness `k`, initial displacement `x0`
    /// map onto `L = m`, `C = 1/k`, `q0 = x0`.
    pub fn from_mechanical(mass: T, stiffness: T, initial_displacement: T) -> Result<Self> {
        if !(stiffness.is_finite() && stiffness > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "stiffness must be finite and positive, got {stiffness}"
            )));
        }
        Self::new(mass, T::one() / stiffness, initial_displacement)
    }

    /// Circuit with a prescribed characteristic time `tau` (unit charge scale
    /// optional): `omega = sqrt(2)/tau`, realized as `L = C = 1/omega`.
    pub fn with_characteristic_time(tau: T, initial_charge: T) -> Result<Self> {
        if !(tau.is_finite() && tau > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "tau must be finite and positive, got {tau}"
            )));
        }
        let omega = (T::one() + T::one()).sqrt() / tau;
        Self::new(T::one() / omega, T::one() / omega, initial_charge)
    }

    pub fn inductance(&self) -> T {
        self.inductance
    }

    pub fn capacitance(&self) -> T {
        self.capacitance
    }

    pub fn initial_charge(&self) -> T {
        self.initial_charge
    }

    /// Angular frequency `(L C)^{-1/2}`.
    pub fn omega(&self) -> T {
        T::one() / (self.inductance * self.capacitance).sqrt()
    }

    /// Characteristic interruption timescale `sqrt(2)/omega`.
    pub fn tau(&self) -> T {
        (T::one() + T::one()).sqrt() / self.omega()
    }

    /// Total energy `q^2/(2C) + L i^2/2` of a phase-space point.
    pub fn energy(&self, charge: T, current: T) -> T {
        let two = T::one() + T::one();
        charge * charge / (two * self.capacitance) + self.inductance * current * current / two
    }
}

/// Instantaneous oscillator state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorState<T> {
    pub charge: T,
    /// `dq/dt`.
    pub current: T,
    pub time: T,
    pub switch_on: bool,
}

impl<T: Scalar> OscillatorState<T> {
    /// At-rest state with the circuit's initial charge, switch ON.
    pub fn at_rest(circuit: &LcCircuit<T>) -> Self {
        Self {
            charge: circuit.initial_charge(),
            current: T::zero(),
            time: T::zero(),
            switch_on: true,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.charge.is_finite() && self.current.is_finite() && self.time.is_finite()
    }
}

/// Kind of interruption performed at segment boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interruption {
    /// Zero the current, freeze the charge, restart from rest.
    FreezeRestart,
}

/// Switching schedule: `n` equal ON segments over `[0, total_time]`, with an
/// instantaneous OFF/ON flick at the end of each.
///
/// `total_time = 0` is allowed as the degenerate no-evolution protocol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwitchProtocol<T> {
    total_time: T,
    n: u64,
    interruption: Interruption,
}

impl<T: Scalar> SwitchProtocol<T> {
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
        Ok(Self {
            total_time,
            n,
            interruption: Interruption::FreezeRestart,
        })
    }

    pub fn total_time(&self) -> T {
        self.total_time
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn interruption(&self) -> Interruption {
        self.interruption
    }

    /// Per-segment duration `total_time / n`.
    pub fn dt(&self) -> T {
        self.total_time / T::from_f64_lossy(self.n as f64)
    }
}

/// Uninterrupted charge from rest: `q0 cos(omega t)`.
pub fn lc_exact_charge<T: Scalar>(circuit: &LcCircuit<T>, t: T) -> T {
    circuit.initial_charge() * (circuit.omega() * t).cos()
}

/// Short-time charge `q0 (1 - (t/tau)^2)`, flagged once `omega t` exceeds 0.5.
pub fn lc_short_time_charge<T: Scalar>(circuit: &LcCircuit<T>, t: T) -> Flagged<T> {
    let ratio = t / circuit.tau();
    let value = circuit.initial_charge() * (T::one() - ratio * ratio);
    let half = T::from_f64_lossy(0.5);
    Flagged {
        value,
        in_domain: (circuit.omega() * t).abs() <= half,
    }
}

/// Charge after `n` switched segments: `q0 cos^n(omega t / n)`.
///
/// Each ON segment starts from rest (the OFF flick zeroed the current), so
/// the charge multiplies by `cos(omega t/n)` per segment.
pub fn switched_charge_exact<T: Scalar>(circuit: &LcCircuit<T>, protocol: &SwitchProtocol<T>) -> T {
    let per_step = (circuit.omega() * protocol.dt()).cos();
    circuit.initial_charge() * pow_u64(per_step, protocol.n())
}

/// Taylor forms of the switched charge: the product form
/// `q0 (1 - (t/(n tau))^2)^n` and the first-order form
/// `q0 (1 - (t/tau)^2 / n)`, in that order.
pub fn switched_charge_taylor<T: Scalar>(
    circuit: &LcCircuit<T>,
    protocol: &SwitchProtocol<T>,
) -> Result<(T, T)> {
    let tau = circuit.tau();
    let ratio = protocol.total_time() / (T::from_f64_lossy(protocol.n() as f64) * tau);
    // closed boundary as in the quantum counterpart: ratio == 1 gives 0
    if ratio > T::one() {
        return Err(Error::OutOfDomain {
            context: "t/(n*tau)",
            value: ratio.to_f64_lossy(),
        });
    }
    let base = T::one() - ratio * ratio;
    let product = circuit.initial_charge() * pow_u64(base, protocol.n());
    let x = protocol.total_time() / tau;
    let first_order = circuit.initial_charge()
        * (T::one() - x * x / T::from_f64_lossy(protocol.n() as f64));
    Ok((product, first_order))
}

/// Instantaneous switch-off: the current drops to zero, the charge is frozen
/// on the capacitor (bit-identical), and the inductive energy `L i^2/2` is
/// discarded by the interruption.
pub fn apply_switch_off<T: Scalar>(state: &OscillatorState<T>) -> OscillatorState<T> {
    OscillatorState {
        charge: state.charge,
        current: T::zero(),
        time: state.time,
        switch_on: false,
    }
}

/// Close the switch again; charge and (zero) current carry over.
pub fn apply_switch_on<T: Scalar>(state: &OscillatorState<T>) -> OscillatorState<T> {
    OscillatorState {
        switch_on: true,
        ..*state
    }
}

/// Mechanical harmonic-oscillator parameters equivalent to an LC circuit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LhoParameters<T> {
    pub mass: T,
    pub stiffness: T,
    pub initial_displacement: T,
}

impl<T: Scalar> LhoParameters<T> {
    /// Map back to circuit form; all switched-run operations apply verbatim
    /// with velocity-zeroing as the interruption.
    pub fn to_circuit(&self) -> Result<LcCircuit<T>> {
        LcCircuit::from_mechanical(self.mass, self.stiffness, self.initial_displacement)
    }
}

/// Translate a circuit into the mechanical dictionary `q <-> x`, `L <-> m`,
/// `1/C <-> k`, current <-> velocity: `k = m omega^2` for the given mass.
pub fn lho_from_lc<T: Scalar>(circuit: &LcCircuit<T>, mass: T) -> Result<LhoParameters<T>> {
    if !(mass.is_finite() && mass > T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "mass must be finite and positive, got {mass}"
        )));
    }
    let omega = circuit.omega();
    Ok(LhoParameters {
        mass,
        stiffness: mass * omega * omega,
        initial_displacement: circuit.initial_charge(),
    })
}
