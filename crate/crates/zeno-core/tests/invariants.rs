//! Cross-module invariants: unitarity and composition of the propagator,
//! variance non-negativity, agreement between the analytic and integrated
//! classical paths, and the structural identity binding the quantum and
//! classical Taylor forms.

use num_complex::Complex;
use proptest::prelude::*;
use std::f64::consts::PI;

use zeno_core::classical::{
    integrate_segment, lho_from_lc, switched_charge_exact, switched_charge_taylor,
    switched_run_numeric, LcCircuit, OscillatorState, SwitchProtocol,
};
use zeno_core::convergence::{scan_n, SystemTag};
use zeno_core::quantum::{
    hamiltonian_variance, propagate, ComplexMatrix, Hamiltonian, QuantumState,
};
use zeno_core::zeno::{
    characteristic_time, zeno_survival_exact, zeno_survival_taylor, ZenoSchedule,
};

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

/// Strategy: Hermitian matrix of the given dimension with entries in
/// [-scale, scale].
fn hermitian_matrix(dim: usize, scale: f64) -> impl Strategy<Value = ComplexMatrix<f64>> {
    let n_off = dim * (dim - 1) / 2;
    (
        prop::collection::vec(-scale..scale, dim),
        prop::collection::vec((-scale..scale, -scale..scale), n_off),
    )
        .prop_map(move |(diag, off)| {
            let mut m = ComplexMatrix::zeros(dim);
            for (i, &d) in diag.iter().enumerate() {
                m.set(i, i, c(d, 0.0));
            }
            let mut it = off.iter();
            for i in 0..dim {
                for j in (i + 1)..dim {
                    let &(re, im) = it.next().unwrap();
                    m.set(i, j, c(re, im));
                    m.set(j, i, c(re, -im));
                }
            }
            m
        })
}

/// Strategy: normalized state of the given dimension.
fn state(dim: usize) -> impl Strategy<Value = QuantumState<f64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim)
        .prop_filter_map("state must have nonzero norm", |amps| {
            let v: Vec<Complex<f64>> = amps.iter().map(|&(re, im)| c(re, im)).collect();
            QuantumState::normalized(v).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn propagation_preserves_the_norm(
        m in hermitian_matrix(4, 2.0),
        psi in state(4),
        dt in 0.0f64..10.0,
    ) {
        let h = Hamiltonian::new(m, 1.0).unwrap();
        let out = propagate(&psi, &h, dt).unwrap();
        prop_assert!((out.norm() - 1.0).abs() <= 1e-12, "norm drift {}", (out.norm() - 1.0).abs());
    }

    #[test]
    fn propagation_composes(
        m in hermitian_matrix(3, 1.5),
        psi in state(3),
        a in 0.0f64..3.0,
        b in 0.0f64..3.0,
    ) {
        let h = Hamiltonian::new(m, 1.0).unwrap();
        let split = propagate(&propagate(&psi, &h, a).unwrap(), &h, b).unwrap();
        let joint = propagate(&psi, &h, a + b).unwrap();
        for (x, y) in split.amplitudes().iter().zip(joint.amplitudes()) {
            prop_assert!((x - y).norm() <= 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn variance_is_nonnegative(
        m in hermitian_matrix(3, 3.0),
        psi in state(3),
    ) {
        let h = Hamiltonian::new(m, 1.0).unwrap();
        let var = hamiltonian_variance(&psi, &h).unwrap();
        prop_assert!(var >= 0.0);
    }

    #[test]
    fn taylor_forms_are_structurally_identical(
        tau in 0.3f64..5.0,
        t in 0.0f64..2.0,
        n in 1u64..2000,
    ) {
        // Same (t, n, tau) through the quantum and the classical route.
        prop_assume!(t / (n as f64 * tau) <= 1.0);
        let schedule = ZenoSchedule::new(t, n).unwrap();
        let protocol = SwitchProtocol::new(t, n).unwrap();
        let circuit = LcCircuit::with_characteristic_time(tau, 1.0).unwrap();
        let quantum = zeno_survival_taylor(tau, &schedule);
        let classical = switched_charge_taylor(&circuit, &protocol);
        match (quantum, classical) {
            (Ok(q), Ok((product, _))) => {
                prop_assert!((q - product).abs() <= 1e-15, "q {q} vs classical {product}");
            }
            (Err(_), Err(_)) => {}
            (q, cl) => prop_assert!(false, "domain disagreement: quantum {q:?}, classical {cl:?}"),
        }
    }
}

#[test]
fn analytic_and_numeric_switched_paths_agree() {
    // |numeric - analytic| <= 1e-8 |q0| over the full tested grid.
    for &omega in &[0.5f64, 1.0, 2.0] {
        let circuit = LcCircuit::new(1.0 / omega, 1.0 / omega, 1.0).unwrap();
        assert!((circuit.omega() - omega).abs() < 1e-14);
        for &t in &[0.5f64, 1.0] {
            for &n in &[1u64, 4, 16, 64] {
                let protocol = SwitchProtocol::new(t, n).unwrap();
                let step = 1e-4f64.min(protocol.dt() / 10.0);
                let numeric = switched_run_numeric(&circuit, &protocol, step)
                    .unwrap()
                    .final_state
                    .charge;
                let analytic = switched_charge_exact(&circuit, &protocol);
                assert!(
                    (numeric - analytic).abs() <= 1e-8,
                    "omega={omega} t={t} n={n}: numeric {numeric} vs analytic {analytic}"
                );
            }
        }
    }
}

#[test]
fn energy_never_increases_across_interruptions() {
    let circuit = LcCircuit::new(1.0, 1.0, 1.0).unwrap();
    let protocol = SwitchProtocol::new(1.0, 8).unwrap();
    let run = switched_run_numeric(&circuit, &protocol, 1e-3).unwrap();
    let mut prev_boundary_energy = circuit.energy(1.0, 0.0);
    for state in &run.trace {
        if state.current == 0.0 && state.time > 0.0 {
            let e = circuit.energy(state.charge, state.current);
            assert!(
                e <= prev_boundary_energy + 1e-12,
                "energy increased across an interruption"
            );
            prev_boundary_energy = e;
        }
    }
    // Per-event discarded energy equals the inductive part L i^2 / 2.
    let before = OscillatorState::<f64> {
        charge: 0.4,
        current: 0.9,
        time: 0.0,
        switch_on: true,
    };
    let after = zeno_core::classical::apply_switch_off(&before);
    let discarded =
        circuit.energy(before.charge, before.current) - circuit.energy(after.charge, after.current);
    let inductive = circuit.inductance() * before.current * before.current / 2.0;
    assert!((discarded - inductive).abs() <= 1e-12 * inductive.max(1.0));
}

#[test]
fn classical_scan_is_monotone_on_restricted_domain() {
    let circuit = LcCircuit::new(1.0, 1.0, 1.0).unwrap();
    let t = 1.0;
    let tau = circuit.tau();
    let grid: Vec<u64> = (0..=14).map(|k| 1u64 << k).collect();
    let records = scan_n(
        |n| {
            let protocol = SwitchProtocol::new(t, n).unwrap();
            Ok(switched_charge_exact(&circuit, &protocol) / circuit.initial_charge())
        },
        &grid,
        SystemTag::ClassicalLc,
    )
    .unwrap();
    let mut prev: Option<f64> = None;
    for r in &records {
        if t / r.n as f64 <= tau / 2.0 {
            if let Some(p) = prev {
                assert!(r.value >= p, "value decreased at n={}", r.n);
            }
            prev = Some(r.value);
        }
    }
    assert!(prev.is_some());
}

#[test]
fn fitted_tau_matches_operator_prediction_through_the_full_pipeline() {
    // Quantum: survival samples from actual propagation, fit against hbar/dH.
    let h = Hamiltonian::rabi(PI).unwrap();
    let reference = QuantumState::<f64>::basis(2, 0).unwrap();
    let tau_operator = characteristic_time(&reference, &h).unwrap();
    let samples: Vec<(f64, f64)> = (1..=10)
        .map(|k| {
            let t = 0.01 * k as f64;
            let evolved = propagate(&reference, &h, t).unwrap();
            (t, reference.overlap_probability(&evolved).unwrap())
        })
        .collect();
    let fit = zeno_core::convergence::estimate_tau_short_time(&samples).unwrap();
    assert!(
        (fit.tau_estimate / tau_operator - 1.0).abs() <= 0.02,
        "tau {} vs operator {}",
        fit.tau_estimate,
        tau_operator
    );

    // Classical: charge samples against sqrt(2)/omega.
    let circuit = LcCircuit::new(1.0, 1.0, 1.0).unwrap();
    let samples: Vec<(f64, f64)> = (1..=10)
        .map(|k| {
            let t = 0.01 * k as f64;
            (t, zeno_core::classical::lc_exact_charge(&circuit, t))
        })
        .collect();
    let fit = zeno_core::convergence::estimate_tau_short_time(&samples).unwrap();
    assert!((fit.tau_estimate / circuit.tau() - 1.0).abs() <= 0.02);
}

#[test]
fn lho_trajectories_match_lc_under_the_mapping() {
    let circuit = LcCircuit::<f64>::new(2.0, 0.5, 0.7).unwrap();
    let lho = lho_from_lc(&circuit, 3.0).unwrap();
    let back = lho.to_circuit().unwrap();
    let protocol = SwitchProtocol::new(1.0, 4).unwrap();
    // omega is preserved, so normalized trajectories coincide.
    let a = switched_charge_exact(&circuit, &protocol) / circuit.initial_charge();
    let b = switched_charge_exact(&back, &protocol) / back.initial_charge();
    assert!((a - b).abs() < 1e-14);

    let pa = integrate_segment(&OscillatorState::at_rest(&circuit), &circuit, 0.5, 1e-4).unwrap();
    let pb = integrate_segment(&OscillatorState::at_rest(&back), &back, 0.5, 1e-4).unwrap();
    assert!((pa.charge / circuit.initial_charge() - pb.charge / back.initial_charge()).abs() < 1e-12);
}

#[test]
fn quantum_exact_survival_reduces_to_the_classical_cos_power_squared() {
    // For the Rabi system, p^n = cos^(2n)(omega_c t / n) with omega_c = Omega/2:
    // the quantum deficit curve is the squared classical one.
    let h = Hamiltonian::rabi(PI).unwrap();
    let reference = QuantumState::<f64>::basis(2, 0).unwrap();
    let circuit = LcCircuit::new(2.0 / PI, 2.0 / PI, 1.0).unwrap(); // omega = pi/2
    for &n in &[2u64, 5, 20, 100] {
        let schedule = ZenoSchedule::new(1.0, n).unwrap();
        let protocol = SwitchProtocol::new(1.0, n).unwrap();
        let quantum = zeno_survival_exact(&reference, &h, &schedule).unwrap();
        let classical = switched_charge_exact(&circuit, &protocol);
        assert!(
            (quantum - classical * classical).abs() < 1e-12,
            "n={n}: {quantum} vs {}",
            classical * classical
        );
    }
}

#[test]
fn f32_instantiation_runs_the_full_stack() {
    let h = Hamiltonian::<f32>::rabi(std::f32::consts::PI).unwrap();
    let reference = QuantumState::<f32>::basis(2, 0).unwrap();
    let schedule = ZenoSchedule::<f32>::new(1.0, 10).unwrap();
    let survival = zeno_survival_exact(&reference, &h, &schedule).unwrap();
    assert!((survival - 0.780_546f32).abs() < 1e-4);

    let circuit = LcCircuit::<f32>::new(1.0, 1.0, 1.0).unwrap();
    let protocol = SwitchProtocol::<f32>::new(1.0, 4).unwrap();
    let q = switched_charge_exact(&circuit, &protocol);
    assert!((q - 0.881_329f32).abs() < 1e-5);
}
