//! Convergence verification harness: scans over the interruption count `n`,
//! fits the `1/n` deficit law on log-log axes, estimates the characteristic
//! time from short-time samples, and checks the quantum/classical structural
//! correspondence.
//!
//! The short-time fit is a full quadratic `a + b t + c t^2` rather than a
//! two-parameter form, precisely so that the absence of a linear term is a
//! measured outcome, not an assumption. A system qualifies as "freezable"
//! when `c < 0` (quadratic decay), `a ~= 1`, and the linear term is
//! negligible; exponential decay fails on its linear term.

use serde::{Deserialize, Serialize};

use crate::classical::{switched_charge_taylor, LcCircuit, SwitchProtocol};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zeno::{zeno_survival_taylor, ZenoSchedule};

/// Default gate on the relative weight of the linear term at the fit-window
/// edge, `|b| t_max / (|c| t_max^2)`. Dimensionless and scale-equivariant;
/// clean quadratic systems sit near 1e-3, exponential decay near 20.
pub const Z1_LINEAR_RATIO_GATE: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemTag {
    Quantum,
    ClassicalLc,
    ClassicalLho,
}

impl SystemTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            SystemTag::Quantum => "quantum",
            SystemTag::ClassicalLc => "classical_lc",
            SystemTag::ClassicalLho => "classical_lho",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "quantum" => Ok(SystemTag::Quantum),
            "classical_lc" => Ok(SystemTag::ClassicalLc),
            "classical_lho" => Ok(SystemTag::ClassicalLho),
            other => Err(Error::Malformed(format!("unknown system tag '{other}'"))),
        }
    }
}

/// One scan point: normalized value (survival probability or `q_n/q0`) and
/// its deficit `1 - value`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRecord<T> {
    pub n: u64,
    pub value: T,
    pub deficit: T,
    pub system: SystemTag,
}

/// Evaluate `evaluator` over a strictly increasing grid of `n` values.
///
/// The evaluator must return a normalized value; anything non-finite or
/// outside `[0, 1.001]` aborts the scan with diagnostics.
pub fn scan_n<T, F>(evaluator: F, n_grid: &[u64], system: SystemTag) -> Result<Vec<ConvergenceRecord<T>>>
where
    T: Scalar,
    F: Fn(u64) -> Result<T>,
{
    if n_grid.is_empty() {
        return Err(Error::InsufficientData { needed: 1, got: 0 });
    }
    for pair in n_grid.windows(2) {
        if pair[1] <= pair[0] {
            return Err(Error::InvalidParameter(format!(
                "n grid must be strictly increasing: {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    if n_grid[0] == 0 {
        return Err(Error::InvalidParameter("n grid entries must be >= 1".into()));
    }
    let upper = T::from_f64_lossy(1.001);
    let mut records = Vec::with_capacity(n_grid.len());
    for &n in n_grid {
        let value = evaluator(n)?;
        if !value.is_finite() || value < T::zero() || value > upper {
            return Err(Error::Numerical(format!(
                "scan aborted at n = {n}: evaluator returned {} outside [0, 1.001]",
                value.to_f64_lossy()
            )));
        }
        records.push(ConvergenceRecord {
            n,
            value,
            deficit: T::one() - value,
            system,
        });
    }
    Ok(records)
}

/// Log-log least-squares fit of the deficit against `n`.
#[derive(Debug, Clone, Copy)]
pub struct SlopeFit<T> {
    pub slope: T,
    /// Natural-log intercept; for a clean Zeno system this approaches
    /// `ln((t/tau)^2)`.
    pub intercept: T,
    pub r_squared: T,
    pub points_used: usize,
    /// Records in the window whose deficit had already collapsed to <= 0
    /// beyond float precision and were dropped.
    pub points_dropped: usize,
}

/// Fit `ln(deficit)` against `ln(n)` over records with `n >= n_min`.
///
/// Non-positive deficits in the window are dropped (the limit has been
/// reached beyond float resolution); fewer than 5 surviving points is an
/// error.
pub fn fit_deficit_slope<T: Scalar>(
    records: &[ConvergenceRecord<T>],
    n_min: u64,
) -> Result<SlopeFit<T>> {
    let pairs: Vec<(u64, T)> = records.iter().map(|r| (r.n, r.deficit)).collect();
    fit_log_deficit(&pairs, n_min)
}

/// [`fit_deficit_slope`] on bare `(n, deficit)` pairs, for callers reading
/// records CSVs that do not carry a system tag.
pub fn fit_log_deficit<T: Scalar>(pairs: &[(u64, T)], n_min: u64) -> Result<SlopeFit<T>> {
    let in_window: Vec<&(u64, T)> = pairs.iter().filter(|(n, _)| *n >= n_min).collect();
    let usable: Vec<(T, T)> = in_window
        .iter()
        .filter(|(_, deficit)| *deficit > T::zero())
        .map(|(n, deficit)| (T::from_f64_lossy(*n as f64).ln(), deficit.ln()))
        .collect();
    let dropped = in_window.len() - usable.len();
    if usable.len() < 5 {
        return Err(Error::InsufficientData {
            needed: 5,
            got: usable.len(),
        });
    }
    let (slope, intercept, r_squared) = linear_fit(&usable);
    Ok(SlopeFit {
        slope,
        intercept,
        r_squared,
        points_used: usable.len(),
        points_dropped: dropped,
    })
}

/// Quadratic short-time fit `value ~= a + b t + c t^2`.
#[derive(Debug, Clone, Copy)]
pub struct ShortTimeFit<T> {
    /// `sqrt(-1/c)`: the time at which the quadratic deficit reaches unity.
    pub tau_estimate: T,
    pub linear_coefficient: T,
    pub quadratic_coefficient: T,
    pub constant_coefficient: T,
    pub residual_rms: T,
    /// Largest sample time; sets the scale for the linear-term gate.
    pub max_time: T,
}

impl<T: Scalar> ShortTimeFit<T> {
    /// Relative weight of the linear term against the quadratic term at the
    /// window edge: `|b| / (|c| t_max)`.
    pub fn linear_term_ratio(&self) -> T {
        self.linear_coefficient.abs() / (self.quadratic_coefficient.abs() * self.max_time)
    }

    /// The "no linear term" gate: true when the linear contribution is
    /// negligible at the window edge.
    pub fn passes_linear_gate(&self, max_ratio: T) -> bool {
        self.linear_term_ratio() <= max_ratio
    }
}

/// Estimate the characteristic time from `(t, value)` samples in the
/// quadratic-validity window (keep `t * max(omega, 1/tau) <= 0.3`).
///
/// Errors when the curvature is not a decay (`c >= 0`) or the value at zero
/// time strays from 1 by more than 1e-3; the linear coefficient is reported
/// so callers can apply the no-linear-term gate.
pub fn estimate_tau_short_time<T: Scalar>(samples: &[(T, T)]) -> Result<ShortTimeFit<T>> {
    if samples.len() < 4 {
        return Err(Error::InsufficientData {
            needed: 4,
            got: samples.len(),
        });
    }
    let mut max_time = T::zero();
    for &(t, v) in samples {
        if !(t.is_finite() && v.is_finite()) {
            return Err(Error::NonFinite("short-time sample".into()));
        }
        if t <= T::zero() {
            return Err(Error::InvalidParameter(format!(
                "sample times must be positive, got {t}"
            )));
        }
        if t > max_time {
            max_time = t;
        }
    }

    // Fit in the scaled variable u = t / t_max for conditioning, then map
    // the coefficients back.
    let (sa, sb, sc) = quadratic_fit(
        &samples
            .iter()
            .map(|&(t, v)| (t / max_time, v))
            .collect::<Vec<_>>(),
    )?;
    let a = sa;
    let b = sb / max_time;
    let c = sc / (max_time * max_time);

    let rms = {
        let mut acc = T::zero();
        for &(t, v) in samples {
            let fitted = a + b * t + c * t * t;
            acc = acc + (fitted - v) * (fitted - v);
        }
        (acc / T::from_f64_lossy(samples.len() as f64)).sqrt()
    };

    if (a - T::one()).abs() > T::from_f64_lossy(1e-3) {
        return Err(Error::NotZeno {
            reason: "value at zero time deviates from 1 by more than 1e-3",
            linear: b.to_f64_lossy(),
            quadratic: c.to_f64_lossy(),
        });
    }
    if c >= T::zero() {
        return Err(Error::NotZeno {
            reason: "no quadratic decay (curvature is not negative)",
            linear: b.to_f64_lossy(),
            quadratic: c.to_f64_lossy(),
        });
    }

    Ok(ShortTimeFit {
        tau_estimate: (-(T::one() / c)).sqrt(),
        linear_coefficient: b,
        quadratic_coefficient: c,
        constant_coefficient: a,
        residual_rms: rms,
        max_time,
    })
}

/// One grid point of the quantum/classical Taylor-form comparison.
#[derive(Debug, Clone, Copy)]
pub struct CorrespondencePoint<T> {
    pub n: u64,
    pub quantum: T,
    pub classical: T,
}

#[derive(Debug, Clone)]
pub struct CorrespondenceReport<T> {
    pub max_discrepancy: T,
    pub points: Vec<CorrespondencePoint<T>>,
}

/// Compare the Taylor-product survival (quantum route) against the
/// Taylor-product charge ratio (classical route) over an `n` grid.
///
/// For equal characteristic times the two are the same closed form evaluated
/// through two independent code paths; the comparison then must agree to
/// 1e-15 and a violation is an internal-consistency error. For different
/// times the discrepancy profile is simply reported.
pub fn correspondence_check<T: Scalar>(
    tau_quantum: T,
    tau_classical: T,
    t: T,
    n_grid: &[u64],
) -> Result<CorrespondenceReport<T>> {
    let circuit = LcCircuit::with_characteristic_time(tau_classical, T::one())?;
    let mut points = Vec::with_capacity(n_grid.len());
    let mut max_discrepancy = T::zero();
    for &n in n_grid {
        let schedule = ZenoSchedule::new(t, n)?;
        let protocol = SwitchProtocol::new(t, n)?;
        let quantum = zeno_survival_taylor(tau_quantum, &schedule)?;
        let (classical, _) = switched_charge_taylor(&circuit, &protocol)?;
        let discrepancy = (quantum - classical).abs();
        if discrepancy > max_discrepancy {
            max_discrepancy = discrepancy;
        }
        points.push(CorrespondencePoint {
            n,
            quantum,
            classical,
        });
    }
    if tau_quantum == tau_classical && max_discrepancy > T::tol(1e-15) {
        return Err(Error::Numerical(format!(
            "structural identity violated: equal tau but max discrepancy {:.3e}",
            max_discrepancy.to_f64_lossy()
        )));
    }
    Ok(CorrespondenceReport {
        max_discrepancy,
        points,
    })
}

/// Plain least squares on `(x, y)` pairs; returns (slope, intercept, r^2).
fn linear_fit<T: Scalar>(pts: &[(T, T)]) -> (T, T, T) {
    let n = T::from_f64_lossy(pts.len() as f64);
    let mean_x = pts.iter().map(|p| p.0).sum::<T>() / n;
    let mean_y = pts.iter().map(|p| p.1).sum::<T>() / n;
    let sxx = pts.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum::<T>();
    let sxy = pts
        .iter()
        .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
        .sum::<T>();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_tot = pts.iter().map(|p| (p.1 - mean_y) * (p.1 - mean_y)).sum::<T>();
    let ss_res = pts
        .iter()
        .map(|p| {
            let r = p.1 - (intercept + slope * p.0);
            r * r
        })
        .sum::<T>();
    let r_squared = if ss_tot > T::zero() {
        T::one() - ss_res / ss_tot
    } else {
        T::one()
    };
    (slope, intercept, r_squared)
}

/// Least-squares quadratic a + b u + c u^2 via the 3x3 normal equations.
fn quadratic_fit<T: Scalar>(pts: &[(T, T)]) -> Result<(T, T, T)> {
    let mut m = [[T::zero(); 3]; 3];
    let mut rhs = [T::zero(); 3];
    for &(u, v) in pts {
        let phi = [T::one(), u, u * u];
        for r in 0..3 {
            for c in 0..3 {
                m[r][c] = m[r][c] + phi[r] * phi[c];
            }
            rhs[r] = rhs[r] + phi[r] * v;
        }
    }
    solve_3x3(m, rhs).ok_or_else(|| {
        Error::Numerical("quadratic fit is singular: sample times are degenerate".into())
    })
}

fn solve_3x3<T: Scalar>(mut m: [[T; 3]; 3], mut rhs: [T; 3]) -> Option<(T, T, T)> {
    for col in 0..3 {
        let pivot_row = (col..3)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())?;
        if m[pivot_row][col].abs() <= T::epsilon() * T::from_f64_lossy(1e3) {
            return None;
        }
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        for row in (col + 1)..3 {
            let factor = m[row][col] / m[col][col];
            for k in col..3 {
                m[row][k] = m[row][k] - factor * m[col][k];
            }
            rhs[row] = rhs[row] - factor * rhs[col];
        }
    }
    let mut x = [T::zero(); 3];
    for row in (0..3).rev() {
        let mut acc = rhs[row];
        for k in (row + 1)..3 {
            acc = acc - m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Some((x[0], x[1], x[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn mixed_grid(lo: u64, hi: u64) -> Vec<u64> {
        let mut g = std::collections::BTreeSet::new();
        for base in [2u64, 10] {
            let mut p = 1u64;
            while p <= hi {
                if p >= lo {
                    g.insert(p);
                }
                p *= base;
            }
        }
        g.into_iter().collect()
    }

    #[test]
    fn scan_constant_evaluator_has_zero_deficits() {
        let recs = scan_n(|_| Ok(1.0), &[1, 2, 4], SystemTag::Quantum).unwrap();
        assert!(recs.iter().all(|r| r.deficit == 0.0));
    }

    #[test]
    fn scan_quantum_rabi_matches_closed_form_oracle() {
        // survival 1 - cos^(2n)(pi/(2n)) deficits for Omega = pi, t = 1
        let recs = scan_n(
            |n| Ok((PI / (2.0 * n as f64)).cos().powi(2).powi(n as i32)),
            &[10, 100, 1000],
            SystemTag::Quantum,
        )
        .unwrap();
        let expected = [0.21945393021885983, 0.02437308585609972, 0.0024643605804297888];
        for (r, e) in recs.iter().zip(expected) {
            assert_relative_eq!(r.deficit, e, max_relative = 1e-9);
        }
    }

    #[test]
    fn scan_classical_matches_closed_form_oracle() {
        // deficits 1 - cos^n(1/n) for omega = 1, t = 1
        let recs = scan_n(
            |n| Ok((1.0 / n as f64).cos().powi(n as i32)),
            &[10, 100, 1000],
            SystemTag::ClassicalLc,
        )
        .unwrap();
        let expected = [0.04885005332562057, 0.004987603727232037, 0.0004998751041224287];
        for (r, e) in recs.iter().zip(expected) {
            assert_relative_eq!(r.deficit, e, max_relative = 1e-9);
        }
    }

    #[test]
    fn scan_rejects_bad_grids_and_values() {
        assert!(scan_n(|_| Ok(1.0f64), &[4, 2], SystemTag::Quantum).is_err());
        assert!(scan_n(|_| Ok(1.0f64), &[0, 1], SystemTag::Quantum).is_err());
        assert!(scan_n(|_| Ok(1.5f64), &[1, 2], SystemTag::Quantum).is_err());
        assert!(scan_n(|_| Ok(-0.1f64), &[1, 2], SystemTag::Quantum).is_err());
        assert!(scan_n(|_| Ok(f64::NAN), &[1, 2], SystemTag::Quantum).is_err());
        assert!(scan_n(|_| Ok(1.0f64), &[], SystemTag::Quantum).is_err());
    }

    #[test]
    fn fit_recovers_synthetic_inverse_n_exactly() {
        let grid: Vec<u64> = (1..=40).map(|k| k * 25).collect();
        let recs = scan_n(|n| Ok(1.0 - 0.5 / n as f64), &grid, SystemTag::Quantum).unwrap();
        let fit = fit_deficit_slope(&recs, 1).unwrap();
        assert_relative_eq!(fit.slope, -1.0, epsilon = 1e-9);
        assert_relative_eq!(fit.intercept, 0.5f64.ln(), epsilon = 1e-9);
        assert_relative_eq!(fit.r_squared, 1.0, epsilon = 1e-12);
        assert_eq!(fit.points_dropped, 0);
    }

    #[test]
    fn fit_recovers_synthetic_power_laws() {
        for k in [0.5f64, 1.0, 2.0] {
            let grid: Vec<u64> = (1..=30).map(|j| j * 100).collect();
            let recs = scan_n(
                |n| Ok(1.0 - 0.3 * (n as f64).powf(-k)),
                &grid,
                SystemTag::Quantum,
            )
            .unwrap();
            let fit = fit_deficit_slope(&recs, 1).unwrap();
            assert_relative_eq!(fit.slope, -k, epsilon = 1e-6);
        }
    }

    #[test]
    fn fit_classical_deficit_law() {
        let grid = mixed_grid(100, 100_000);
        let recs = scan_n(
            |n| Ok((1.0 / n as f64).cos().powi(n as i32)),
            &grid,
            SystemTag::ClassicalLc,
        )
        .unwrap();
        let fit = fit_deficit_slope(&recs, 100).unwrap();
        assert!((fit.slope + 1.0).abs() <= 0.02, "slope {}", fit.slope);
        assert!(
            (fit.intercept - 0.5f64.ln()).abs() <= 0.02,
            "intercept {} vs {}",
            fit.intercept,
            0.5f64.ln()
        );
    }

    #[test]
    fn fit_quantum_intercept_matches_tau() {
        let grid = mixed_grid(100, 100_000);
        let recs = scan_n(
            |n| {
                let x = PI / (2.0 * n as f64);
                Ok(x.cos().powi(2).powi(n as i32))
            },
            &grid,
            SystemTag::Quantum,
        )
        .unwrap();
        let fit = fit_deficit_slope(&recs, 100).unwrap();
        assert!((fit.intercept - (PI * PI / 4.0).ln()).abs() <= 0.02);
        assert!((fit.intercept - 0.9031654105789097).abs() <= 0.02);
    }

    #[test]
    fn fit_drops_collapsed_deficits_and_fails_below_five() {
        let recs: Vec<ConvergenceRecord<f64>> = (1..=8)
            .map(|k| ConvergenceRecord {
                n: k,
                value: if k <= 4 { 1.0 } else { 1.0 - 0.1 / k as f64 },
                deficit: if k <= 4 { 0.0 } else { 0.1 / k as f64 },
                system: SystemTag::Quantum,
            })
            .collect();
        let err = fit_deficit_slope(&recs, 1).unwrap_err();
        assert!(matches!(err, Error::InsufficientData { needed: 5, got: 4 }));
    }

    #[test]
    fn tau_estimate_from_cosine_samples() {
        // cos(t) for omega = 1: tau = sqrt(2); residual linear term stays
        // below the gate while the t^4 tail keeps it from vanishing exactly.
        let samples: Vec<(f64, f64)> = (1..=10).map(|k| {
            let t = 0.01 * k as f64;
            (t, t.cos())
        })
        .collect();
        let fit = estimate_tau_short_time(&samples).unwrap();
        assert!((fit.tau_estimate - 2.0f64.sqrt()).abs() <= 0.01, "tau {}", fit.tau_estimate);
        assert!(fit.linear_coefficient.abs() <= 1e-4, "b {}", fit.linear_coefficient);
        assert!((fit.constant_coefficient - 1.0).abs() <= 1e-5);
        assert!(fit.passes_linear_gate(Z1_LINEAR_RATIO_GATE));
        assert!(fit.residual_rms < 1e-6);
    }

    #[test]
    fn tau_estimate_from_quantum_survival_samples() {
        // cos^2(Omega t / 2) with Omega = pi: tau = 2/pi, matching hbar/dH.
        let samples: Vec<(f64, f64)> = (1..=10)
            .map(|k| {
                let t = 0.01 * k as f64;
                (t, (PI * t / 2.0).cos().powi(2))
            })
            .collect();
        let fit = estimate_tau_short_time(&samples).unwrap();
        let tau = 2.0 / PI;
        assert!((fit.tau_estimate - tau).abs() <= 0.01);
        assert!((fit.tau_estimate / tau - 1.0).abs() <= 0.02);
        assert!(fit.passes_linear_gate(Z1_LINEAR_RATIO_GATE));
    }

    #[test]
    fn exponential_decay_is_rejected() {
        let samples: Vec<(f64, f64)> = (1..=10)
            .map(|k| {
                let t = 0.01 * k as f64;
                (t, (-t).exp())
            })
            .collect();
        let err = estimate_tau_short_time(&samples).unwrap_err();
        match err {
            Error::NotZeno { linear, .. } => {
                assert!((linear + 1.0).abs() < 0.01, "linear term should be ~ -1, got {linear}");
            }
            other => panic!("expected NotZeno, got {other:?}"),
        }
    }

    #[test]
    fn linear_system_with_negative_curvature_fails_the_gate() {
        // 1 - t - t^2 fits cleanly with c < 0 but has a dominant linear term.
        let samples: Vec<(f64, f64)> = (1..=10)
            .map(|k| {
                let t = 0.01 * k as f64;
                (t, 1.0 - t - t * t)
            })
            .collect();
        let fit = estimate_tau_short_time(&samples).unwrap();
        assert!(!fit.passes_linear_gate(Z1_LINEAR_RATIO_GATE));
    }

    #[test]
    fn skewed_value_at_zero_is_rejected() {
        let samples: Vec<(f64, f64)> = (1..=10)
            .map(|k| {
                let t = 0.01 * k as f64;
                (t, 0.9 * t.cos())
            })
            .collect();
        assert!(matches!(
            estimate_tau_short_time(&samples),
            Err(Error::NotZeno { .. })
        ));
    }

    #[test]
    fn tau_estimate_is_scale_equivariant() {
        let base: Vec<(f64, f64)> = (1..=10)
            .map(|k| {
                let t = 0.01 * k as f64;
                (t, t.cos())
            })
            .collect();
        let tau0 = estimate_tau_short_time(&base).unwrap().tau_estimate;
        for s in [0.5f64, 2.0, 10.0] {
            // same dynamics expressed in rescaled time units
            let scaled: Vec<(f64, f64)> = base.iter().map(|&(t, v)| (t * s, v)).collect();
            let tau = estimate_tau_short_time(&scaled).unwrap().tau_estimate;
            assert_relative_eq!(tau / tau0, s, max_relative = 1e-9);
        }
    }

    #[test]
    fn degenerate_sample_times_are_singular() {
        let samples = vec![(0.1f64, 0.99), (0.1, 0.99), (0.1, 0.99), (0.1, 0.99)];
        assert!(matches!(
            estimate_tau_short_time(&samples),
            Err(Error::Numerical(_))
        ));
    }

    #[test]
    fn insufficient_samples_rejected() {
        let samples = vec![(0.1f64, 0.99), (0.2, 0.98), (0.3, 0.96)];
        assert!(matches!(
            estimate_tau_short_time(&samples),
            Err(Error::InsufficientData { needed: 4, got: 3 })
        ));
    }

    #[test]
    fn correspondence_is_exact_for_equal_tau() {
        let tau = 2.0f64.sqrt();
        let grid: Vec<u64> = vec![4, 8, 16, 64, 256, 1024];
        let report = correspondence_check(tau, tau, 1.0, &grid).unwrap();
        assert!(report.max_discrepancy <= 1e-15, "{}", report.max_discrepancy);
    }

    #[test]
    fn correspondence_reports_profile_for_different_tau() {
        let report = correspondence_check(2.0 / PI, 2.0f64.sqrt(), 0.5, &[4, 16, 64]).unwrap();
        assert!(report.max_discrepancy > 0.0);
        assert_eq!(report.points.len(), 3);
        // discrepancy shrinks toward the n -> infinity limit where both -> 1
        let big = correspondence_check(2.0 / PI, 2.0f64.sqrt(), 0.5, &[100_000]).unwrap();
        assert!(big.max_discrepancy < report.max_discrepancy);
    }

    #[test]
    fn system_tags_round_trip() {
        for tag in [SystemTag::Quantum, SystemTag::ClassicalLc, SystemTag::ClassicalLho] {
            assert_eq!(SystemTag::parse(tag.as_str()).unwrap(), tag);
        }
        assert!(SystemTag::parse("other").is_err());
    }
}
