use std::time::Instant;

use serde_json::{json, Map};

use zeno_core::convergence::{
    estimate_tau_short_time, fit_log_deficit, Z1_LINEAR_RATIO_GATE,
};
use zeno_core::io::{
    read_records_flexible, read_short_time_samples, write_fit_report, FitReport,
};

use crate::commands::FitArgs;
use crate::errors::{usage_error, CliError};
use crate::manifest::{manifest_path, RunManifest};

const USAGE: &str = "zeno fit (--input <records.csv> [--n-min <N>] | --short-time <samples.csv>) [--out <FILE>]";

pub fn run(args: FitArgs) -> Result<(), CliError> {
    let started = Instant::now();

    let (report, parameters, summary) = match (&args.input, &args.short_time) {
        (Some(input), None) => {
            let rows = read_records_flexible(input)
                .map_err(|e| CliError::MalformedInput(e.to_string()))?;
            let pairs: Vec<(u64, f64)> = rows.iter().map(|r| (r.n, r.deficit)).collect();
            let fit = fit_log_deficit(&pairs, args.n_min).map_err(|e| match e {
                zeno_core::Error::InsufficientData { .. } => CliError::Insufficient(e.to_string()),
                other => CliError::Internal(other.to_string()),
            })?;
            if fit.points_dropped > 0 {
                eprintln!(
                    "zeno fit: warning: dropped {} record(s) whose deficit had already collapsed to <= 0",
                    fit.points_dropped
                );
            }
            let report = FitReport {
                slope: Some(fit.slope),
                intercept: Some(fit.intercept),
                r_squared: Some(fit.r_squared),
                ..Default::default()
            };
            let mut parameters = Map::new();
            parameters.insert("input".into(), json!(input.display().to_string()));
            parameters.insert("n-min".into(), json!(args.n_min));
            let summary = format!(
                "fit: slope={:.6} intercept={:.6} r_squared={:.8} ({} points)",
                fit.slope, fit.intercept, fit.r_squared, fit.points_used
            );
            (report, parameters, summary)
        }
        (None, Some(samples_path)) => {
            let samples = read_short_time_samples(samples_path)
                .map_err(|e| CliError::MalformedInput(e.to_string()))?;
            let fit = estimate_tau_short_time(&samples).map_err(|e| match e {
                zeno_core::Error::InsufficientData { .. } => CliError::Insufficient(e.to_string()),
                zeno_core::Error::NotZeno {
                    reason,
                    linear,
                    quadratic,
                } => CliError::Z1Gate(format!(
                    "short-time gate failure: {reason}; linear coefficient b = {linear:.6e}, quadratic coefficient c = {quadratic:.6e}"
                )),
                other => CliError::Internal(other.to_string()),
            })?;
            if !fit.passes_linear_gate(Z1_LINEAR_RATIO_GATE) {
                return Err(CliError::Z1Gate(format!(
                    "short-time gate failure: linear term detected; linear coefficient b = {:.6e} carries {:.3}x the weight allowed at the window edge (gate {})",
                    fit.linear_coefficient,
                    fit.linear_term_ratio() / Z1_LINEAR_RATIO_GATE,
                    Z1_LINEAR_RATIO_GATE
                )));
            }
            let report = FitReport {
                tau_estimate: Some(fit.tau_estimate),
                linear_coefficient: Some(fit.linear_coefficient),
                residual_rms: Some(fit.residual_rms),
                ..Default::default()
            };
            let mut parameters = Map::new();
            parameters.insert(
                "short-time".into(),
                json!(samples_path.display().to_string()),
            );
            let summary = format!(
                "fit: tau={:.6} linear_coefficient={:.3e} residual_rms={:.3e}",
                fit.tau_estimate, fit.linear_coefficient, fit.residual_rms
            );
            (report, parameters, summary)
        }
        (None, None) => {
            return Err(usage_error(
                "one of --input or --short-time is required",
                USAGE,
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };

    write_fit_report(&args.out, &report).map_err(|e| CliError::Internal(e.to_string()))?;

    let mut parameters = parameters;
    parameters.insert("out".into(), json!(args.out.display().to_string()));
    let mut manifest = RunManifest::new("fit", parameters, None);
    manifest.record_output(&args.out);
    manifest.duration_ms = started.elapsed().as_secs_f64() * 1e3;
    manifest.write(&manifest_path(&args.out))?;

    println!("{summary}");
    Ok(())
}
