use std::time::Instant;

use serde_json::{json, Map};

use zeno_core::io::read_records_flexible;

use crate::commands::{PlotArgs, PlotColumn};
use crate::errors::{usage_error, CliError};
use crate::manifest::{manifest_path, RunManifest};
use crate::svg::{render_line_chart, ChartOptions};

const USAGE: &str =
    "zeno plot --input <records.csv> [--y value|deficit] [--log-log] [--annotate] [--out <FILE>]";

pub fn run(args: PlotArgs) -> Result<(), CliError> {
    let started = Instant::now();

    let Some(input) = &args.input else {
        return Err(usage_error("--input is required", USAGE));
    };
    if args.annotate && !args.log_log {
        return Err(usage_error("--annotate requires --log-log", USAGE));
    }

    let rows =
        read_records_flexible(input).map_err(|e| CliError::MalformedInput(e.to_string()))?;
    if rows.is_empty() {
        return Err(CliError::Insufficient(format!(
            "{}: no data rows to plot",
            input.display()
        )));
    }

    let mut points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| {
            let y = match args.y {
                PlotColumn::Value => r.value,
                PlotColumn::Deficit => r.deficit,
            };
            (r.n as f64, y)
        })
        .collect();
    if args.log_log {
        points.retain(|&(x, y)| x > 0.0 && y > 0.0);
        if points.is_empty() {
            return Err(CliError::Insufficient(
                "no strictly positive points remain for the log-log plot".into(),
            ));
        }
    }

    let annotation = if args.annotate {
        if points.len() < 2 {
            return Err(CliError::Insufficient(
                "need at least 2 points for a slope annotation".into(),
            ));
        }
        let slope = log_log_slope(&points);
        Some(format!("slope = {slope:+.4}"))
    } else {
        None
    };

    let svg = render_line_chart(
        &points,
        &ChartOptions {
            log_x: args.log_log,
            log_y: args.log_log,
            x_label: "n".into(),
            y_label: args.y.as_str().into(),
            annotation,
        },
    );
    std::fs::write(&args.out, svg)
        .map_err(|e| CliError::Internal(format!("{}: {e}", args.out.display())))?;

    let mut parameters = Map::new();
    parameters.insert("input".into(), json!(input.display().to_string()));
    parameters.insert("y".into(), json!(args.y.as_str()));
    parameters.insert("log-log".into(), json!(args.log_log));
    parameters.insert("annotate".into(), json!(args.annotate));
    parameters.insert("out".into(), json!(args.out.display().to_string()));
    let mut manifest = RunManifest::new("plot", parameters, None);
    manifest.record_output(&args.out);
    manifest.duration_ms = started.elapsed().as_secs_f64() * 1e3;
    manifest.write(&manifest_path(&args.out))?;

    println!(
        "plot: wrote {} point(s) to {}",
        points.len(),
        args.out.display()
    );
    Ok(())
}

fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx = pts.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    let sxy = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>();
    sxy / sxx
}
