pub mod fit;
pub mod lc;
pub mod plot;
pub mod quantum;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::errors::CliError;

#[derive(Parser)]
#[command(
    name = "zeno",
    version,
    about = "Freezing dynamics by repeated interruption: quantum survival protocols, switched LC/harmonic oscillators, convergence fits, and charts",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run the repeated-measurement survival protocol and write records CSV
    Quantum(QuantumArgs),
    /// Run the switched LC / harmonic oscillator protocol and write records CSV
    Lc(LcArgs),
    /// Fit records (deficit slope) or short-time samples (tau estimate)
    Fit(FitArgs),
    /// Render a records CSV as a deterministic SVG chart
    Plot(PlotArgs),
}

#[derive(clap::Args)]
pub struct QuantumArgs {
    /// Built-in two-level preset: H = (OMEGA/2) sigma_x, hbar = 1, start |0>
    #[arg(long, value_name = "OMEGA", conflicts_with = "hamiltonian")]
    pub rabi: Option<f64>,
    /// Hamiltonian spec JSON (dim, hbar, matrix, initial)
    #[arg(long, value_name = "FILE")]
    pub hamiltonian: Option<PathBuf>,
    /// Total interval length
    #[arg(long)]
    pub t: Option<f64>,
    /// Single subdivision count
    #[arg(long, conflicts_with = "n_grid")]
    pub n: Option<u64>,
    /// Grid of subdivision counts: comma list (1,2,4) or start:end:xFACTOR
    #[arg(long = "n-grid", value_name = "SPEC")]
    pub n_grid: Option<String>,
    /// Monte Carlo trajectories per grid point (adds mc columns)
    #[arg(long)]
    pub trials: Option<u64>,
    /// Random seed (falls back to ZENO_SEED, then 0)
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output records CSV
    #[arg(long, default_value = "records.csv")]
    pub out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LcMethod {
    Analytic,
    Rk4,
}

impl LcMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            LcMethod::Analytic => "analytic",
            LcMethod::Rk4 => "rk4",
        }
    }
}

#[derive(clap::Args)]
pub struct LcArgs {
    /// Inductance (with --C and --q0)
    #[arg(long = "L", value_name = "L")]
    pub inductance: Option<f64>,
    /// Capacitance
    #[arg(long = "C", value_name = "C")]
    pub capacitance: Option<f64>,
    /// Initial charge
    #[arg(long)]
    pub q0: Option<f64>,
    /// Mass (mechanical flavor, with --k and --x0)
    #[arg(long)]
    pub m: Option<f64>,
    /// Stiffness
    #[arg(long)]
    pub k: Option<f64>,
    /// Initial displacement
    #[arg(long)]
    pub x0: Option<f64>,
    /// Circuit spec JSON ({"L","C","q0"} or {"m","k","x0"})
    #[arg(long, value_name = "FILE")]
    pub circuit: Option<PathBuf>,
    /// Built-in preset L = C = q0 = 1
    #[arg(long = "lc-unit")]
    pub lc_unit: bool,
    /// Total interval length
    #[arg(long)]
    pub t: Option<f64>,
    /// Single subdivision count
    #[arg(long, conflicts_with = "n_grid")]
    pub n: Option<u64>,
    /// Grid of subdivision counts: comma list (1,2,4) or start:end:xFACTOR
    #[arg(long = "n-grid", value_name = "SPEC")]
    pub n_grid: Option<String>,
    /// Evaluation method for the exact column
    #[arg(long, value_enum, default_value = "analytic")]
    pub method: LcMethod,
    /// RK4 step (rk4 method only; must be <= (t/n)/10)
    #[arg(long, default_value_t = 1e-4)]
    pub step: f64,
    /// Write the per-step trajectory trace CSV (rk4 with a single --n)
    #[arg(long, value_name = "FILE")]
    pub trace: Option<PathBuf>,
    /// Output records CSV
    #[arg(long, default_value = "records.csv")]
    pub out: PathBuf,
}

#[derive(clap::Args)]
pub struct FitArgs {
    /// Records CSV for the log-log deficit-slope fit
    #[arg(long, value_name = "FILE", conflicts_with = "short_time")]
    pub input: Option<PathBuf>,
    /// Ignore records with n below this in the slope fit
    #[arg(long = "n-min", default_value_t = 1)]
    pub n_min: u64,
    /// Short-time samples CSV (columns t, value) for the tau estimate
    #[arg(long = "short-time", value_name = "FILE")]
    pub short_time: Option<PathBuf>,
    /// Output fit-report JSON
    #[arg(long, default_value = "fit_report.json")]
    pub out: PathBuf,
}

#[derive(clap::Args)]
pub struct PlotArgs {
    /// Records CSV to plot
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Plot both axes on log10 scale
    #[arg(long = "log-log")]
    pub log_log: bool,
    /// Annotate with the fitted log-log slope (requires --log-log)
    #[arg(long)]
    pub annotate: bool,
    /// Which column to put on the y axis
    #[arg(long, value_enum, default_value = "value")]
    pub y: PlotColumn,
    /// Output SVG
    #[arg(long, default_value = "chart.svg")]
    pub out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotColumn {
    Value,
    Deficit,
}

impl PlotColumn {
    pub fn as_str(self) -> &'static str {
        match self {
            PlotColumn::Value => "value",
            PlotColumn::Deficit => "deficit",
        }
    }
}

/// Seed resolution: flag, then ZENO_SEED, then 0.
pub fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("ZENO_SEED") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            CliError::Usage(format!("ZENO_SEED must be an unsigned integer, got '{raw}'"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(CliError::Usage("ZENO_SEED is not valid unicode".into()))
        }
    }
}

/// Resolve the `--n` / `--n-grid` pair into a grid.
pub fn resolve_grid(
    n: Option<u64>,
    n_grid: &Option<String>,
    usage: &str,
) -> Result<Vec<u64>, CliError> {
    match (n, n_grid) {
        (Some(0), _) => Err(crate::errors::usage_error("--n must be >= 1", usage)),
        (Some(n), None) => Ok(vec![n]),
        (None, Some(spec)) => crate::grid::parse_n_grid(spec),
        (None, None) => Err(crate::errors::usage_error(
            "one of --n or --n-grid is required",
            usage,
        )),
        (Some(_), Some(_)) => Err(crate::errors::usage_error(
            "--n conflicts with --n-grid",
            usage,
        )),
    }
}

/// Resolve the required `--t` flag.
pub fn resolve_time(t: Option<f64>, usage: &str) -> Result<f64, CliError> {
    match t {
        Some(t) if t.is_finite() && t >= 0.0 => Ok(t),
        Some(t) => Err(crate::errors::usage_error(
            format!("--t must be finite and non-negative, got {t}"),
            usage,
        )),
        None => Err(crate::errors::usage_error("--t is required", usage)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_resolution_rules() {
        let usage = "test";
        assert_eq!(resolve_grid(Some(5), &None, usage).unwrap(), vec![5]);
        assert_eq!(
            resolve_grid(None, &Some("1,2".into()), usage).unwrap(),
            vec![1, 2]
        );
        assert!(resolve_grid(None, &None, usage).is_err());
        assert!(resolve_grid(Some(0), &None, usage).is_err());
    }

    #[test]
    fn time_resolution_rules() {
        assert_eq!(resolve_time(Some(1.5), "u").unwrap(), 1.5);
        assert_eq!(resolve_time(Some(0.0), "u").unwrap(), 0.0);
        assert!(resolve_time(None, "u").is_err());
        assert!(resolve_time(Some(-1.0), "u").is_err());
        assert!(resolve_time(Some(f64::NAN), "u").is_err());
    }
}
