use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fit report emitted by the fitting front end. Slope fields are populated by
/// the deficit-slope fit, tau fields by the short-time fit; the schema always
/// carries all six keys (absent quantities are `null`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub slope: Option<f64>,
    pub intercept: Option<f64>,
    pub r_squared: Option<f64>,
    pub tau_estimate: Option<f64>,
    pub linear_coefficient: Option<f64>,
    pub residual_rms: Option<f64>,
}

pub fn write_fit_report(path: &Path, report: &FitReport) -> Result<()> {
    let json = serde_json::to_string_pretty(report)
        .map_err(|e| Error::Malformed(format!("fit report: {e}")))?;
    std::fs::write(path, json + "\n")?;
    Ok(())
}

pub fn read_fit_report(path: &Path) -> Result<FitReport> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("fit report: {e}")))
}
