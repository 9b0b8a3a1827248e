//! Run manifests: every data file a command emits is referenced by exactly
//! one manifest, and the manifest carries the resolved parameters needed to
//! reproduce those files bit-identically (the wall-clock duration being the
//! one field allowed to differ between reruns).

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::errors::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub parameters: Map<String, Value>,
    pub seed: Option<u64>,
    pub outputs: Vec<String>,
    pub duration_ms: f64,
}

impl RunManifest {
    pub fn new(command: &str, parameters: Map<String, Value>, seed: Option<u64>) -> Self {
        Self {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            parameters,
            seed,
            outputs: Vec::new(),
            duration_ms: 0.0,
        }
    }

    pub fn record_output(&mut self, path: &Path) {
        self.outputs.push(path.display().to_string());
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let json = serde_json::to_string_pretty(self)
            .map_err(|e| CliError::Internal(format!("manifest: {e}")))?;
        std::fs::write(path, json + "\n")
            .map_err(|e| CliError::Internal(format!("manifest {}: {e}", path.display())))
    }
}

/// The manifest path for a primary output: `<output>.manifest.json`.
pub fn manifest_path(primary_output: &Path) -> PathBuf {
    let mut name = primary_output.as_os_str().to_os_string();
    name.push(".manifest.json");
    PathBuf::from(name)
}
