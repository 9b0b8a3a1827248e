use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classical::LcCircuit;
use crate::convergence::SystemTag;
use crate::error::{Error, Result};

/// On-disk circuit spec, in electrical or mechanical flavor:
/// `{"L": 1.0, "C": 1.0, "q0": 1.0}` or `{"m": 1.0, "k": 1.0, "x0": 1.0}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum CircuitFile {
    Electrical {
        #[serde(rename = "L")]
        inductance: f64,
        #[serde(rename = "C")]
        capacitance: f64,
        q0: f64,
    },
    Mechanical {
        m: f64,
        k: f64,
        x0: f64,
    },
}

pub fn parse_circuit(json: &str) -> Result<(LcCircuit<f64>, SystemTag)> {
    let file: CircuitFile =
        serde_json::from_str(json).map_err(|e| Error::Malformed(format!("circuit spec: {e}")))?;
    match file {
        CircuitFile::Electrical {
            inductance,
            capacitance,
            q0,
        } => Ok((LcCircuit::new(inductance, capacitance, q0)?, SystemTag::ClassicalLc)),
        CircuitFile::Mechanical { m, k, x0 } => {
            Ok((LcCircuit::from_mechanical(m, k, x0)?, SystemTag::ClassicalLho))
        }
    }
}

pub fn load_circuit(path: &Path) -> Result<(LcCircuit<f64>, SystemTag)> {
    let text = std::fs::read_to_string(path)?;
    parse_circuit(&text)
}
