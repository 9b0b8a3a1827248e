use thiserror::Error;

/// CLI failure with its documented exit code.
///
/// Exit-code contract: 2 malformed input file, 3 non-Hermitian matrix,
/// 4 out-of-domain parameters or usage problems, 5 insufficient points,
/// 6 short-time gate failure, 1 anything internal.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    MalformedInput(String),
    #[error("{0}")]
    NotHermitian(String),
    #[error("{0}")]
    Insufficient(String),
    #[error("{0}")]
    Z1Gate(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 4,
            CliError::MalformedInput(_) => 2,
            CliError::NotHermitian(_) => 3,
            CliError::Insufficient(_) => 5,
            CliError::Z1Gate(_) => 6,
            CliError::Internal(_) => 1,
        }
    }
}

/// Usage-level failure (exit 4) with the command's usage line attached.
pub fn usage_error(message: impl std::fmt::Display, usage: &str) -> CliError {
    CliError::Usage(format!("{message}\nusage: {usage}"))
}

/// Map a core error arising from reading an input file: Hermiticity
/// violations exit 3, shape/syntax problems exit 2, parameter-domain
/// problems exit 4.
pub fn input_file_error(err: zeno_core::Error) -> CliError {
    use zeno_core::Error as E;
    match err {
        E::NotHermitian { .. } => CliError::NotHermitian(err.to_string()),
        E::Malformed(_) | E::Io(_) | E::NotNormalized { .. } | E::DimensionMismatch { .. } => {
            CliError::MalformedInput(err.to_string())
        }
        E::InvalidParameter(_) | E::NonFinite(_) => CliError::Usage(err.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

/// Map a core error from a computation over validated inputs.
pub fn computation_error(err: zeno_core::Error) -> CliError {
    use zeno_core::Error as E;
    match err {
        E::InsufficientData { .. } => CliError::Insufficient(err.to_string()),
        E::NotZeno { .. } => CliError::Z1Gate(err.to_string()),
        E::InvalidParameter(_) | E::OutOfDomain { .. } | E::NonFinite(_) => {
            CliError::Usage(err.to_string())
        }
        E::Malformed(_) | E::Io(_) => CliError::MalformedInput(err.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}
