use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error(
        "matrix is not Hermitian: conjugate-symmetry deviation {deviation:.3e} exceeds {tolerance:.3e}"
    )]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("state is not normalized: <psi|psi> = {norm_sq:.17e}")]
    NotNormalized { norm_sq: f64 },

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    #[error("{context} = {value:.6e} is outside the approximation's validity domain")]
    OutOfDomain { context: &'static str, value: f64 },

    #[error("no Zeno timescale: state is stationary (zero energy variance)")]
    Stationary,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("insufficient data: need at least {needed} points, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("not a Zeno system: {reason} (linear coefficient {linear:.6e}, quadratic coefficient {quadratic:.6e})")]
    NotZeno {
        reason: &'static str,
        linear: f64,
        quadratic: f64,
    },

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(io),
            other => Error::Malformed(format!("csv: {other:?}")),
        }
    }
}
