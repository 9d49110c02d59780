//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("fixed-point iteration did not converge after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("density fell below floor {floor:.3e} (min {min:.3e})")]
    DensityUnderflow { min: f64, floor: f64 },

    #[error("wave-function node: component {component} has |psi| minimum {min_abs:.3e}, phase undefined")]
    NodeDetected { component: usize, min_abs: f64 },

    #[error("field is not divergence-free (max spectral residual {residual:.3e})")]
    NotDivergenceFree { residual: f64 },

    #[error("field has a nonzero mean mode ({mean:.3e}); the zero mode must vanish")]
    NonzeroMean { mean: f64 },

    #[error("coordinate chart is singular here (xi_2 = xi_3 = 0)")]
    ChartSingularity,

    #[error("spin component {component} vanishes; gauge angle undefined")]
    ZeroSpinComponent { component: usize },

    #[error("no canonical lift exists for this state: {reason}")]
    InfeasibleLift { reason: String },

    #[error("grid size must be an even power of two >= 8, got {n}")]
    BadGridSize { n: usize },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for configuration problems, 3 for
    /// numerical failures (non-convergence, underflow, invalid fields).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Io(_) | Error::Json(_) => 2,
            _ => 3,
        }
    }
}
