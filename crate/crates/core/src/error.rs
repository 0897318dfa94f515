use std::path::PathBuf;

/// Errors raised by the fidelity, cost-model, solver and harness layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("logarithm argument not positive: {0}")]
    Domain(String),

    #[error("scaling factor {pi} outside validity window [{pi_min}, 1]")]
    Range { pi: f64, pi_min: f64 },

    #[error("fidelity target {phi_min} exceeds full-model fidelity {phi_full}")]
    InfeasibleFidelity { phi_min: f64, phi_full: f64 },

    #[error("latency budget cannot be met: minimum split sum {min_sum} > 1")]
    InfeasibleLatency { min_sum: f64 },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("curve fit failed: best valid rms {rms:.3e} above ceiling {ceiling:.3e}")]
    FitFailure { rms: f64, ceiling: f64 },

    #[error("degenerate workload: {0}")]
    DegenerateWorkload(String),

    #[error("recovered {what} = {value:.6e} exceeds maximum {max:.6e}")]
    BoundViolation {
        what: &'static str,
        value: f64,
        max: f64,
    },

    #[error("no sign change of g while bracketing beta (lambda = {lambda:.3e})")]
    BracketFailure { lambda: f64 },

    #[error("{stage} did not converge within {iters} iterations")]
    IterationCap { stage: &'static str, iters: usize },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code for the CLI: config=2, infeasible=3, numeric=4, io=5.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Config(_) | Error::Range { .. } => 2,
            Error::InfeasibleFidelity { .. } | Error::InfeasibleLatency { .. } => 3,
            Error::Io { .. } => 5,
            _ => 4,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            Error::InfeasibleFidelity { .. } | Error::InfeasibleLatency { .. }
        )
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
