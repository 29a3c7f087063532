use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every module. Numeric payloads are carried as
/// `f64` regardless of the scalar type that produced them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("{context} did not converge: best estimate {estimate}, estimated error {estimated_error:e}")]
    Convergence {
        context: String,
        estimate: f64,
        estimated_error: f64,
    },

    #[error("root finder stopped after {iterations} iterations at ({x}, {y}) with residual {residual:e}")]
    RootNotFound {
        x: f64,
        y: f64,
        iterations: usize,
        residual: f64,
    },

    #[error("wavefunction is not normalizable: {0}")]
    NonNormalizable(&'static str),

    #[error("no valid superpotential: {0}")]
    NoValidAnsatz(String),

    #[error("potential is not finite at r = {radius}")]
    PotentialEvaluation { radius: f64 },
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64) -> Self {
        Error::Domain {
            what,
            value,
        }
    }
}
