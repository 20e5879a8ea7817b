use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// The leading minor of order `k` (1-based) is singular, so the
    /// determinant recursion cannot continue past it.
    #[error("leading minor of order {k} is singular (matrix is not positive definite)")]
    SingularMinor { k: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no sample accepted out of {n_samples}; increase the sample count")]
    ZeroAcceptance { n_samples: u64 },

    #[error("integrand is not finite at x = {x:e}")]
    NonFiniteIntegrand { x: f64 },

    #[error("unknown function id `{0}`")]
    UnknownId(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
