use std::path::PathBuf;

use thiserror::Error;

use crate::linsolve::SolveStats;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("topology error: {0}")]
    Topology(String),

    #[error("degenerate triangle {triangle}: signed area {area:e}")]
    DegenerateTriangle { triangle: usize, area: f64 },

    #[error("edge {0} lies on the boundary and carries no jump residual")]
    BoundaryEdge(usize),

    #[error(
        "solver did not converge after {} iterations (relative residual {:e})",
        .stats.iterations, .stats.relative_residual
    )]
    NonConvergence { stats: SolveStats },

    #[error("sparse factorization failed: {0}")]
    Factorization(String),

    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of the numerical pipeline, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::Factorization(_) | Error::DegenerateTriangle { .. }
        )
    }
}
