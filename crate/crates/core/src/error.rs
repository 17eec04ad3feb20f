//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by loading, validation, and the numerical routines.
#[derive(Debug)]
pub enum Error {
    /// I/O failure while reading or writing an artifact.
    Io(std::io::Error),
    /// Malformed input file: line number (1-based) and description.
    Parse { path: String, line: usize, msg: String },
    /// Invalid argument or inconsistent shapes.
    InvalidInput(String),
    /// A node id outside `0..n`.
    NodeIdOutOfRange { id: usize, n: usize },
    /// The same undirected edge was listed twice with different weights.
    ConflictingDuplicateEdge { u: usize, v: usize, w1: f64, w2: f64 },
    /// A node with weighted degree zero under the `Reject` self-loop policy.
    ZeroDegreeNode(usize),
    /// An iterative routine did not reach its tolerance.
    NoConvergence { what: String, iterations: usize, residual: f64 },
    /// The objective kept growing; the step size is likely too large.
    Divergence { rounds: usize, suggestion: String },
    /// Matrix too large for the dense code path.
    DenseCapExceeded { n: usize, cap: usize },
    /// Working structure denser than the configured fraction.
    DensityExceeded { nnz: usize, limit: usize },
    /// Training produced a non-finite loss.
    NonFiniteLoss { epoch: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Io(e) => write!(f, "io error: {e}"),
            Error::Parse { path, line, msg } => write!(f, "{path}:{line}: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::NodeIdOutOfRange { id, n } => {
                write!(f, "node id {id} out of range (n = {n})")
            }
            Error::ConflictingDuplicateEdge { u, v, w1, w2 } => write!(
                f,
                "edge ({u}, {v}) listed twice with conflicting weights {w1} and {w2}"
            ),
            Error::ZeroDegreeNode(v) => write!(
                f,
                "node {v} has zero degree; pass the add-self-loops policy to accept it"
            ),
            Error::NoConvergence { what, iterations, residual } => write!(
                f,
                "{what} did not converge within {iterations} iterations (residual {residual:.3e})"
            ),
            Error::Divergence { rounds, suggestion } => {
                write!(f, "objective grew for {rounds} consecutive rounds; {suggestion}")
            }
            Error::DenseCapExceeded { n, cap } => {
                write!(f, "n = {n} exceeds the dense-path cap {cap}")
            }
            Error::DensityExceeded { nnz, limit } => {
                write!(f, "structure reached {nnz} nonzeros, above the configured limit {limit}")
            }
            Error::NonFiniteLoss { epoch } => {
                write!(f, "non-finite training loss at epoch {epoch}; reduce the learning rate")
            }
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl Error {
    /// True for failures of the numerical routines (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. }
                | Error::Divergence { .. }
                | Error::NonFiniteLoss { .. }
                | Error::DensityExceeded { .. }
        )
    }
}
