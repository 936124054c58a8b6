//! Crate-wide error type.

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("point set is not full-dimensional (affine rank {rank}, ambient {ambient})")]
    NotFullDimensional { rank: usize, ambient: usize },

    #[error("origin is not an interior point")]
    OriginNotInterior,

    #[error("polytope is not reflexive")]
    NotReflexive,

    #[error("unknown face id (dim {dim}, index {index})")]
    UnknownFace { dim: usize, index: usize },

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("zero vector has no containing simplex")]
    ZeroVector,

    #[error("operation requires rank 4, got rank {0}")]
    RankNotFour(usize),

    #[error("flop circuit is stale: its simplices are no longer present")]
    StaleCircuit,

    #[error("divisor is not convex")]
    NotConvex,

    #[error("divisor coefficients must be nonnegative integers")]
    NotIntegralDivisor,

    #[error("index mismatch: {0}")]
    IndexMismatch(String),

    #[error("base point violates a tightness equality: {0}")]
    NotOnDualFace(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
