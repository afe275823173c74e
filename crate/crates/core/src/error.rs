use thiserror::Error;

use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("operation requires {expected}, got {got}")]
    UnsupportedRing { expected: &'static str, got: Ring },

    #[error("homomorphism is not well defined: syzygy {syzygy} maps to a nonzero element")]
    IllDefinedHom { syzygy: usize },

    #[error("map is not surjective: {0}")]
    NotSurjective(String),

    #[error("domain is not the whole module; inverse needs an endomorphism given on the ambient basis")]
    NotEndomorphism,

    #[error("vector does not lie in the kernel of the map")]
    NotInKernel,

    #[error("invariance chain failed at u = {u}, kernel generator {j}")]
    ChainFailure { u: usize, j: usize },

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
