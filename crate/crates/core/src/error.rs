use thiserror::Error;

/// Errors raised by the toric workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cone contains a line; its Hilbert basis is not unique")]
    NotPointed,
    #[error("generator set {0:?} is not a face of the cone")]
    NotAFace(Vec<usize>),
    #[error("polytope is not full dimensional")]
    NotFullDimensional,
    #[error("Ehrhart interpolation disagrees with direct count at k = {k}: expected {expected}, counted {counted}")]
    InterpolationMismatch { k: usize, expected: String, counted: usize },
    #[error("coefficient fields differ")]
    FieldMismatch,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("weight vector is not generic: cell {cell:?} is not a simplex")]
    NonGenericWeight { cell: Vec<usize> },
    #[error("rays do not span the ambient space")]
    RaysDoNotSpan,
    #[error("divisor is not Cartier on cone {cone:?}: local solution {solution:?} is not integral")]
    NotCartier { cone: Vec<usize>, solution: Vec<String> },
    #[error("fan is not complete")]
    NotComplete,
    #[error("fan is not simplicial")]
    NotSimplicial,
    #[error("fan is not smooth")]
    NotSmooth,
    #[error("divisor polytope is unbounded")]
    Unbounded,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("no decomposition of (3,2,...,2) into three cut vectors")]
    NoDecomposition,
    #[error("coloring is not proper on edge {0:?}")]
    NotProper((usize, usize)),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("table shapes differ")]
    ShapeMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
