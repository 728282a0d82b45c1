use thiserror::Error;

/// Errors shared by every layer of the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("grade {n} out of range for dimension {d}")]
    GradeOutOfRange { n: usize, d: usize },
    #[error("subset size mismatch: |K| = {k}, |J| = {j}")]
    SubsetSizeMismatch { k: usize, j: usize },
    #[error("not a dilation matrix: {0}")]
    NotDilation(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency failure: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
