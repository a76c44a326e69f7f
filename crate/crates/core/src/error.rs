use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable x{index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("lattice point violates constraint {row}")]
    ConstraintViolation { row: usize },

    #[error("singular curve: {0}")]
    SingularCurve(String),

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("degenerate sample matrix (rank {rank})")]
    DegenerateSamples { rank: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
