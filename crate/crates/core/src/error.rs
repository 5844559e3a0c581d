use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index e[{row},{col}] out of range for dimension {dim}")]
    IndexOutOfRange { row: usize, col: usize, dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid dimension {0}: must be at least 1")]
    InvalidDimension(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{op}: precondition `central` violated, input does not commute with every generator")]
    NotCentral { op: &'static str },

    #[error(
        "{op}: precondition `poisson_central` violated, input has nonzero bracket with a generator"
    )]
    NotPoissonCentral { op: &'static str },

    #[error("{op}: precondition `regular_diagonal` violated: {reason}")]
    IrregularShift { op: &'static str, reason: String },

    #[error("{op}: precondition `in_module` violated for index {index}")]
    NotInModule { op: &'static str, index: usize },

    #[error("central decomposition failed: {0}")]
    DecompositionFailed(String),

    #[error("term budget exceeded: estimated {estimated} terms, ceiling {ceiling}")]
    BudgetExceeded { estimated: u128, ceiling: u128 },

    #[error("{op}: degree {degree} exceeds supported limit {limit}")]
    DegreeLimit {
        op: &'static str,
        degree: usize,
        limit: usize,
    },

    #[error("{op}: zero element")]
    ZeroElement { op: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
