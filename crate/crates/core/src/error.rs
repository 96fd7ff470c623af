use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is not a monic irreducible of degree {degree} over GF({p})")]
    NotIrreducible { p: u64, degree: u32 },
    #[error("field order {q} exceeds the configured bound {bound}")]
    OverflowGuard { q: u128, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different field contexts")]
    MixedFields,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("points are not pairwise distinct")]
    DuplicatePoints,
    #[error("tail block is singular")]
    SingularTailBlock,
    #[error("dimension out of range: {0}")]
    DimensionOutOfRange(String),
    #[error("work estimate {needed} exceeds the budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("exact division failed, result is not an integer: {0}")]
    NonIntegerResult(String),
    #[error("negative count: {0}")]
    NegativeCount(String),
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
