use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient context mismatch: {0}")]
    ContextMismatch(String),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("inexact division (nonzero remainder)")]
    InexactDivision,
    #[error("tropicalization requires a nonzero subtraction-free representative")]
    NonPositiveCoefficients,
    #[error("pole at evaluation point (zero coordinate raised to a negative power)")]
    PoleAtPoint,
    #[error("mutation direction {0} out of range 1..={1}")]
    DirectionOutOfRange(usize, usize),
    #[error("principal part is not skew-symmetrizable")]
    NotSkewSymmetrizable,
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("node budget of {0} seeds exceeded")]
    BudgetExceeded(usize),
    #[error("exploration budget exhausted without closure; finiteness inconclusive")]
    Inconclusive,
    #[error("Cartan matrix is not of finite type")]
    NonFiniteType,
    #[error("Cartan matrix is decomposable; operation requires an indecomposable finite type")]
    Decomposable,
    #[error("operation not supported for this Cartan type: {0}")]
    UnsupportedType(String),
    #[error("belt position ({0}, {1}) outside the computed window")]
    IndexOutOfWindow(usize, i64),
    #[error("point length {0} does not match regime (expected {1})")]
    RegimeMismatch(usize, usize),
    #[error("deleted pattern is not of finite type")]
    NotFiniteTarget,
    #[error("(R, E) does not satisfy R B + E P = P-bar")]
    REViolation,
    #[error("cluster variable is not homogeneous under the principal grading")]
    NotHomogeneous,
    #[error("no nonnegative integer solution row for the universal specialization")]
    NoSolution,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
