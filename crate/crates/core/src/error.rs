use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("expected a single monomial, got {terms} terms")]
    NotAMonomial { terms: usize },

    #[error("value assigned to {var:?} is not invertible but the variable occurs with a negative exponent")]
    NonInvertibleValue { var: String },

    #[error("no value assigned to variable {var:?}")]
    UnassignedVariable { var: String },

    #[error("polynomial division is not exact: {context}")]
    NotDivisible { context: String },

    #[error("not an alternating-sign matrix: {line} {index} violates the alternating condition")]
    NotAlternating { line: &'static str, index: usize },

    #[error("malformed matrix: {0}")]
    Malformed(String),

    #[error("inconsistent edge orientation at vertex ({row}, {col})")]
    InconsistentOrientation { row: usize, col: usize },

    #[error("state count {count} exceeds the configured bound {bound}")]
    SizeTooLarge { count: u128, bound: u128 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coincident points: u{i} = u{j}")]
    CoincidentPoints { i: usize, j: usize },

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("the closed form has a pole at x = 4; use the 4-enumeration identity instead")]
    SingularAtFour,

    #[error("sigma(a v) vanishes at the requested point")]
    PoleAtSigmaZero,

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    #[error("integrality check failed: {0}")]
    NotIntegral(String),

    #[error("exponent overflow while building a polynomial")]
    ExponentOverflow,

    #[error("parse error: {0}")]
    Parse(String),
}
