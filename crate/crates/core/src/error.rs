use thiserror::Error;

/// Failures of the exact arithmetic layer (fields, polynomials, matrices,
/// twisted polynomials and the skew field).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u32 },
    #[error("field of order {p}^{ell} is too large for table arithmetic")]
    FieldTooLarge { p: u32, ell: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("matrix is not invertible")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Failures of the splitting and classification pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplitError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("endomorphism is not dominant: minimal polynomial has zero constant term")]
    NonDominant,
    #[error("eigenvalue data is not central: {0}")]
    NonCentralEigenvalues(String),
    #[error("could not classify factor {factor} within search cap {cap}")]
    Unknown { factor: String, cap: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Text-grammar failures (field literals, polynomials, rational functions).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}

impl From<AlgebraError> for ParseError {
    fn from(e: AlgebraError) -> Self {
        ParseError::new(0, e.to_string())
    }
}
