use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("result arity/degree {needed} exceeds truncation bound {bound}")]
    TruncationExceeded { needed: usize, bound: usize },
    #[error("window {window} out of range (must satisfy {constraint})")]
    WindowOutOfRange { window: usize, constraint: String },
    #[error("operation requires characteristic different from 2")]
    CharTwo,
    #[error("operad is not A-trivial at arity {0}")]
    NotATrivial(usize),
    #[error("algebra has no even/odd typing")]
    MissingTyping,
    #[error("input is not a valid operad: {0}")]
    InvalidOperad(String),
    #[error("input is not a GPerm algebra: {0}")]
    NotGPerm(String),
    #[error("input is not a PGPerm algebra: {0}")]
    NotPGPerm(String),
    #[error("input is not graded commutative: {0}")]
    NotCommutative(String),
    #[error("input is not an associative unital algebra: {0}")]
    InvalidAlgebra(String),
    #[error("not enough coefficients: have {have}, need at least {need}")]
    InsufficientData { have: usize, need: usize },
    #[error("series does not have polynomial growth: {0}")]
    NonPolynomialGrowth(String),
    #[error("wrong file kind: expected {expected}, found {found}")]
    WrongKind { expected: String, found: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
