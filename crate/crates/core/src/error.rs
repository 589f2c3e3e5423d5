use thiserror::Error;

/// Errors raised while validating towers or computing characters.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("fiber dimension n_{level} = {value} is not positive")]
    NonPositiveDimension { level: usize, value: i64 },

    #[error("tower needs at least one stage")]
    EmptyTower,

    #[error("expected {expected} line-bundle twists, got {found}")]
    TwistCountMismatch { expected: usize, found: usize },

    #[error("bad coupling entry c[{key}]: {reason}")]
    BadCIndex { key: String, reason: String },

    #[error("missing coupling entry c[{i},{j}]")]
    MissingCEntry { i: usize, j: usize },

    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: &'static str, index: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("weight is not of the form e_(m+1) + (levels above {level}): {reason}")]
    MalformedWeight { level: usize, reason: &'static str },

    #[error("level {level} has fiber dimension {n}, rank-one operator needs 1")]
    NotRankOne { level: usize, n: usize },

    #[error("coordinate {position} is zero but carries negative exponent")]
    ZeroBaseWithNegativeExponent { position: usize },

    #[error("sample point is within {guard:e} of a pole")]
    NearPole { guard: f64 },

    #[error("gave up after {rejected} pole rejections")]
    ExhaustedSampling { rejected: usize },

    #[error("malformed rational expression: {0}")]
    MalformedExpr(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
