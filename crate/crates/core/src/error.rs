use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The polynomial's value at a primitive `d`-th root of unity is not a
    /// rational integer (the remainder modulo the cyclotomic polynomial is not
    /// constant).
    #[error("remainder modulo cyclotomic polynomial {d} is not constant")]
    NonConstantRemainder { d: usize },

    #[error("{what} = {value} is out of range ({allowed})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        allowed: String,
    },

    #[error("{d} does not divide the group order {order}")]
    NotDivisor { d: usize, order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    #[error("internal error: inexact polynomial division ({0})")]
    InexactDivision(String),

    #[error("face is not fixed by the order-{d} rotation")]
    NotFixed { d: usize },

    #[error("bijection failure: {0}")]
    Bijection(String),

    #[error("not a noncrossing tree: {0}")]
    NotANoncrossingTree(String),

    #[error("orbit of {0} never reaches a negative simple root")]
    NoNegativeSimpleReached(String),

    #[error("X(1) = {polynomial} but the face set has {faces} elements")]
    CardinalityMismatch { polynomial: String, faces: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cross-validation mismatch: {0}")]
    CrossValidation(String),
}

impl Error {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonConstantRemainder { .. } => "non_constant_remainder",
            Error::OutOfRange { .. } => "out_of_range",
            Error::NotDivisor { .. } => "not_divisor",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::UnsupportedType(_) => "unsupported_type",
            Error::InexactDivision(_) => "inexact_division",
            Error::NotFixed { .. } => "not_fixed",
            Error::Bijection(_) => "bijection",
            Error::NotANoncrossingTree(_) => "not_a_noncrossing_tree",
            Error::NoNegativeSimpleReached(_) => "no_negative_simple_reached",
            Error::CardinalityMismatch { .. } => "cardinality_mismatch",
            Error::Parse(_) => "parse",
            Error::CrossValidation(_) => "cross_validation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(what: &'static str, value: impl TryInto<i64>, allowed: impl Into<String>) -> Error {
    Error::OutOfRange {
        what,
        value: value.try_into().unwrap_or(i64::MAX),
        allowed: allowed.into(),
    }
}
