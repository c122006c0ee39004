use thiserror::Error;

use crate::poly::VarId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("cannot substitute non-monomial image {image} for {var} where it occurs with a negative exponent")]
    NonMonomialImage { var: VarId, image: String },

    #[error("variable {0} evaluated at zero where it occurs with a negative exponent")]
    ZeroAtNegativeExponent(VarId),

    #[error("variable {0} has no value at the evaluation point")]
    UnassignedVariable(VarId),

    #[error("term stream valuation decreased from {previous} to {current}")]
    NonMonotoneValuation { previous: i64, current: i64 },

    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant coefficient {0} is not a unit")]
    NonUnitConstant(String),

    #[error("series input has a negative power of q: {0}")]
    NegativeQPower(String),

    #[error("expected a single signed monomial, got {0}")]
    NotMonomial(String),

    #[error("singular point: {0}")]
    Singular(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("parameter `{name}` = {value} is outside {min}..={max}")]
    ParamOutOfRange { name: String, value: i64, min: i64, max: i64 },

    #[error("missing parameter `{0}`")]
    MissingParam(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
