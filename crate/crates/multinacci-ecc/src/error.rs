use crate::curve::Point;
use thiserror::Error;

/// All failure modes surfaced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime (or is below the minimum of 3)")]
    NotPrime(u64),

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },

    #[error("{value} is not a primitive element modulo {modulus}")]
    NotPrimitive { value: u64, modulus: u64 },

    #[error("{what} = {value} outside valid range {min}..={max}")]
    RangeError {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("singular curve: 4a^3 + 27b^2 = 0 (mod {p})")]
    SingularCurve { p: u64 },

    #[error("point {point} is not on the curve")]
    PointNotOnCurve { point: Point },

    #[error("curve modulus {p} exceeds the enumeration limit {limit}")]
    CurveTooLarge { p: u64, limit: u64 },

    #[error("matrix dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("charset has {charset} symbols but the curve group has {points} points")]
    SizeMismatch { charset: usize, points: usize },

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),

    #[error("point {0} is not in the alphabet")]
    UnknownPoint(Point),

    #[error("requested {requested} points but blocks only hold {available}")]
    LengthOverflow { requested: usize, available: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
