use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the field engine, the polynomial ring, the permutation
/// checks and the CLI front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("reducible modulus: {0}")]
    ReducibleModulus(String),

    #[error("unsupported degree: k = {k} (supported range 1..={max})")]
    UnsupportedDegree { k: u32, max: u32 },

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("zero polynomial has every root")]
    ZeroPolynomial,

    #[error("not a subgroup order: {d} does not divide {order}")]
    NotSubgroupOrder { d: u64, order: u64 },

    #[error("l too small for family {family}: l = {l} gives a negative exponent")]
    LTooSmall { family: u8, l: u64 },

    #[error("not in Zieve form: {0}")]
    NotZieveForm(String),

    #[error("unknown family {0} (expected 1, 2 or 3)")]
    UnknownFamily(u8),

    #[error("element {0} is not in mu_(q+1)")]
    NotInMu(u64),

    #[error("denominator vanishes at x = {0} in mu_(q+1)")]
    VanishingDenominator(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
