use thiserror::Error;

/// Errors raised by the core generators and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("letter {letter} is outside the alphabet of size {alphabet_size}")]
    InvalidLetter { letter: u8, alphabet_size: usize },

    #[error("image of seed letter {0} does not start with the seed; no fixed point")]
    NoFixedPoint(u8),

    #[error("fixed point seeded at {0} does not grow")]
    NonGrowing(u8),

    #[error("scan cap of {cap} letters exceeded")]
    CapExceeded { cap: usize },

    #[error("rows end at {horizon}, below the requested bound {requested}")]
    InsufficientTerms { horizon: u64, requested: u64 },

    #[error("quadratic irrationals live in different fields (d = {0} and d = {1})")]
    FieldMismatch(i128, i128),

    #[error("division by zero")]
    DivisionByZero,

    #[error("arithmetic overflow")]
    Overflow,

    #[error("resource cap exceeded: {0}")]
    Resource(&'static str),

    #[error("malformed substitution: {0}")]
    Parse(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
