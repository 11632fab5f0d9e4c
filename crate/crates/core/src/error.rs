use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} variables vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operation requires n >= {required}, got n = {got}")]
    InvalidArity { required: usize, got: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("the zero polynomial has no leading monomial or degree")]
    ZeroPolynomial,

    #[error("polynomial is not a constant of the derivation")]
    NotAConstant,

    #[error("monomial is not the leading monomial of a normal monomial")]
    NotALeadingMonomial,

    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("malformed generator u({0},{0}): indices must differ")]
    MalformedGenerator(usize),

    /// An internal consistency check of the decomposition failed. Seeing
    /// this means a bug, not bad input.
    #[error("decomposition invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
