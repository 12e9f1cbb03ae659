use thiserror::Error;

/// Errors raised by the algebraic routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root of unity order must be odd and positive, got {0}")]
    InvalidOrder(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a unit of the Laurent ring: {0}")]
    NotAUnit(String),
    #[error("operation requires root-of-unity mode")]
    RequiresRootOfUnity,
    #[error("chebyshev A_n is undefined for n = 0")]
    UndefinedChebyshevA,
    #[error("degree of the zero element is undefined")]
    ZeroDegree,
    #[error("index {0} is not in the PBW index set (k1 * k2 must vanish)")]
    NotInLambda(String),
    #[error("index {0} is not in the basis set D")]
    NotInD(String),
    #[error("coefficient is not in the Frobenius subalgebra: {0}")]
    NotInFrobeniusImage(String),
    #[error("zero coefficient at {0}")]
    ZeroCoefficient(String),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("malformed triangulation: {0}")]
    MalformedTriangulation(String),
    #[error("unknown puncture {0}")]
    UnknownPuncture(String),
    #[error("quantum torus mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("lattice completion failed: {0}")]
    CompletionFailed(String),
    #[error("exponent vector is not in the balanced lattice: {0:?}")]
    NotBalanced(Vec<i64>),
    #[error("unsupported surface descriptor: {0}")]
    UnsupportedDescriptor(String),
    #[error("count too large to materialise: exponent {0}")]
    CountTooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
