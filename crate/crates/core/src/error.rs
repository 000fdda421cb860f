use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial with negative top {0}")]
    NegativeBinomialTop(i64),

    #[error("{0} must be nonnegative, got {1}")]
    NegativeArgument(&'static str, i64),

    #[error("double factorial needs an odd argument >= -1, got {0}")]
    InvalidDoubleFactorial(i64),

    #[error("division by zero evaluating a Laurent polynomial with negative exponents at 0")]
    DivisionByZero,

    #[error("series is not invertible: constant coefficient is not a nonzero constant")]
    NotInvertible,

    #[error("cannot differentiate a series of order 0")]
    OrderZeroDerivative,

    #[error("order must be at least 1, got {0}")]
    InvalidOrder(i64),

    #[error("the classical first kind has no higher orders (alpha = {0})")]
    ClassicalHigherOrder(u32),

    #[error("index out of range: need 2 <= i <= N, got i = {i}, N = {n}")]
    TriangleIndex { i: i64, n: i64 },

    #[error("closed form for a_{i}({n}) evaluated to {value}, expected a positive integer")]
    ClosedFormNotPositiveInteger { i: i64, n: i64, value: String },

    #[error("cannot parse Laurent polynomial: {0}")]
    Parse(String),
}
