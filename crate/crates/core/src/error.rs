use thiserror::Error;

/// Errors raised by grid construction, interpolant building and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum InterpError {
    #[error("invalid range: lower bound {a} must be below upper bound {b}")]
    InvalidRange { a: f64, b: f64 },
    #[error("too few points: need at least {required}, got {got}")]
    TooFewPoints { required: usize, got: usize },
    #[error("nodes must be strictly increasing (violated at index {index})")]
    NonIncreasing { index: usize },
    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },
    #[error("length mismatch: {nodes} nodes but {values} values")]
    LengthMismatch { nodes: usize, values: usize },
    #[error("index out of range: node span {first}..={last} exceeds {len} nodes")]
    IndexOutOfRange { first: usize, last: usize, len: usize },
    #[error("degree {degree} too large for {len} nodes")]
    DegreeTooLarge { degree: usize, len: usize },
    #[error("order {order} exceeds grid of {len} nodes")]
    OrderExceedsGrid { order: usize, len: usize },
    #[error("interval {interval} is a boundary interval for this stencil")]
    BoundaryInterval { interval: usize },
    #[error("abscissa {x} outside [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error("unknown method `{0}`")]
    UnknownMethod(String),
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("unknown norm `{0}`")]
    UnknownNorm(String),
    #[error("unknown grid type `{0}`")]
    UnknownGridType(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, InterpError>;
