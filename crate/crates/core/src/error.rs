use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot prepend row {row} to a partition whose first part is {first}")]
    RowTooShort { row: u32, first: u32 },

    #[error("invalid partition {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("integer overflow in coefficient arithmetic")]
    Overflow,

    #[error("partial matrix has k = {matrix_k} but alpha has length {alpha_len}")]
    ShapeMismatch { matrix_k: usize, alpha_len: usize },

    #[error("alpha must be weakly decreasing, got {0:?}")]
    UnsortedAlpha(Vec<u32>),

    #[error("k = {0} is outside the supported range 1..=5")]
    UnsupportedK(usize),

    #[error("face {face} is not defined for k = {k}")]
    FaceNotDefinedForK { face: &'static str, k: usize },

    #[error("operator slope {op} does not match sequence slope {seq}")]
    SlopeMismatch { op: u32, seq: u32 },

    #[error("index {n} is below the first admissible index {min}")]
    BelowFloor { n: i64, min: u32 },

    #[error("invalid difference operator: {0}")]
    InvalidOperator(String),

    #[error("sequence declared to stabilize at {declared} but is unstable at {observed}")]
    NotStabilizing { declared: u32, observed: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
