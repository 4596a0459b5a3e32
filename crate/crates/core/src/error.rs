use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// Mathematical rejections (a block that violates a condition) are not
/// errors; they are reported through [`crate::matkernel::Rejection`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("conductor {from} does not divide {to}")]
    NonDivisibleConductor { from: u32, to: u32 },

    #[error("invalid root of unity exponent {k} for conductor {n}")]
    InvalidRootExponent { n: u32, k: u32 },

    #[error("conductor must be positive")]
    ZeroConductor,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero covector")]
    ZeroCovector,

    #[error("empty hyperplane set")]
    EmptyInput,

    #[error("hyperplane already belongs to the arrangement")]
    HyperplaneInArrangement,

    #[error("hyperplane index {index} out of range (arrangement has {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("blocks do not partition the arrangement: {0}")]
    NotAPartition(String),

    #[error("block size {size} out of range 1..={dim}")]
    BlockSizeOutOfRange { size: usize, dim: usize },

    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },

    #[error("slot assignment is not a suffix of the exponent vector: {0}")]
    InvalidSlots(String),

    #[error("step start s = {s} must exceed t = {t}")]
    SlotStartTooSmall { s: usize, t: usize },

    #[error("filter inapplicable to the empty arrangement")]
    FilterInapplicable,

    #[error("arrangement has {len} hyperplanes, capacity is {capacity}")]
    CapacityExceeded { len: usize, capacity: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate hyperplane: line {first} and line {second}")]
    DuplicateHyperplane { first: usize, second: usize },

    #[error("unknown catalog name {0:?}")]
    UnknownName(String),

    #[error("{0:?} is a facts-only entry; no defining forms are available")]
    FactsOnly(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("certificate format: {0}")]
    Certificate(String),

    #[error("constructed certificate failed re-verification: {0}")]
    Reverification(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
