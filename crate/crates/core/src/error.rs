use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrime(u32),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("modulus must have {expected} coefficients, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("field of size {0} exceeds the supported maximum of 2^16")]
    FieldTooLarge(u64),
    #[error("element index {index} is out of range for GF({q})")]
    ElementOutOfRange { index: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generator rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
    #[error("dual of a full-space code is the zero code")]
    ZeroDual,
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("degree {nu} must be smaller than q = {q}")]
    DegreeOutOfRange { nu: usize, q: u32 },
    #[error("code is not cyclic")]
    NotCyclic,
    #[error("characteristic {p} divides the length {n}")]
    CharacteristicDividesLength { p: u32, n: usize },
    #[error("splitting field GF({q}^{t}) is too large")]
    ExtensionTooLarge { q: u32, t: u32 },
    #[error("invalid arguments: {0}")]
    BadArgs(String),
    #[error("r = {r} out of range 1..={max}")]
    BadRank { r: usize, max: usize },
    #[error("second code is not a subcode of the first")]
    NotNested,
    #[error("enumeration of {count} subspaces exceeds the work limit {limit}")]
    WorkLimitExceeded { count: String, limit: u64 },
    #[error("invalid hierarchy: {0}")]
    BadHierarchy(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}
