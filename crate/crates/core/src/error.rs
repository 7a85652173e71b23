use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("base field of order {0} is too large (at most 256 elements supported)")]
    FieldTooLarge(u64),
    #[error("extension degree {0} is outside the supported range 1..={max}", max = crate::field::MAX_EXT_DEGREE)]
    DegreeOutOfRange(usize),
    #[error("polynomial is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation is undefined for the zero element")]
    ZeroElement,
    #[error("extension degree m = {0} is odd, F_(q^2) is not a subfield")]
    MOdd(usize),
    #[error("element is not a generator of the extension")]
    NotGenerator,
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("enumeration needs {required} projective points, limit is {limit}")]
    EnumerationTooLarge { required: u128, limit: u64 },
    #[error("code is degenerate")]
    Degenerate,
    #[error("code has full dimension k = n, its dual is zero")]
    FullDimension,
    #[error("generator matrix has rank {rank} < k = {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("psi({u}, {v}) requires u >= v >= 2")]
    BadArity { u: usize, v: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("wrong regime: {0}")]
    BadRegime(String),
    #[error("block length {len} must lie in 1..={m}")]
    BadLength { len: usize, m: usize },
    #[error("invalid block profile: {0}")]
    ProfileInvalid(String),
    #[error("extension degree m = {0} is too small")]
    MTooSmall(usize),
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("subspace is not closed under F_(q^m)-scaling")]
    NotFqmSubspace,
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
