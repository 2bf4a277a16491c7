use thiserror::Error;

/// Every failure mode surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order/size (n={n}, m={m}): need n >= 3 and n-1 <= m <= min(floor(3n/2), n(n-1)/2) = {max_m}")]
    InvalidOrderSize { n: u64, m: u64, max_m: u64 },

    #[error("point has a non-integer component: {0}")]
    NonInteger(String),

    #[error("derived count {name} is negative ({value})")]
    NegativeDerived { name: &'static str, value: String },

    #[error("degree count {name} is not an integer")]
    NonIntegerDegreeCount { name: &'static str },

    #[error("degree counts sum to {got}, expected n = {expected}")]
    SumMismatch { expected: u64, got: u64 },

    #[error("index coefficient {name} is not finite")]
    NonFiniteCoefficient { name: &'static str },

    #[error("(n={n}, m={m}) lies outside the general regime max(12, n-1) <= m <= floor((3n-3)/2)")]
    OutOfRegime { n: u64, m: u64 },

    #[error("vertex family {family} is not realizable at (n={n}, m={m})")]
    ConditionViolated { family: String, n: u64, m: u64 },

    #[error("engine mismatch at (n={n}, m={m}): {detail}")]
    EngineMismatch { n: u64, m: u64, detail: String },

    #[error("non-integer vertex {point} at (n={n}, m={m})")]
    NonIntegerVertex { n: u64, m: u64, point: String },

    #[error("point {point} is not realizable at (n={n}, m={m}); failed {failed:?}")]
    NotRealizable {
        n: u64,
        m: u64,
        point: String,
        failed: Vec<String>,
    },

    #[error("could not construct a witness for {point} at (n={n}, m={m})")]
    ConstructionFailed { n: u64, m: u64, point: String },

    #[error("oracle limit exceeded: n={n} is above the cap {cap}")]
    LimitExceeded { n: u64, cap: u64 },

    #[error("unknown index {0:?}")]
    UnknownIndex(String),

    #[error("duplicate index name {0:?}")]
    DuplicateIndex(String),

    #[error("graph parse error: {0}")]
    GraphParse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
