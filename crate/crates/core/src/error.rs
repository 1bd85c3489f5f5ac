use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("group order exceeds the configured cap of {cap} (reached {reached})")]
    OrderCapExceeded { cap: usize, reached: usize },

    #[error("element is not a member of the ambient group")]
    NotInGroup,

    #[error("modulus must be even, got n = {0}")]
    OddModulus(u64),

    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("This formula is for odd k. (got k = {0})")]
    EvenK(u64),

    #[error("k must be positive")]
    ZeroK,

    #[error("{what}: {value} exceeds the configured limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("e^{u}.{v} is not a quasipolarity of Z/{n}Z")]
    NotQuasipolarity { n: u64, u: u64, v: u64 },

    #[error("invalid affine map: v = {v} is not a unit mod {n}")]
    NotAUnit { n: u64, v: u64 },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("divisibility failure in {what}: {total} is not divisible by {divisor}")]
    Divisibility {
        what: &'static str,
        total: String,
        divisor: String,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("cache I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("cache format error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for this error: 2 for usage and precondition
    /// violations, 1 for failed checks and internal inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Divisibility { .. }
            | Error::Inconsistency(_)
            | Error::Io(_)
            | Error::Json(_) => 1,
            _ => 2,
        }
    }
}
