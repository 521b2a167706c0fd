use thiserror::Error;

/// Errors raised by code construction, enumeration and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field order q = {0} (expected 2, 3 or 4)")]
    UnsupportedField(u32),

    #[error("cannot parse {token:?} as an element of F{q}")]
    ParseElement { token: String, q: u8 },

    #[error("malformed {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("division by zero in F{0}")]
    DivisionByZero(u8),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("field mismatch: F{left} vs F{right}")]
    FieldMismatch { left: u8, right: u8 },

    #[error("code length must be even, got n = {0}")]
    OddLength(usize),

    #[error("generator rows have rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },

    #[error("enumeration budget exceeded: {q}^{k} messages exceeds the limit of {q}^{max_k}")]
    BudgetExceeded { q: u8, k: usize, max_k: usize },

    #[error("search space of {what} exceeds the budget of {limit} candidates")]
    SearchBudgetExceeded { what: String, limit: u128 },

    #[error("equivalence undecided: search exceeded the cap of {0} nodes")]
    Undecided(u64),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
