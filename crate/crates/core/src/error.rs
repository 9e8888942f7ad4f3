use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("matrix is singular")]
    Singular,
    #[error("side mismatch")]
    SideMismatch,
    #[error("row space is not contained in the factor's row space")]
    NotContained,
    #[error("submodule is not principal")]
    NotPrincipal,
    #[error("matrix is not a member of the nest module")]
    NotInNest,
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("invalid bimodule descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("zero generator")]
    ZeroGenerator,
    #[error("rank {rank} exceeds the {rows} available rows")]
    RankOverflow { rank: usize, rows: usize },
    #[error("element budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Parse failures are usage errors; everything else is a mathematical
    /// precondition failure.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
