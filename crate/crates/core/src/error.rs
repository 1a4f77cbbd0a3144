use thiserror::Error;

use crate::canonical::IndexPair;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("matrix is singular")]
    Singular,
    #[error("representation does not have Borel mold")]
    NotBorel,
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("no word set with unit pivots among words of length <= {max_len}")]
    SearchExhausted { max_len: usize },
    #[error("zero pivot at index {0}")]
    StarFailure(IndexPair),
    #[error("equivalence could not be decided: {0}")]
    Undecided(String),
    #[error("search space of {searched} candidates exceeds the limit of {limit}")]
    ResourceLimit { searched: u128, limit: u128 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Stable machine-readable identifier used in JSON error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::NotPrime(_) => "not_prime",
            Error::Singular => "singular",
            Error::NotBorel => "not_borel",
            Error::Unsupported(_) => "unsupported",
            Error::SearchExhausted { .. } => "search_exhausted",
            Error::StarFailure(_) => "star_failure",
            Error::Undecided(_) => "undecided",
            Error::ResourceLimit { .. } => "resource_limit",
            Error::Invariant(_) => "invariant",
        }
    }

    /// Process exit code: 1 domain failure, 2 input error, 3 resource limit.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::NotPrime(_) => 2,
            Error::ResourceLimit { .. } => 3,
            _ => 1,
        }
    }
}
