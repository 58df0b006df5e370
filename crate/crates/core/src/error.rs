use thiserror::Error;

use crate::poset::Violation;

pub type Result<T> = std::result::Result<T, ChainmailError>;

#[derive(Debug, Error)]
pub enum ChainmailError {
    #[error("invalid poset: {0}")]
    InvalidPoset(Violation),

    #[error("element {index} out of range for a poset with {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("not a complete lattice")]
    NotCompleteLattice,

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A resource guard tripped: the requested structure is too large.
    #[error("{what} exceeds the configured limit ({actual} > {limit})")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("not a topology: {0}")]
    NotATopology(String),

    #[error("malformed input: {0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ChainmailError {
    pub fn is_limit(&self) -> bool {
        matches!(self, ChainmailError::LimitExceeded { .. })
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        ChainmailError::Precondition(msg.into())
    }
}
