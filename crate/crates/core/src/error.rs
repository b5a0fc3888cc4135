use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {symbol} exceeds rank {rank}")]
    RankViolation { symbol: u32, rank: u32 },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} exceeded cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("input is not standard: {0}")]
    NotStandard(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("operation requires a non-empty tree")]
    EmptyTree,

    #[error("locator {0} does not address a node of the tree")]
    InvalidLocator(String),

    #[error("vertex {0} is not in the component")]
    NotInComponent(String),

    #[error("graph is disconnected ({} parts)", parts.len())]
    Disconnected { parts: Vec<Vec<String>> },

    /// A proof obligation that should hold by construction failed. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by malformed or out-of-range user input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::RankViolation { .. }
                | Error::RankMismatch { .. }
                | Error::Parse(_)
                | Error::NotStandard(_)
                | Error::SizeMismatch { .. }
                | Error::EmptyTree
                | Error::InvalidLocator(_)
                | Error::NotInComponent(_)
        )
    }
}
