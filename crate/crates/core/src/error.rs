use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed `.kbc` or `.bg` text. Lines and columns are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("pattern with {vertices} vertices does not fit K_{{{n},{n}}} under any orientation")]
    PatternTooLarge { vertices: usize, n: usize },

    #[error("red count {r} is not in the tonality spectrum")]
    NotAchievable { r: usize },

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// An enumeration stopped early. `examined` counts the work done before
    /// the budget ran out.
    #[error("budget of {budget} exceeded after {examined} items")]
    BudgetExceeded { budget: u64, examined: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}
