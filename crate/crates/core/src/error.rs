use thiserror::Error;

/// Errors produced by the library.
///
/// `Invariant` marks a broken internal consistency check (empty interval
/// intersection, odd endpoint, non-divisible sum, ...). Everything else is a
/// caller error.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree d={d} is out of range (need {min} <= d <= {max})")]
    DegreeOutOfRange { d: usize, min: usize, max: usize },

    #[error("k={k} is out of range for d={d} (need 1 <= k <= {max})")]
    KOutOfRange { d: usize, k: usize, max: usize },

    #[error("j={j} is out of range for d={d} (need 2 <= j <= d-2)")]
    JOutOfRange { d: usize, j: usize },

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("parse error at position {position}: {reason}")]
    Parse { position: usize, reason: String },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("not a degenerate both-exit event: {0}")]
    NotBothExit(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_invariant(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Build an [`Error::Invariant`] with `format!` syntax.
macro_rules! invariant {
    ($($arg:tt)*) => {
        $crate::error::Error::Invariant(format!($($arg)*))
    };
}
pub(crate) use invariant;
