use thiserror::Error;

/// Errors raised by the library. Each variant maps to one failure family so
/// that the CLI and the C API can translate them into stable codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid color {color}: colors must be in 0..{r}")]
    InvalidColor { color: usize, r: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed ordered set partition: {0}")]
    MalformedPartition(String),

    #[error("invalid face: {0}")]
    InvalidFace(String),

    #[error("statistic `{0}` is only defined for r = 1")]
    UnsupportedStatistic(&'static str),

    #[error("monomial is not a multichain: {0}")]
    NotAMultichain(String),

    #[error("move not applicable: {0}")]
    NotApplicable(String),

    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),

    #[error("certification failure: {0}")]
    Certification(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("decomposition failure: {0}")]
    Decomposition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code: 1 usage, 2 resource limit, 3 verification failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit(_) => 2,
            Error::Certification(_) | Error::Decomposition(_) => 3,
            _ => 1,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
