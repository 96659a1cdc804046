use thiserror::Error;

/// Errors raised by the correspondence maps and their oracles.
///
/// `Domain` and `Unsupported` are caller mistakes. `TheoremViolation` and
/// `Consistency` mean an identity that must hold for every valid input
/// failed; in a correct build they never fire.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("group enumeration exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn violation(msg: impl Into<String>) -> Self {
        Error::TheoremViolation(msg.into())
    }

    /// True for failures that indicate a broken invariant rather than bad input.
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_) | Error::Consistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
