use thiserror::Error;

/// Errors raised by graph construction, analysis and the embedding builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside the domain of the requested family or operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Eccentricity is undefined because the graph is disconnected.
    #[error("infinite eccentricity: graph is disconnected")]
    Disconnected,

    /// The input does not satisfy an operation's stated precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Malformed argument such as a non-injective vertex map.
    #[error("argument error: {0}")]
    Argument(String),

    /// A builder produced a host that failed its own verification.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A text-format decoding error, positioned at the offending byte (graph6) or line (edge list).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {location} {position}: {message}")]
pub struct ParseError {
    pub location: &'static str,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at_byte(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            location: "byte",
            position,
            message: message.into(),
        }
    }

    pub(crate) fn at_line(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            location: "line",
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
