use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    /// The instance exceeds an enumeration guard. Callers get this instead
    /// of a truncated (and therefore possibly wrong) answer.
    #[error("instance too large: {0}")]
    Guard(String),

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MalformedHeader(String),
    MalformedEdge(String),
    VertexOutOfRange { vertex: usize, n: usize },
    DuplicateEdge(usize, usize),
    SelfLoop(usize),
    EdgeCount { declared: usize, found: usize },
    MalformedLabel(String),
    Missing(&'static str),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MalformedHeader(s) => write!(f, "malformed header `{s}`"),
            ParseErrorKind::MalformedEdge(s) => write!(f, "malformed edge line `{s}`"),
            ParseErrorKind::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range 1..={n}")
            }
            ParseErrorKind::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            ParseErrorKind::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            ParseErrorKind::EdgeCount { declared, found } => {
                write!(f, "header declares {declared} edges, found {found}")
            }
            ParseErrorKind::MalformedLabel(s) => write!(f, "malformed label line `{s}`"),
            ParseErrorKind::Missing(what) => write!(f, "missing {what}"),
        }
    }
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn guard(msg: impl Into<String>) -> Error {
    Error::Guard(msg.into())
}
