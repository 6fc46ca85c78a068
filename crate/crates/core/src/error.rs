use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("ratio undefined for a graph on fewer than 2 vertices")]
    TrivialGraph,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("{class} enumeration at n={n} exceeds the resource guard (max {max}); pass --override-guard to run it anyway")]
    Guard { class: String, n: usize, max: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
