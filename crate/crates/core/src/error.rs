use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph has {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("{op} supports at most {max} vertices, got {n}")]
    ScaleLimit { op: &'static str, n: usize, max: usize },

    #[error("vertex {0} is out of range")]
    InvalidVertex(usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a chordless path: {0}")]
    NotAPath(String),

    #[error("not a hole: {0}")]
    NotAHole(String),

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
