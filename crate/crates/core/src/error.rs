use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("edge {{{u},{v}}} has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge {{{v},{v}}} is a self-loop")]
    SelfLoop { v: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("{what} is unsupported above order {ceiling} (got {n})")]
    Unsupported {
        what: &'static str,
        n: usize,
        ceiling: usize,
    },

    #[error("{what} needs order at least {min}, got {n}")]
    TooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },

    #[error("{{{u},{v}}} is not an edge of the graph")]
    MissingEdge { u: usize, v: usize },

    #[error("invalid barnacle: {0}")]
    InvalidBarnacle(String),

    #[error("barnacle already has length 2, nothing to simplify")]
    AlreadyMinimal,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),

    #[error("family state does not follow the {family} schema: {reason}")]
    SchemaMismatch {
        family: &'static str,
        reason: String,
    },

    #[error("checkpoint rejected: {0}")]
    Checkpoint(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
