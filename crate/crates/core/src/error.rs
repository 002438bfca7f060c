use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: VertexId, count: usize },

    #[error("no edge between {0} and {1}")]
    NoSuchEdge(VertexId, VertexId),

    #[error("vertex {0} is not reachable from the tree source")]
    Unreachable(VertexId),

    #[error("vertex {ancestor} is not an ancestor of {vertex}")]
    NotAncestor { ancestor: VertexId, vertex: VertexId },

    #[error("tree has {0} reachable vertices; a separator needs at least two")]
    TreeTooSmall(usize),

    #[error("edge {0} is not present in this oracle node")]
    EdgeNotInNode(EdgeId),

    #[error("vertex {0} is not present in this oracle node")]
    VertexNotInNode(VertexId),

    #[error("oracle was built for source {built}, not {requested}")]
    SourceMismatch { built: VertexId, requested: VertexId },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
