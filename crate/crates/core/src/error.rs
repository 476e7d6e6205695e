use thiserror::Error;

use crate::graph::VertexLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(VertexLabel),
    #[error("invalid vertex label: {0}")]
    InvalidLabel(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexLabel),
    #[error("vertex index {0} out of range")]
    UnknownVertexIndex(usize),
    #[error("self-loop at {0}")]
    SelfLoop(VertexLabel),
    #[error("edge {0} -- {1} given twice")]
    DuplicateEdge(VertexLabel, VertexLabel),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("graphs are not on the same vertex set")]
    VertexSetMismatch,

    #[error("invalid vertex set W: {0}")]
    InvalidW(String),
    #[error("vertex {0} belongs to W")]
    VertexInW(VertexLabel),
    #[error("graph order {order} exceeds the search cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("[{m}]^{k} is too large to materialize")]
    SizeOverflow { k: usize, m: u32 },
    #[error("index {index} is outside [{k}]")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("wrong vertex set: {0}")]
    WrongVertexSet(String),
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("cross edge mismatch between w_{index} and {vertex}")]
    CrossEdgeMismatch { index: usize, vertex: VertexLabel },

    #[error("{vertex} is not in the domain of epsilon_{index}")]
    VertexNotEligible { index: usize, vertex: VertexLabel },
    #[error("enumeration of {count} candidates exceeds the cap {cap}")]
    EnumerationCapExceeded { count: u128, cap: u128 },
    #[error("lattice graph is not minimal")]
    NotMinimal,
    #[error("graph is not a member of the family: {0}")]
    NotMember(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Whether this error means a configured size cap was hit.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. }
                | Error::EnumerationCapExceeded { .. }
                | Error::SizeOverflow { .. }
        )
    }
}
