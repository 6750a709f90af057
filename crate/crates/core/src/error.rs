use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate edge identifier {0}")]
    DuplicateEdge(EdgeId),
    #[error("duplicate vertex identifier {0}")]
    DuplicateVertex(VertexId),
    #[error("dangling endpoint: edge {edge} refers to unknown vertex {vertex}")]
    DanglingEndpoint { edge: EdgeId, vertex: VertexId },
    #[error("edge {0} does not belong to the host graph")]
    ForeignEdge(EdgeId),
    #[error("vertex {0} does not belong to the host graph")]
    ForeignVertex(VertexId),
    #[error("edge set is not a circuit of the host graph")]
    NotACircuit,
    #[error("vertex set does not induce a bipartition of the host graph")]
    NotABipartition,

    #[error("graph is not planar")]
    NonPlanar,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not 2-connected{}", .0.map(|v| format!(" (cut vertex {v})")).unwrap_or_default())]
    NotTwoConnected(Option<VertexId>),
    #[error("graph is not 3-connected (separator {{{}}})", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))]
    NotThreeConnected(Vec<VertexId>),
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("vertex {0} lies in a different component than the cycle")]
    DifferentComponent(VertexId),

    #[error("{0} is not on the cycle")]
    NotOnCycle(VertexId),
    #[error("edge {0} already lies on the cycle")]
    EdgeOnCycle(EdgeId),
    #[error("edge {0} does not join the two given vertices")]
    NotJoining(EdgeId),
    #[error("strict mode: the graph needs {0} adhesion edge(s) to be added")]
    ExtensionRequired(usize),

    #[error("budget exceeded: {what} (limit {limit})")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Whether this error signals a broken internal invariant rather than a
    /// rejected input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

macro_rules! invariant {
    ($($arg:tt)*) => {
        $crate::error::Error::Invariant(format!($($arg)*))
    };
}
pub(crate) use invariant;
