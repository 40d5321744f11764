use thiserror::Error;

use crate::sgraph::Vertex;

/// Errors produced by graph construction, parsing and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("pair {0}-{1} carries more than two parallel edges or two of the same sign")]
    BadParallelPair(Vertex, Vertex),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("target graph has no vertices")]
    EmptyTarget,
    #[error("subdividing a multigraph into paths of length 1 keeps parallel edges")]
    SimplicityViolated,
    #[error("identification leaves a negative digon between {0} and {1}")]
    CreatesNegativeDigon(Vertex, Vertex),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
    #[error("census order {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
