use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("edge id {id} out of range (graph has {m} edges)")]
    EdgeOutOfRange { id: usize, m: usize },

    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),

    #[error("part sizes must be non-empty and positive")]
    InvalidPartSizes,

    #[error("vertex subset must be non-empty")]
    EmptySubset,

    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("built-in enumeration supports at most {max} vertices, requested {requested}")]
    CorpusTooLarge { requested: usize, max: usize },

    #[error("corpus: {0}")]
    Corpus(String),

    #[error("relation: {0}")]
    Relation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
