use thiserror::Error;

/// Errors raised when building or querying graphs, colorings and list
/// assignments.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("duplicate arc ({from}, {to})")]
    DuplicateArc { from: usize, to: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} is uncolored")]
    PartialColoring { vertex: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has an empty list")]
    EmptyList { vertex: usize },
    #[error("declared k = {declared} but the smallest list has {actual} colors")]
    ListSizeMismatch { declared: usize, actual: usize },
    #[error("classes do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("class {class} contains a directed cycle")]
    CyclicClass { class: usize },
    #[error("arc ({from}, {to}) lies inside one side of the bipartition")]
    ArcWithinSide { from: usize, to: usize },
    #[error("arc probability parameter {0} outside [0, 1/2]")]
    InvalidProbability(f64),
}
