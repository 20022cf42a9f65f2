use thiserror::Error;

/// Errors raised while decoding or encoding graph6 text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("long-form graph6 header at offset {offset} is not supported (n > 62)")]
    LongForm { offset: usize },
    #[error("graph6 string truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage starting at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("non-zero padding bits in byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph with {n} vertices cannot be written in short-form graph6 (max 62)")]
    Unsupported { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has {n} vertices, the limit here is {max}")]
    TooLarge { n: usize, max: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),
    #[error("vertex set contains vertices outside the graph")]
    NotASubset,
    #[error("vertex set is not a connected component")]
    NotAComponent,
    #[error("vertex {0} is isolated; no total dominating set exists")]
    IsolatedVertex(usize),
    #[error("graph has a clique component")]
    CliqueComponent,
    #[error("set is not a total dominating set: vertex {undominated} has no neighbor in it")]
    NotTotalDominating { undominated: usize },
    #[error("total dominating set is not minimal: vertex {vertex} has no private neighbor")]
    NotMinimal { vertex: usize },
    #[error("vertex {0} is not in the set")]
    NotInSet(usize),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("invalid parallel-paths decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal proof invariant violated: {0}")]
    ProofViolation(String),
    #[error("time budget exhausted")]
    Timeout,
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
