use thiserror::Error;

use crate::embedding::Vid;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("graph needs at least two vertices, got {0}")]
    TooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} does not exist")]
    UnknownVertex(Vid),
    #[error("self loop at {0}")]
    SelfLoop(Vid),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vid, Vid),
    #[error("rotation of {0} lists {1} but not the other way round")]
    Asymmetric(Vid, Vid),
    #[error("rotation system is not planar")]
    NotPlanar,
    #[error("no face matches the requested outer cycle")]
    NoSuchFace,
    #[error("vertex {0} is not on the face")]
    NotOnFace(Vid),
    #[error("{0}-{1} is not an outer edge")]
    NotBoundaryEdge(Vid, Vid),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vid, Vid),
    #[error("{0} is not a cut vertex")]
    NotCutVertex(Vid),
    #[error("{0}-{1} is not a bridge")]
    NotBridge(Vid, Vid),
    #[error("{0}-{1} does not separate the graph")]
    NotSeparating(Vid, Vid),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the exact-search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("constraints cannot be met")]
    Infeasible,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad planar code header")]
    BadHeader,
    #[error("truncated input")]
    Truncated,
    #[error("record with zero vertices")]
    EmptyRecord,
    #[error("neighbour index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("planar code holds at most 255 vertices, graph has {0}")]
    TooLarge(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid embedding: {0}")]
    Embedding(#[from] EmbeddingError),
}

#[derive(Debug, Error)]
pub enum GenError {
    #[error("family {family} has no member for k = {k}")]
    NoMember { family: &'static str, k: usize },
    #[error("search for the {0} building block found nothing")]
    SearchFailed(&'static str),
    #[error("construction broke its contract: {0}")]
    Contract(String),
    #[error("invalid embedding: {0}")]
    Embedding(#[from] EmbeddingError),
}
