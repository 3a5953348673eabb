use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("graph has no base vertex")]
    MissingBase,
    #[error("vertex map has {got} entries but the domain has {expected} vertices")]
    MapSize { expected: usize, got: usize },
    #[error("vertex index {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("map is not a graph homomorphism")]
    NotHomomorphism,
    #[error("map does not send the base vertex to the base vertex")]
    NotBased,
    #[error("empty simplicial complex")]
    EmptyComplex,
    #[error("q = {q} is outside 0..={dim}")]
    QOutOfRange { q: usize, dim: usize },
    #[error("base simplex has dimension {dim}, below q = {q}")]
    BaseSimplexTooSmall { dim: usize, q: usize },
    #[error("base simplex {0} is not a face of the complex")]
    BaseSimplexMissing(String),
    #[error("walk steps from `{0}` to `{1}`, which are neither equal nor adjacent")]
    InvalidStep(String, String),
    #[error("walk must start and end at the base vertex")]
    NotALoop,
    #[error("empty walk")]
    EmptyWalk,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("direction {direction} is outside 1..={max}")]
    DirectionOutOfRange { direction: usize, max: usize },
    #[error("grid maps have different base values")]
    BaseMismatch,
    #[error("operation is undefined for {0}")]
    Undefined(&'static str),
    #[error("support does not fit in the search box")]
    BoxTooSmall,
    #[error("grid map is not a valid graph map into the target")]
    InvalidGrid,
    #[error("padding length {target} is shorter than the walk length {len}")]
    PadTooShort { len: usize, target: usize },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }
}
