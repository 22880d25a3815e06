use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("rotation system: {0}")]
    Rotation(String),
    #[error("vertex count {0} exceeds the supported maximum of {1}")]
    TooManyVertices(usize, usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid multipartite part sizes: {0}")]
    InvalidParts(String),
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown graph family '{0}'")]
    UnknownFamily(String),
    #[error("permutation of length {got} does not match graph on {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("exact canonicalization supports at most {max} vertices, got {n}")]
    CanonicalTooLarge { n: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("need ≥ 2 vertices")]
    TooFewVertices,
    #[error("triple vertices must be pairwise distinct: ({0}, {1}, {2})")]
    DegenerateTriple(usize, usize, usize),
    #[error("line endpoints must be distinct (got {0} twice)")]
    SameEndpoints(usize),
    #[error("diameter {found} does not satisfy the requirement: {required}")]
    DiameterPrecondition { found: u32, required: &'static str },
    #[error("({0}, {1}) is not a diametral pair")]
    NotDiametral(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("not a plane embedding: {0}")]
    NotPlane(String),
    #[error("enumeration is built in only for n ≤ {max} (got {n}); use an external graph6 stream")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("edge probability must lie strictly between 0 and 1 (got {0})")]
    InvalidProbability(String),
    #[error("no samples: retry budget exhausted before any locally connected graph was found")]
    NoSamples,
    #[error("{0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
