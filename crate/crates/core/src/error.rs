use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex sets live on different ambient sizes ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("vertex {vertex} is outside 1..={ambient}")]
    VertexOutOfRange { vertex: usize, ambient: usize },

    #[error("{0} vertices exceeds the supported maximum of 64")]
    TooManyVertices(usize),

    #[error("edges must be nonempty")]
    EmptyEdge,

    #[error("edge {0} is not an edge of the graph")]
    EdgeAbsent(String),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("graph edges must have exactly two vertices, got {0}")]
    NotAGraphEdge(usize),

    #[error("duplicate edge {0}")]
    DuplicateEdge(String),

    #[error("edge {smaller} is contained in edge {larger}; clutter edges must form an antichain")]
    NotAntichain { smaller: String, larger: String },

    #[error("set {0} is not stable")]
    NotStable(String),

    #[error("zero ideal: the clutter has no edges")]
    ZeroIdeal,

    #[error("graph has isolated vertices {0:?}")]
    IsolatedVertices(Vec<usize>),

    #[error("monomial ideal is not squarefree")]
    NotSquarefree,

    #[error("prime {0} is not an associated prime")]
    NotAssociated(String),

    #[error("empty prime ideal")]
    EmptyPrime,

    #[error("power must be at least 1")]
    ZeroPower,

    #[error("face {0} is not in the complex")]
    FaceNotInComplex(String),

    #[error("void complex has no faces")]
    VoidComplex,

    #[error("{0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal cross-check failed for {check}: {detail}")]
    RouteDisagreement { check: &'static str, detail: String },
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
