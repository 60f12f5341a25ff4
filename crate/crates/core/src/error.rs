use thiserror::Error;

/// Errors raised for malformed input or violated preconditions.
///
/// Semantic failures of a certificate are not errors; verifiers report
/// them as violation lists instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("vertex set must not be empty")]
    EmptyVertexSet,
    #[error("vertex name `{0}` is already in use")]
    NameClash(String),
    #[error("cannot lift edge `{0}` with itself")]
    SameEdge(String),
    #[error("edges `{0}` and `{1}` do not share an endpoint")]
    NotIncident(String, String),
    #[error("edge `{edge}` is a loop at pivot `{pivot}`")]
    LoopAtPivot { edge: String, pivot: String },
    #[error("edges `{0}` and `{1}` share both endpoints; name the pivot explicitly")]
    AmbiguousPivot(String, String),
    #[error("edge `{0}` appears in more than one pair")]
    OverlappingPairs(String),
    #[error("source and sink sets both contain `{0}`")]
    OverlappingTerminals(String),
    #[error("source and sink sets must be non-empty")]
    EmptyTerminals,
    #[error("index {index} outside {low}..={high}")]
    IndexOutOfRange { index: usize, low: usize, high: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degree mismatch: `{v1}` has degree {d1}, `{v2}` has degree {d2}")]
    DegreeMismatch { v1: String, d1: usize, v2: String, d2: usize },
    #[error("vertex `{0}` carries a loop")]
    LoopAtSumVertex(String),
    #[error("pairing is not a bijection: {0}")]
    NotBijection(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unknown tree node `{0}`")]
    UnknownNode(String),
    #[error("invalid star minor model: {0}")]
    InvalidModel(String),
    #[error("found only {found} of {needed} edge-disjoint paths to the center")]
    PathShortfall { found: usize, needed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
