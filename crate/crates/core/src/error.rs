use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the 64-vertex cap")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("alpha must be finite and nonzero, got {0}")]
    InvalidAlpha(f64),
    #[error("f is undefined at degree {0}")]
    FunctionUndefinedAtDegree(usize),
    #[error("vertex {0} is isolated and alpha is negative")]
    IsolatedVertexWithNegativeAlpha(usize),
    #[error("k = {k} out of range for order {n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("i = {i} out of range (upper bound {max})")]
    IOutOfRange { i: f64, max: f64 },
    #[error("degree sequence has odd length {0}")]
    OddLength(usize),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("no sign change of {which} found for alpha = {alpha}")]
    NoRootFound { which: &'static str, alpha: f64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("bipartition is unbalanced ({x} vs {y})")]
    NotBalanced { x: usize, y: usize },
    #[error("order {n} exceeds the oracle limit {limit}")]
    TooLargeForOracle { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
