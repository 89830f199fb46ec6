use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not among the supported primes")]
    UnsupportedCharacteristic(u64),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("differentials do not compose to zero at position {0}")]
    NotAComplex(usize),
    #[error("vertex count {0} out of range")]
    VertexCount(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("edge list parse error: {0}")]
    EdgeList(String),
    #[error("ideal literal parse error: {0}")]
    IdealLiteral(String),
    #[error("ambient variable counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("mask {mask:#b} does not fit {n} variables")]
    MaskOutOfRange { mask: u64, n: usize },
    #[error("{0} generators exceed the Taylor complex budget of {1}")]
    TaylorBudget(usize, usize),
    #[error("negative cohomological index {0}")]
    NegativeIndex(i64),
    #[error("index {0} outside 0..={1}")]
    IndexRange(i64, usize),
    #[error("the graph is not a forest")]
    NotAForest,
    #[error("table entries would need negative indices")]
    NegativeTableIndex,
    #[error("overlapping variable sets")]
    OverlappingVariables,
    #[error("the K-part of the splitting has a nontrivial Lyubeznik table")]
    NontrivialK,
    #[error("no splitting rule applies to {0}")]
    NoRuleApplies(String),
    #[error("closed form not applicable: {0}")]
    NotApplicable(String),
    #[error("the induced subgraph on {0} has no edges")]
    EdgelessFace(String),
    #[error("{0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
