use thiserror::Error;

/// Errors for construction, validation and parsing.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),
    #[error("edge {index} has {found} vertices, expected {expected}")]
    WrongEdgeSize {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("edge {index} contains vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { index: usize, vertex: u32, n: usize },
    #[error("edge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: u32 },
    #[error("duplicate edge at canonical positions {first} and {second}")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge list is not in canonical order at position {position}")]
    NotCanonical { position: usize },

    #[error("weight vector has {found} entries, hypergraph has {expected} edges")]
    WeightLengthMismatch { found: usize, expected: usize },
    #[error("weight {weight} at edge {index} outside 1..={w_max}")]
    WeightOutOfRange {
        index: usize,
        weight: u32,
        w_max: u32,
    },
    #[error("weight bound must be at least 1")]
    ZeroWeightBound,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported bound 64")]
    FieldTooLarge(u64),
    #[error("cannot extend a {uniformity}-uniform blow-up to r = {target}")]
    ExtensionTooSmall { uniformity: usize, target: usize },
    #[error("uniformity for the reduction must be at least 3, got {0}")]
    ReductionUniformity(usize),
    #[error("reduction source must be a graph (r = 2), got r = {0}")]
    ReductionSourceNotGraph(usize),

    #[error("certificate requires w <= q^2+q = {max}, got {w}")]
    CertificateWeightTooLarge { w: u32, max: u32 },
    #[error("blow-up structure mismatch: {0}")]
    StructureMismatch(String),

    #[error("sampling requires r <= n, got r = {r}, n = {n}")]
    SampleUniformity { r: usize, n: usize },
    #[error("probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("expectation formula requires r <= n-2, got r = {r}, n = {n}")]
    ExpectationDomain { r: usize, n: usize },

    #[error("tripartite parts must have equal sizes, got {0:?}")]
    UnequalParts(Vec<usize>),
    #[error("vertex sets do not partition 0..{n}")]
    BadPartition { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
