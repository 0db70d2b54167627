use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("graph is not planar")]
    NotPlanar,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has {n} vertices, at least {min} are required")]
    TooSmall { n: usize, min: usize },

    #[error("graph is not maximal planar: {m} edges, expected {expected}")]
    NotMaximal { m: usize, expected: usize },

    #[error("outer face is not a triangle")]
    OuterFaceNotTriangle,

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("vertex {vertex} lies on non-incident edge ({u}, {v})")]
    VertexOnEdge { vertex: usize, u: usize, v: usize },

    #[error("stretch factors ({phi_x}, {phi_y}) are below the required ({need_x}, {need_y})")]
    FactorsTooSmall {
        phi_x: i64,
        phi_y: i64,
        need_x: i64,
        need_y: i64,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("edge ({u}, {v}) spans {span} positions, more than the bandwidth {b}")]
    InvalidOrdering {
        u: usize,
        v: usize,
        span: usize,
        b: usize,
    },

    #[error("ordering is not a permutation of the vertices")]
    NotPermutation,

    #[error("input of size {n} exceeds the supported limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("vertices {0} and {1} were rounded to the same grid point")]
    DegenerateRounding(usize, usize),

    #[error("construction failed certification: {0}")]
    CertificationFailed(String),

    #[error("vertices {0} and {1} share a position")]
    DuplicatePosition(usize, usize),

    #[error("segment endpoints coincide")]
    DegenerateSegment,

    #[error("no position for vertex {0}")]
    MissingVertexPosition(usize),

    #[error("coordinate {0} exceeds the supported magnitude 2^30")]
    CoordinateTooLarge(i64),

    #[error("no valid drawing found within the search extent")]
    NotFound,

    #[error("offset forest contains a cycle or an unreachable vertex")]
    CyclicForest,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
