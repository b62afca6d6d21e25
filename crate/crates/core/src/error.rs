use std::fmt;

use thiserror::Error;

/// Which precondition of [`crate::cheeger::group_upper_bound`] failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    /// The two groups share a vertex.
    Overlap(usize),
    /// One of the groups is empty.
    EmptyGroup,
    /// The groups have different volumes.
    UnequalVolume { a: usize, b: usize },
    /// Neither group contains an adjacent pair.
    NoInternalEdge,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Overlap(v) => write!(f, "groups overlap at vertex {v}"),
            Hypothesis::EmptyGroup => write!(f, "a group is empty"),
            Hypothesis::UnequalVolume { a, b } => {
                write!(f, "group volumes differ ({a} vs {b})")
            }
            Hypothesis::NoInternalEdge => write!(f, "no adjacent pair inside either group"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} has no incident edge")]
    IsolatedVertex(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{what} needs at least {min} vertices, got {n}")]
    TooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("vector is not on the unit sphere of the weighted norm")]
    NotOnX,

    #[error("zero vector")]
    ZeroVector,

    #[error("pattern is identically zero")]
    AllZeroPattern,

    #[error("pattern entries must be -1, 0 or 1 with first nonzero entry 1")]
    NonCanonicalPattern,

    #[error("nodal level {0} is not positive")]
    NonpositiveLevel(usize),

    #[error("nodal decomposition does not belong to this graph")]
    InvalidDecomposition,

    #[error("vector is constant")]
    ConstantVector,

    #[error("graph with {n} vertices exceeds the enumeration limit {max_n}")]
    TooLarge { n: usize, max_n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),

    #[error("rational arithmetic overflow")]
    Overflow,

    #[error("Jacobi iteration did not converge after {0} sweeps")]
    ConvergenceFailure(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
