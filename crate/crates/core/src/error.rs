use thiserror::Error;

/// Errors raised by the core library. Vertex indices inside messages are
/// 1-based, matching the external interfaces.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix admits no positive skew-symmetrizer")]
    NotSymmetrizable,
    #[error("symmetrizer does not skew-symmetrize the matrix")]
    BadSymmetrizer,
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("matrix is not pure: entry ({0},{1}) mixes Z and tZ")]
    NotPure(usize, usize),
    #[error("positive 3-cycle condition fails at k={k} for i={i}, j={j}")]
    PositiveThreeCycleViolation { i: usize, j: usize, k: usize },
    #[error("invalid arrow {src}->{tgt}: {reason}")]
    InvalidArrow { src: usize, tgt: usize, reason: String },
    #[error("quiver is not simple: several arrows join {0} and {1}")]
    NotSimple(usize, usize),
    #[error("incomparable antiparallel arrows between {0} and {1}")]
    Incomparable(usize, usize),
    #[error("value {0} does not fit a machine integer")]
    Overflow(String),
    #[error("search exceeded budget after exploring {explored} nodes")]
    BudgetExceeded { explored: usize },
    #[error("cycle is not dangerous")]
    NotDangerous,
    #[error("invalid Dynkin type {0}")]
    InvalidDynkinType(String),
    #[error("not of the required shape: {0}")]
    Shape(String),
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),
    #[error("not mutation Dynkin")]
    NotMutationDynkin,
    #[error("unknown cycle shape on vertices {0:?}")]
    UnknownCycleShape(Vec<usize>),
    #[error("linear algebra: {0}")]
    Linear(String),
    #[error("companion basis check failed: {0}")]
    CompanionBasis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
