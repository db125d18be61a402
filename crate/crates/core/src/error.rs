//! Crate-wide error type.

/// Errors reported by construction and solving operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A coordinate was NaN or infinite.
    #[error("non-finite coordinate in {0}")]
    NonFinite(&'static str),

    /// Triangle vertices are (nearly) collinear or coincident.
    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(&'static str),

    /// The two anchor points of a replication coincide.
    #[error("replication anchors coincide")]
    CoincidentAnchors,

    /// A robot's target coincides with its position while the common travel
    /// distance is nonzero, leaving the move direction undefined.
    #[error("target coincides with robot {0} but travel is nonzero")]
    CoincidentTarget(usize),

    /// No robot moves, so the focal point is undefined (any point qualifies).
    #[error("no robot moves; focal point undefined")]
    NoMovement,

    /// An angle triple violates the ordered-interior-angle invariants.
    #[error("invalid angle triple: {0}")]
    InvalidAngles(&'static str),

    /// The simulation did not converge within the configured cycle budget.
    #[error("cycle limit of {0} exceeded")]
    CycleLimitExceeded(u64),

    /// A permutation array is not a bijection on {0,1,2}.
    #[error("index array is not a permutation of {{0,1,2}}")]
    NotAPermutation,
}

pub type Result<T> = std::result::Result<T, Error>;
