use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("matrix is not in the span of the sp basis: {0}")]
    NotInSpan(String),
    #[error("not a positive root: {0}")]
    NotPositiveRoot(String),
    #[error("degree {degree} out of range for {what} (allowed {min}..={max})")]
    DegreeOutOfRange {
        what: &'static str,
        degree: usize,
        min: usize,
        max: usize,
    },
    #[error("subspace is not invariant under {0}")]
    NotInvariant(String),
    #[error("H_0 is not a generator of the Hamiltonian algebra")]
    ZeroGenerator,
    #[error("{0}")]
    KindMismatch(String),
    #[error("seed grade {0} lies outside the box")]
    SeedOutsideBox(String),
    #[error("r + alpha is zero, so the wedge subspace is zero")]
    DegenerateShift,
    #[error("radius must be positive")]
    InvalidRadius,
    #[error("{0}")]
    Parse(String),
}
