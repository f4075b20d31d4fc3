use alloc::string::String;

/// Errors raised by lattice, reflection-group and surface operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("gram matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("operation requires integer gram entries, found a symbolic entry")]
    SymbolicEntry,

    #[error("lattice is degenerate (radical rank {radical_rank})")]
    Degenerate { radical_rank: usize },

    #[error("lattice is odd")]
    OddLattice,

    #[error("lattice is not definite")]
    NotDefinite,

    #[error("lattice is not negative definite")]
    NotNegativeDefinite,

    #[error("lattice has no positive direction")]
    NoPositiveDirection,

    #[error("a coordinate bound is required for indefinite or degenerate lattices")]
    BoundRequired,

    #[error("matrix is not an isometry of the lattice")]
    NotAnIsometry,

    #[error("vector is isotropic")]
    IsotropicVector,

    #[error("reflection is not integral on the lattice")]
    NotIntegral,

    #[error("vector {index} has square {square}, expected -2")]
    NotARoot { index: usize, square: String },

    #[error("vector {index} occurs twice")]
    DuplicateVector { index: usize },

    #[error("empty vector set")]
    EmptySet,

    #[error("isometry is not in the root reflection group (descent stalled after {steps} steps)")]
    NotInGroup { steps: usize },

    #[error("lattice does not split as radical plus the given summand: {0}")]
    DecompositionFailed(String),

    #[error("multiplicity {0} is below 2")]
    InvalidMultiplicity(i64),

    #[error("invalid surface data: {0}")]
    InvalidSpec(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("search failed within coordinate bound {bound}: {what}")]
    SearchFailed { bound: u32, what: String },

    #[error("could not parse polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
