use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("chart has rank {chart} but {points} points were given (expected rank + 1)")]
    ChartRankMismatch { chart: usize, points: usize },

    #[error("point {0} is not in the lattice of the chart")]
    NotInLattice(String),

    #[error("zero scalar in monomial substitution")]
    ZeroScalar,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("polytope is not full-dimensional (dimension {dim} in ambient rank {rank})")]
    NotFullDimensional { dim: usize, rank: usize },

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("polyhedron is empty")]
    EmptyPolytope,

    #[error("polytope has a non-lattice vertex")]
    NonLatticeVertex,

    #[error("face dimension {requested} out of range (polytope has dimension {dim})")]
    FaceDimension { requested: usize, dim: usize },

    #[error("not a facet: {0}")]
    NotAFacet(String),

    #[error("not a face of the Newton polytope: {0}")]
    NotAFace(String),

    #[error("points are not collinear")]
    NotCollinear,

    #[error("support is not unimodular")]
    NonUnimodularSupport,

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("wrong support shape: {0}")]
    WrongSupport(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("family parameters out of range: {0}")]
    FamilyParameters(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
