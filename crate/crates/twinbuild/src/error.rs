use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank: {0}")]
    InvalidRank(String),
    #[error("invalid length weights: {0}")]
    InvalidWeights(String),
    #[error("group is not spherical (infinite)")]
    NotSpherical,
    #[error("unsupported Coxeter data: {0}")]
    Unsupported(String),
    #[error("generator {0} is not in the index set")]
    BadGenerator(usize),
    #[error("degenerate lattice: generator matrix is not invertible over the Laurent ring")]
    DegenerateLattice,
    #[error("side mismatch: {0}")]
    SideMismatch(String),
    #[error("rank error: {0}")]
    Rank(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("determinant is not 1")]
    NotSpecial,
    #[error("matrix has non-constant entries")]
    NonConstant,
    #[error("chambers are not opposite")]
    NotOpposite,
    #[error("word is not reduced")]
    NotReduced,
    #[error("Weyl distance mismatch: {0}")]
    DistanceMismatch(String),
    #[error("matrix is not a projector")]
    NotProjector,
    #[error("loop is not unitary (g g^# != 1)")]
    NotUnitary,
    #[error("subspace is trivial (dimension 0 or n)")]
    TrivialSubspace,
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("operator is not in the image: {0}")]
    NotInImage(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
