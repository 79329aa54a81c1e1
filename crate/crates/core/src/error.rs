use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration over {n} atoms exceeds the cap of {cap}")]
    EnumerationTooLarge { n: usize, cap: usize },

    #[error("operands live on different ground sets")]
    GroundMismatch,

    #[error("ground sets overlap")]
    OverlappingGrounds,

    #[error("the pieces do not partition the ground set")]
    NotAPartition,

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("too many atoms: {0} (at most 32 supported)")]
    TooManyAtoms(usize),

    #[error("invalid linear order: {0}")]
    InvalidOrder(String),

    #[error("invalid set composition: {0}")]
    InvalidComposition(String),

    #[error("album is empty")]
    EmptyAlbum,

    #[error("interval ({x}, {y}) out of range for k = {k}")]
    IntervalOutOfRange { x: usize, y: usize, k: usize },

    #[error("set function is not submodular: {0}")]
    NotSubmodular(String),

    #[error("set function is not the tight support function of its base polytope")]
    NotTight,

    #[error("vertex set is not a face of the polytope")]
    NotAFace,

    #[error(
        "the cancellation-free formula needs dim p = n - 1 (got dim {dim}, n = {n}); use the takeuchi method"
    )]
    DimensionHypothesis { dim: usize, n: usize },

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("{0} is not a face of the complex")]
    NotAComplexFace(String),

    #[error("subset is not an initial segment of the order")]
    NotAPrefix,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
