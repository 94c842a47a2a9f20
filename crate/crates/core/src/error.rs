use thiserror::Error;

use crate::degree::DegreeVec;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(DegreeVec, DegreeVec),
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("degree underflow in variable {0}")]
    DegreeUnderflow(usize),
    #[error("exponent {exponent:?} exceeds degree {degree}")]
    DegreeOverflow { exponent: Vec<u32>, degree: DegreeVec },
    #[error("degree {0} exceeds the configured limits")]
    TooLarge(DegreeVec),
    #[error("operator dimension {0} exceeds the dense-matrix guard")]
    DimensionGuard(u128),
    #[error("projective point has a (0,0) coordinate")]
    DegeneratePoint,
    #[error("singular Möbius map (determinant zero)")]
    Singular,
    #[error("polynomial has non-real coefficients")]
    NotReal,
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("polynomial is not top-degree monic")]
    NotMonic,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("could not sample a point of the region after {0} attempts")]
    EmptyRegion(usize),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
