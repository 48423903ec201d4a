use thiserror::Error;

/// Errors raised by the exact number layer, the projective kernel and the
/// theorem modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ratio: 0/0 does not name a point")]
    InvalidRatio,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("homogeneous vector is zero")]
    ZeroVector,
    #[error("line through two equal points is undefined")]
    UndefinedLine,
    #[error("intersection of two identical lines is undefined")]
    UndefinedPoint,
    #[error("point at infinity where an affine point is required")]
    NotAffine,
    #[error("segment endpoints must be distinct affine points")]
    InvalidSegment,
    #[error("point does not lie on the segment's line")]
    OffLine,
    #[error("triangle vertices are collinear")]
    DegenerateTriangle,
    #[error("affine map is singular")]
    SingularMap,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
