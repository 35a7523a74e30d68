use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("column {column} is the zero vector and is not a projective point")]
    ZeroColumn { column: usize },
    #[error("index {index} is out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("row index set has {rows} entries but column index set has {cols}")]
    CardinalityMismatch { rows: usize, cols: usize },
    #[error("basis columns {basis} are linearly dependent")]
    DependentBasis { basis: Subset },
    #[error("column {target} does not lie in the span of columns {basis}")]
    OutsideSpan { basis: Subset, target: usize },
    #[error("rank matrices on {left} and {right} points cannot be compared")]
    PointCountMismatch { left: usize, right: usize },
    #[error("invalid rank matrix: {0}")]
    InvalidRankMatrix(String),
    #[error("{subset} is not a face: {larger} is strictly larger with the same rank")]
    NotAFace { subset: Subset, larger: Subset },
    #[error("invalid splitting: {0}")]
    InvalidSplitting(String),
    #[error("splitting {splitting} is outside {set} for n = {n}")]
    SplittingPrecondition { splitting: String, set: &'static str, n: usize },
    #[error("expected {expected} parameter point(s), found {found}")]
    ParameterArity { expected: usize, found: usize },
    #[error("parameter point {0} must have {1} homogeneous coordinates, not all zero")]
    InvalidParameter(String, usize),
    #[error("parameter {0} lies outside the generic locus")]
    NonGenericParameter(String),
    #[error("classification needs n = 4 and m = 5, found n = {n}, m = {m}")]
    UnsupportedShape { n: usize, m: usize },
    #[error("rank matrix is not in the enumerated image")]
    NotInImage,
    #[error("the fibre of {0} is not a single orbit; use the orbit closure description")]
    ParametrizedFibre(String),
    #[error("family {0} has a single-orbit fibre and carries no parameter")]
    UnparametrizedFamily(String),
    #[error("family {0} has no known ideal generators")]
    NoIdealGenerators(String),
    #[error("cannot parse family tag `{0}`")]
    UnknownFamily(String),
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ShapeMismatch { .. } => "shape_mismatch",
            Error::ZeroColumn { .. } => "invalid_projective_point",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::CardinalityMismatch { .. } => "cardinality_mismatch",
            Error::DependentBasis { .. } => "dependent_basis",
            Error::OutsideSpan { .. } => "outside_span",
            Error::PointCountMismatch { .. } => "point_count_mismatch",
            Error::InvalidRankMatrix(_) => "invalid_rank_matrix",
            Error::NotAFace { .. } => "not_a_face",
            Error::InvalidSplitting(_) => "invalid_splitting",
            Error::SplittingPrecondition { .. } => "splitting_precondition",
            Error::ParameterArity { .. } => "parameter_arity",
            Error::InvalidParameter(..) => "invalid_parameter",
            Error::NonGenericParameter(_) => "non_generic_parameter",
            Error::UnsupportedShape { .. } => "unsupported_shape",
            Error::NotInImage => "not_in_image",
            Error::ParametrizedFibre(_) => "parametrized_fibre",
            Error::UnparametrizedFamily(_) => "unparametrized_family",
            Error::NoIdealGenerators(_) => "no_ideal_generators",
            Error::UnknownFamily(_) => "unknown_family",
            Error::Parse(_) => "parse_error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
