//! Exact classification of ordered five-point configurations in projective 3-space
//! under the general linear group.
//!
//! The crate computes rank matrices and splittings for configurations of any size,
//! and for five points in projective 3-space it enumerates every rank matrix,
//! names the orbit of a configuration with its moduli parameter, and decides
//! closure relations between orbits. All arithmetic is exact; the algorithms are
//! generic over [`Scalar`] and the aliases below fix arbitrary-precision rationals.

pub mod classifier;
pub mod closure;
pub mod enumeration;
pub mod error;
pub mod exact_linalg;
pub mod family;
pub mod poset;
pub mod rank_matrix;
pub mod scalar;
pub mod splitting;
pub mod subset;

pub use classifier::{classify, orbit_dimension, same_orbit, OrbitClass};
pub use closure::{ClosureComponent, ClosureDescription, MinorPolynomial, Verdict};
pub use enumeration::{catalogue, enumerate_image, verify_realizability, CatalogueEntry};
pub use error::{Error, Result};
pub use exact_linalg::{coordinates_in_span, minor, rank, Matrix, ProjConfig};
pub use family::{Family, ParamKind, Parameter};
pub use poset::{build_poset, export_dot, OrderKind, PosetGraph};
pub use rank_matrix::{compute_rank_matrix, RankMatrix};
pub use scalar::{parse_scalar, Scalar};
pub use splitting::{compute_splitting, Block, Splitting, SplittingType};
pub use subset::Subset;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Configuration with rational coordinates.
pub type Config = ProjConfig<Rational>;
/// Matrix with rational entries.
pub type RationalMatrix = Matrix<Rational>;
/// Orbit descriptor with a rational parameter.
pub type Orbit = OrbitClass<Rational>;
/// Moduli parameter with rational coordinates.
pub type RationalParameter = Parameter<Rational>;
/// Closure description with rational parameters.
pub type Closure = ClosureDescription<Rational>;
