//! Exact slack matrices, slack ideals and realizability certificates for
//! polytopes and matroids.
//!
//! The algebra is generic over a [`Field`](scalar::Field); the aliases at the
//! crate root fix the scalar to arbitrary-precision rationals, which is what
//! every ideal computation in the library expects.

pub mod exactmath;
pub mod geometry;
pub mod groebner;
pub mod polyring;
pub mod scale;
pub mod slack;
pub mod scalar;

pub use exactmath::{Matrix, MatrixError};
pub use geometry::{AffineHyperplane, GeometryError, PointConfiguration};
pub use groebner::GroebnerError;
pub use polyring::{Monomial, MonomialOrder, Multidegree, Multigrading, PolyError};
pub use scalar::{Field, OrderedField};

/// Arbitrary-precision rational numbers, printed as `p/q` or `p`.
pub type Rational = num_rational::BigRational;
/// Dense matrix over [`Rational`].
pub type RationalMatrix = Matrix<Rational>;
/// Sparse polynomial over [`Rational`].
pub type Polynomial = polyring::Polynomial<Rational>;
/// Ideal of [`Polynomial`]s.
pub type Ideal = groebner::Ideal<Rational>;
