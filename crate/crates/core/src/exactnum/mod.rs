//! Exact arithmetic over ℚ(i): scalars, dense matrices and sparse
//! (Laurent) polynomials.

pub mod gaussian;
pub mod matrix;
pub mod poly;

pub use gaussian::GaussianRational;
pub use matrix::Matrix;
pub use poly::{Monomial, Poly, PolyRing};

/// Shorthand used throughout the crate.
pub type Q = GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("negative exponent on substituted variable {0}")]
    NegativeExponent(String),
}

/// A commutative ring whose elements can be shared across threads.
///
/// Operations take references so that big-integer payloads are not cloned
/// needlessly.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}
