//! Sparse multivariate polynomials over a field.
//!
//! Variables are indexed `0..nvars` and printed `x0, x1, ...`. In every
//! monomial order a lower index is the larger variable, so `x0 > x1 > ...`.

mod grading;
mod monomial;
mod order;
mod parse;
mod polynomial;

use thiserror::Error;

pub use grading::{Multidegree, Multigrading};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::ParsePolynomialError;
pub use polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in rings with {left} and {right} variables")]
    UniverseMismatch { left: usize, right: usize },
    #[error("variable x{0} has no row/column grading")]
    UngradedVariable(usize),
    #[error("variable x{var} outside a ring with {nvars} variables")]
    VariableOutOfRange { var: usize, nvars: usize },
}
