//! Exact dense linear algebra.

mod matrix;

pub use matrix::{Matrix, MatrixError};
