//! Desk-scale polyhedral and matroid geometry over an ordered field.
//!
//! Everything here is brute force over subsets of points, which is fine for
//! the configurations of a couple of dozen points this library targets.

mod facets;
mod gale;
mod matroid;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::exactmath::Matrix;
use crate::scalar::{Field, OrderedField};

pub use facets::facets_from_vertices;
pub use gale::{gale_transform, pluecker, positive_circuits, Circuit, GaleTransform};
pub use matroid::matroid_hyperplanes;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("points affinely span dimension {affine_dim}, expected {dim}")]
    NotFullDimensional { affine_dim: isize, dim: usize },
    #[error("point {0} is not a vertex of the convex hull")]
    NonVertexPoint(usize),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("expected {expected} columns, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("need at least {needed} points, got {found}")]
    TooFewPoints { needed: usize, found: usize },
}

/// `n` points in `R^d`, one per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration<T> {
    points: Matrix<T>,
}

impl<T: Field> PointConfiguration<T> {
    pub fn new(points: Matrix<T>) -> Result<Self, GeometryError> {
        for i in 0..points.rows() {
            for j in i + 1..points.rows() {
                if points.row(i) == points.row(j) {
                    return Err(GeometryError::DuplicatePoint(i, j));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.points.rows() == 0
    }

    pub fn dim(&self) -> usize {
        self.points.cols()
    }

    pub fn point(&self, i: usize) -> &[T] {
        self.points.row(i)
    }

    pub fn points(&self) -> &Matrix<T> {
        &self.points
    }

    /// Rows `(1, v_i)`.
    pub fn homogenized(&self) -> Matrix<T> {
        let d = self.dim();
        let mut data = Vec::with_capacity(self.len() * (d + 1));
        for row in self.points.row_iter() {
            data.push(T::one());
            data.extend(row.iter().cloned());
        }
        Matrix::new(self.len(), d + 1, data).expect("shape")
    }

    /// Dimension of the affine span; -1 for no points.
    pub fn affine_dim(&self) -> isize {
        self.homogenized().rank() as isize - 1
    }

    /// Sorted lexicographically, together with the permutation applied
    /// (`order[k]` is the original index of the `k`-th sorted point).
    pub fn sorted(&self) -> (Self, Vec<usize>)
    where
        T: PartialOrd,
    {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| {
            self.point(a)
                .partial_cmp(self.point(b))
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let points = self.points.select_rows(&order);
        (Self { points }, order)
    }
}

/// `{x : b - αᵀx = 0}` with the points of the configuration lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHyperplane<T> {
    pub offset: T,
    pub normal: Vec<T>,
    pub incident: BTreeSet<usize>,
}

impl<T: Field> AffineHyperplane<T> {
    /// From a vector `w` with slack `w · (1, v)`.
    pub(crate) fn from_homogeneous(w: &[T], incident: BTreeSet<usize>) -> Self {
        Self {
            offset: w[0].clone(),
            normal: w[1..].iter().map(|x| -x.clone()).collect(),
            incident,
        }
    }

    /// `b - αᵀv`.
    pub fn slack(&self, v: &[T]) -> T {
        self.normal
            .iter()
            .zip(v)
            .fold(self.offset.clone(), |acc, (a, x)| acc - a.clone() * x.clone())
    }
}

/// Homogeneous vector `w` scaled so its first nonzero entry is one.
pub(crate) fn normalize_leading<T: Field>(w: &mut [T]) {
    if let Some(lead) = w.iter().find(|x| !x.is_zero()).cloned() {
        for x in w.iter_mut() {
            *x = x.clone() / lead.clone();
        }
    }
}

/// Scales `w` so its first nonzero entry is `±1`, keeping the sign.
pub(crate) fn normalize_magnitude<T: OrderedField>(w: &mut [T]) {
    if let Some(lead) = w.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
        for x in w.iter_mut() {
            *x = x.clone() / lead.clone();
        }
    }
}

pub(crate) fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_enumerate_lexicographically() {
        let all: Vec<Vec<usize>> = combinations(4, 2).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(12, 10).count(), 66);
    }
}
