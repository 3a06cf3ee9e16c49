//! Numeric and symbolic slack matrices and the ideals built from them.

mod builtin;
mod gale;
mod ideal;
mod minors;
mod symbolic;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::Matrix;
use crate::geometry::{facets_from_vertices, matroid_hyperplanes, GeometryError, PointConfiguration};
use crate::scalar::{Field, OrderedField};

pub use builtin::{specific_slack_matrix, Builtin, BuiltinMatrix, BUILTIN_NAMES};
pub use gale::{canonical_cofacets, slack_from_gale_circuits, slack_from_gale_plucker};
pub use ideal::{graphic_ideal, minor_generators, slack_ideal, slack_ideal_of_points};
pub use minors::count_minors;
pub use symbolic::{ScaledSlackMatrix, SymbolicSlackMatrix};

pub(crate) use minors::{all_minors, minor, MonomialEntries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::Row => "row",
            Axis::Column => "column",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlackError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{axis} {index} of the pattern has no nonzero entry")]
    DegeneratePattern { axis: Axis, index: usize },
    #[error("row {row} of the pattern has the wrong length")]
    RaggedPattern { row: usize },
    #[error("the Gale vectors have no positive circuit")]
    NoCircuits,
    #[error("{0:?} does not support a positive circuit of full size")]
    NotACofacet(Vec<usize>),
    #[error("unknown built-in matrix {0:?}")]
    UnknownName(String),
}

/// Whether hyperplanes are the facets of the convex hull or all hyperplanes
/// spanned by the points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Object {
    #[default]
    Polytope,
    Matroid,
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Object::Polytope => "polytope",
            Object::Matroid => "matroid",
        })
    }
}

impl FromStr for Object {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "polytope" => Ok(Object::Polytope),
            "matroid" => Ok(Object::Matroid),
            other => Err(format!("expected polytope or matroid, got {other:?}")),
        }
    }
}

/// Where a slack matrix came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Polytope,
    Matroid,
    Pattern,
}

/// An `n × f` matrix of slacks, one row per point and one column per
/// hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlackMatrix<T> {
    pub entries: Matrix<T>,
    pub source: Source,
}

impl<T: Field> SlackMatrix<T> {
    pub fn new(entries: Matrix<T>, source: Source) -> Self {
        Self { entries, source }
    }

    pub fn rows(&self) -> usize {
        self.entries.rows()
    }

    pub fn cols(&self) -> usize {
        self.entries.cols()
    }

    /// Rows vanishing in each column.
    pub fn zero_sets(&self) -> Vec<BTreeSet<usize>> {
        (0..self.cols())
            .map(|j| (0..self.rows()).filter(|&i| self.entries.get(i, j).is_zero()).collect())
            .collect()
    }

    pub fn support(&self) -> Vec<Vec<bool>> {
        self.entries
            .row_iter()
            .map(|r| r.iter().map(|x| !x.is_zero()).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.entries.rank()
    }

    /// Numeric values of the variables of [`SymbolicSlackMatrix::from_slack`],
    /// in variable order.
    pub fn variable_values(&self) -> Vec<T> {
        self.entries.entries().iter().filter(|x| !x.is_zero()).cloned().collect()
    }
}

/// `S[i][j] = b_j - α_jᵀ v_i` over the facets (polytope) or the hyperplanes
/// of the matroid, in canonical hyperplane order. Polytope columns are
/// nonnegative.
pub fn slack_matrix<T: OrderedField>(
    config: &PointConfiguration<T>,
    object: Object,
) -> Result<SlackMatrix<T>, SlackError> {
    let (hyperplanes, source) = match object {
        Object::Polytope => (facets_from_vertices(config)?, Source::Polytope),
        Object::Matroid => (matroid_hyperplanes(config), Source::Matroid),
    };
    let n = config.len();
    let mut entries = Matrix::zeros(n, hyperplanes.len());
    for (j, h) in hyperplanes.iter().enumerate() {
        for i in 0..n {
            entries.set(i, j, h.slack(config.point(i)));
        }
    }
    Ok(SlackMatrix::new(entries, source))
}

/// Positive row and column scalings `r`, `c` with `b[i][j] = r[i] a[i][j] c[j]`
/// for every entry, if they exist.
pub fn positive_scaling<T: OrderedField>(a: &Matrix<T>, b: &Matrix<T>) -> Option<(Vec<T>, Vec<T>)> {
    let (n, f) = (a.rows(), a.cols());
    if (b.rows(), b.cols()) != (n, f)
        || a.entries().iter().zip(b.entries()).any(|(x, y)| x.is_zero() != y.is_zero())
    {
        return None;
    }
    let mut r: Vec<Option<T>> = vec![None; n];
    let mut c: Vec<Option<T>> = vec![None; f];
    let ratio = |i: usize, j: usize| b.get(i, j).clone() / a.get(i, j).clone();
    for start in 0..n {
        if r[start].is_some() {
            continue;
        }
        r[start] = Some(T::one());
        let mut stack = vec![(start, true)];
        while let Some((k, is_row)) = stack.pop() {
            if is_row {
                let ri = r[k].clone().expect("visited");
                for j in (0..f).filter(|&j| !a.get(k, j).is_zero()) {
                    if c[j].is_none() {
                        c[j] = Some(ratio(k, j) / ri.clone());
                        stack.push((j, false));
                    }
                }
            } else {
                let cj = c[k].clone().expect("visited");
                for i in (0..n).filter(|&i| !a.get(i, k).is_zero()) {
                    if r[i].is_none() {
                        r[i] = Some(ratio(i, k) / cj.clone());
                        stack.push((i, true));
                    }
                }
            }
        }
    }
    let r: Vec<T> = r.into_iter().map(|x| x.unwrap_or_else(T::one)).collect();
    let c: Vec<T> = c.into_iter().map(|x| x.unwrap_or_else(T::one)).collect();
    if r.iter().chain(&c).any(|x| !x.is_positive()) {
        return None;
    }
    for i in 0..n {
        for j in 0..f {
            let scaled = r[i].clone() * a.get(i, j).clone() * c[j].clone();
            if &scaled != b.get(i, j) {
                return None;
            }
        }
    }
    Some((r, c))
}
