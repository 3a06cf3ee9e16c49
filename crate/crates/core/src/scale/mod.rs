//! Scaling slack matrices along a spanning forest, undoing the scaling on
//! ideals, reduced slack matrices and irrationality certificates.

mod certificate;
mod flag;
mod graph;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::groebner::{buchberger, saturate_by_variables, Ideal};
use crate::polyring::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Field;
use crate::slack::{minor_generators, ScaledSlackMatrix, SlackError, SymbolicSlackMatrix};

pub use certificate::{irrationality_certificate, Certificate, CertificateKind};
pub use flag::{contains_flag, find_flag, reduced_slack_matrix, ReducedSlackMatrix, SlackInput};
pub use graph::{ForestEdge, NonIncidenceGraph, SpanningForest};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScaleError {
    #[error("variable x{0} closes a cycle with the other chosen variables")]
    NotAForest(usize),
    #[error("variable x{var} out of range for {nvars} variables")]
    VariableOutOfRange { var: usize, nvars: usize },
    #[error("column {column} out of range for {cols} columns")]
    ColumnOutOfRange { column: usize, cols: usize },
    #[error("flag search needs a numeric slack matrix, not just a pattern")]
    NeedsNumericData,
    #[error("the given columns contain no flag")]
    NoFlagFound,
    #[error("column {column} has {zeros} zeros, fewer than the dimension {dim}")]
    ComplementNotSimplicial { column: usize, zeros: usize, dim: usize },
    #[error(transparent)]
    Slack(#[from] SlackError),
}

/// Sets the variables of the greedy maximal spanning forest to one.
pub fn set_ones_forest(s: &SymbolicSlackMatrix) -> (ScaledSlackMatrix, SpanningForest) {
    let forest = SpanningForest::kruskal(&NonIncidenceGraph::new(s));
    let ones = forest.variables().collect();
    (ScaledSlackMatrix::new_unchecked(s.clone(), ones), forest)
}

/// Sets `vars` to one, provided their edges form a forest.
pub fn set_ones(s: &SymbolicSlackMatrix, vars: &BTreeSet<usize>) -> Result<ScaledSlackMatrix, ScaleError> {
    SpanningForest::from_edges(&NonIncidenceGraph::new(s), vars)?;
    Ok(ScaledSlackMatrix::new_unchecked(s.clone(), vars.clone()))
}

/// The oriented forest formed by the scaled variables.
pub fn forest_of(y: &ScaledSlackMatrix) -> Result<SpanningForest, ScaleError> {
    SpanningForest::from_edges(&NonIncidenceGraph::new(y.base()), y.ones())
}

/// The `(d+2)`-minors of the scaled matrix saturated by the product of the
/// surviving variables.
pub fn dehomogenized_ideal<T: Field>(d: usize, y: &ScaledSlackMatrix) -> Ideal<T> {
    let n = y.nvars();
    let gens = minor_generators(&y.monomial_entries(), n, d + 2);
    saturate_by_variables(&Ideal::new(n, gens), &y.survivors())
}

/// Reintroduces the forest variables from the leaves inwards: for each edge,
/// terms whose degree in the edge's destination row or column falls short of
/// the maximum are padded with powers of the edge variable.
pub fn rehomogenize_poly<T: Field>(
    p: &Polynomial<T>,
    y: &ScaledSlackMatrix,
    forest: &SpanningForest,
) -> Polynomial<T> {
    forest
        .edges()
        .iter()
        .rev()
        .fold(p.clone(), |q, edge| homogenize_along(&q, y.base(), edge))
}

/// Variables in the row or column of `node`.
fn node_variables(s: &SymbolicSlackMatrix, node: usize) -> BTreeSet<usize> {
    let rows = s.rows();
    (0..s.nvars())
        .filter(|&v| {
            let (i, j) = s.cell(v);
            if node < rows {
                i == node
            } else {
                j + rows == node
            }
        })
        .collect()
}

fn homogenize_along<T: Field>(p: &Polynomial<T>, s: &SymbolicSlackMatrix, edge: &ForestEdge) -> Polynomial<T> {
    let node = node_variables(s, edge.dest);
    let degree = |m: &Monomial| -> u32 { m.iter().filter(|(v, _)| node.contains(v)).map(|(_, e)| e).sum() };
    let max = p.terms().map(|(m, _)| degree(m)).max().unwrap_or(0);
    Polynomial::from_terms(
        p.nvars(),
        p.terms().map(|(m, c)| {
            let pad = Monomial::var_pow(edge.var, max - degree(m));
            (m.mul(&pad), c.clone())
        }),
    )
}

/// `H(I)`: the rehomogenized basis of `dehomogenized` saturated by the forest
/// variables.
///
/// Computed one edge at a time from the leaves: homogenizing a Gröbner basis
/// for an order that compares degree in the edge's destination row or column
/// first yields the whole homogenization of the ideal, so no saturation is
/// needed. [`rehomogenize_by_saturation`] is the literal definition.
pub fn rehomogenize<T: Field>(
    dehomogenized: &Ideal<T>,
    y: &ScaledSlackMatrix,
    forest: &SpanningForest,
) -> Ideal<T> {
    let s = y.base();
    let mut gens = dehomogenized.basis().to_vec();
    for edge in forest.edges().iter().rev() {
        let order = MonomialOrder::block(node_variables(s, edge.dest));
        gens = buchberger(&gens, &order)
            .iter()
            .map(|g| homogenize_along(g, s, edge))
            .collect();
    }
    Ideal::new(y.nvars(), gens)
}

/// The rehomogenized reduced basis of `dehomogenized`, saturated by the
/// product of the forest variables.
pub fn rehomogenize_by_saturation<T: Field>(
    dehomogenized: &Ideal<T>,
    y: &ScaledSlackMatrix,
    forest: &SpanningForest,
) -> Ideal<T> {
    let gens = dehomogenized
        .basis()
        .iter()
        .map(|g| rehomogenize_poly(g, y, forest))
        .collect();
    saturate_by_variables(&Ideal::new(y.nvars(), gens), &forest.variables().collect())
}

/// [`rehomogenize`] applied to [`dehomogenized_ideal`].
pub fn rehomogenize_ideal<T: Field>(d: usize, y: &ScaledSlackMatrix, forest: &SpanningForest) -> Ideal<T> {
    rehomogenize(&dehomogenized_ideal(d, y), y, forest)
}

/// Decides membership of `g` in the slack ideal of `y`'s unscaled matrix
/// from the scaled ideal alone. A multihomogeneous polynomial lies in the
/// slack ideal exactly when it does after setting the forest variables to
/// one: scaling rows and columns is invertible on the torus and moves any
/// point to one whose forest entries equal one. Components of other
/// polynomials are tested separately.
pub fn slack_ideal_contains<T: Field>(
    g: &Polynomial<T>,
    y: &ScaledSlackMatrix,
    dehomogenized: &Ideal<T>,
) -> bool {
    let grading = y.base().grading();
    let parts = grading
        .components(g)
        .expect("polynomials over the slack matrix variables are graded");
    parts
        .iter()
        .all(|part| dehomogenized.contains(&part.set_ones(y.ones())))
}
