use std::collections::BTreeSet;

use super::{SlackError, SlackMatrix, Source};
use crate::exactmath::Matrix;
use crate::geometry::{pluecker, positive_circuits, GaleTransform};
use crate::scalar::OrderedField;

fn complement(n: usize, support: &[usize]) -> BTreeSet<usize> {
    (0..n).filter(|i| !support.contains(i)).collect()
}

/// One column per positive circuit, holding its coefficients. Columns are
/// sorted by zero set, so a polytope's Gale transform reproduces the column
/// order of its slack matrix.
pub fn slack_from_gale_circuits<T: OrderedField>(
    gale: &GaleTransform<T>,
) -> Result<SlackMatrix<T>, SlackError> {
    let n = gale.len();
    let mut circuits = positive_circuits(gale);
    if circuits.is_empty() {
        return Err(SlackError::NoCircuits);
    }
    circuits.sort_by_key(|c| complement(n, &c.support));
    let mut entries = Matrix::zeros(n, circuits.len());
    for (j, c) in circuits.iter().enumerate() {
        for (&i, l) in c.support.iter().zip(&c.coefficients) {
            entries.set(i, j, l.clone());
        }
    }
    Ok(SlackMatrix::new(entries, Source::Polytope))
}

/// Supports of the positive circuits, in the column order of
/// [`slack_from_gale_circuits`].
pub fn canonical_cofacets<T: OrderedField>(gale: &GaleTransform<T>) -> Vec<Vec<usize>> {
    let n = gale.len();
    let mut supports: Vec<Vec<usize>> = positive_circuits(gale).into_iter().map(|c| c.support).collect();
    supports.sort_by_key(|s| complement(n, s));
    supports
}

/// Columns filled with maximal minors of the Gale matrix by Cramer's rule.
///
/// A cofacet `C` smaller than `rank + 1` is first completed to `K ⊇ C` of
/// that size with the lowest columns that keep `G[:, K]` of full rank; this
/// amounts to choosing a basis of the facet's points. Entry `i` of the column
/// is then `(-1)^p` times the minor of `G` on `K \ {i}`, where `p` is the
/// position of `i` in `K`, and vanishes off `C`. Each column is signed to be
/// positive.
pub fn slack_from_gale_plucker<T: OrderedField>(
    gale: &GaleTransform<T>,
    cofacets: &[Vec<usize>],
) -> Result<SlackMatrix<T>, SlackError> {
    let g = &gale.matrix;
    let n = gale.len();
    let r = g.rows();
    let mut entries = Matrix::zeros(n, cofacets.len());
    for (j, cofacet) in cofacets.iter().enumerate() {
        let bad = || SlackError::NotACofacet(cofacet.clone());
        let c: BTreeSet<usize> = cofacet.iter().copied().collect();
        if c.is_empty() || c.len() > r + 1 || c.iter().any(|&i| i >= n) {
            return Err(bad());
        }
        let k = complete(g, &c).ok_or_else(bad)?;
        let mut column = Vec::with_capacity(k.len());
        for p in 0..k.len() {
            let rest: Vec<usize> = k
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != p)
                .map(|(_, &i)| i)
                .collect();
            let minor = pluecker(g, &rest).expect("square by construction");
            column.push(if p % 2 == 0 { minor } else { -minor });
        }
        let on_c: Vec<&T> = k.iter().zip(&column).filter(|(i, _)| c.contains(i)).map(|(_, x)| x).collect();
        let positive = on_c.iter().all(|x| x.is_positive());
        let negative = on_c.iter().all(|x| x.is_negative());
        let off_c_zero = k.iter().zip(&column).all(|(i, x)| c.contains(i) || x.is_zero());
        if !(positive || negative) || !off_c_zero {
            return Err(bad());
        }
        for (&i, x) in k.iter().zip(column) {
            entries.set(i, j, if negative { -x } else { x });
        }
    }
    Ok(SlackMatrix::new(entries, Source::Polytope))
}

/// `c` plus the lowest columns raising the rank of `G[:, c]` to the rank of
/// `G`, sorted; `None` if `G[:, c]` is not a single dependency.
fn complete<T: OrderedField>(g: &Matrix<T>, c: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let mut k: Vec<usize> = c.iter().copied().collect();
    let mut rank = g.select_columns(&k).rank();
    if rank + 1 != k.len() {
        return None;
    }
    for i in (0..g.cols()).filter(|i| !c.contains(i)) {
        if rank == g.rows() {
            break;
        }
        k.push(i);
        let next = g.select_columns(&k).rank();
        if next > rank {
            rank = next;
        } else {
            k.pop();
        }
    }
    k.sort_unstable();
    (rank == g.rows()).then_some(k)
}
