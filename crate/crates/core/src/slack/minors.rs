use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::binomial;
use rayon::prelude::*;

use crate::geometry::combinations;
use crate::polyring::{Monomial, Polynomial};
use crate::scalar::{from_i64, Field};

/// A matrix whose entries are zero or a monomial with coefficient one.
pub(crate) type MonomialEntries = [Vec<Option<Monomial>>];

/// `C(rows, d+2) * C(cols, d+2)`, the number of `(d+2)`-minors.
pub fn count_minors(d: usize, rows: usize, cols: usize) -> BigUint {
    let k = d + 2;
    if k > rows || k > cols {
        return BigUint::default();
    }
    binomial(BigUint::from(rows), BigUint::from(k)) * binomial(BigUint::from(cols), BigUint::from(k))
}

/// Determinant of the submatrix on `rows` × `cols`, expanded over the
/// matchings of its support.
pub(crate) fn minor<T: Field>(
    m: &MonomialEntries,
    nvars: usize,
    rows: &[usize],
    cols: &[usize],
) -> Polynomial<T> {
    let k = rows.len();
    assert_eq!(k, cols.len(), "minor must be square");
    assert!(k <= 64, "minor too large");
    let options: Vec<Vec<(usize, &Monomial)>> = rows
        .iter()
        .map(|&i| {
            cols.iter()
                .enumerate()
                .filter_map(|(p, &j)| m[i][j].as_ref().map(|e| (p, e)))
                .collect()
        })
        .collect();
    if options.iter().any(Vec::is_empty) {
        return Polynomial::zero(nvars);
    }
    let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
    expand(&options, 0, 0, false, Monomial::one(), &mut acc);
    Polynomial::from_terms(
        nvars,
        acc.into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, from_i64(c))),
    )
}

fn expand(
    options: &[Vec<(usize, &Monomial)>],
    row: usize,
    used: u64,
    odd: bool,
    product: Monomial,
    acc: &mut BTreeMap<Monomial, i64>,
) {
    if row == options.len() {
        *acc.entry(product).or_insert(0) += if odd { -1 } else { 1 };
        return;
    }
    for &(p, e) in &options[row] {
        let bit = 1u64 << p;
        if used & bit != 0 {
            continue;
        }
        // columns already used to the right of p are inversions
        let inversions = (used >> p).count_ones();
        expand(
            options,
            row + 1,
            used | bit,
            odd ^ (inversions % 2 == 1),
            product.mul(e),
            acc,
        );
    }
}

/// All `k`-minors in lexicographic (row set, column set) order, zeros
/// included.
pub(crate) fn all_minors<T: Field>(
    m: &MonomialEntries,
    nvars: usize,
    k: usize,
) -> Vec<Polynomial<T>> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    if k > nrows || k > ncols {
        return Vec::new();
    }
    let row_sets: Vec<Vec<usize>> = combinations(nrows, k).collect();
    let col_sets: Vec<Vec<usize>> = combinations(ncols, k).collect();
    row_sets
        .par_iter()
        .map(|rows| {
            col_sets
                .iter()
                .map(|cols| minor(m, nvars, rows, cols))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
