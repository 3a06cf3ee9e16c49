use std::collections::{BTreeMap, BTreeSet};

use super::{combinations, dot, normalize_leading, AffineHyperplane, PointConfiguration};
use crate::scalar::Field;

/// Hyperplanes (flats of rank `r - 1`) of the matroid of the homogenized
/// points, sorted by incidence set. Normals come from kernels and carry no
/// sign convention.
pub fn matroid_hyperplanes<T: Field>(config: &PointConfiguration<T>) -> Vec<AffineHyperplane<T>> {
    let h = config.homogenized();
    let n = config.len();
    let r = h.rank();
    if r == 0 {
        return Vec::new();
    }
    let mut flats: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for basis in combinations(n, r - 1) {
        if h.select_rows(&basis).rank() != r - 1 {
            continue;
        }
        let closure: BTreeSet<usize> = (0..n)
            .filter(|&j| {
                basis.contains(&j) || {
                    let mut rows = basis.clone();
                    rows.push(j);
                    h.select_rows(&rows).rank() == r - 1
                }
            })
            .collect();
        flats.insert(closure);
    }

    let mut out: BTreeMap<BTreeSet<usize>, AffineHyperplane<T>> = BTreeMap::new();
    for flat in flats {
        let rows: Vec<usize> = flat.iter().copied().collect();
        let kernel = h.select_rows(&rows).kernel_basis();
        // a kernel vector of the flat that does not vanish on every point
        let w = kernel
            .row_iter()
            .find(|w| (0..n).any(|i| !dot(h.row(i), w).is_zero()))
            .expect("flat of corank one has a separating normal");
        let mut w = w.to_vec();
        normalize_leading(&mut w);
        let hyperplane = AffineHyperplane::from_homogeneous(&w, flat.clone());
        out.insert(flat, hyperplane);
    }
    out.into_values().collect()
}
