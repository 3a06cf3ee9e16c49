use std::collections::{BTreeMap, BTreeSet};

use super::{combinations, dot, normalize_magnitude, AffineHyperplane, GeometryError, PointConfiguration};
use crate::exactmath::Matrix;
use crate::scalar::OrderedField;

/// Facet hyperplanes of `conv(V)`, oriented so every slack is nonnegative
/// and sorted by incidence set.
///
/// Every `d`-subset of affinely independent points spans a candidate
/// hyperplane; it is a facet when all points lie weakly on one side.
pub fn facets_from_vertices<T: OrderedField>(
    config: &PointConfiguration<T>,
) -> Result<Vec<AffineHyperplane<T>>, GeometryError> {
    let d = config.dim();
    let h = config.homogenized();
    let rank = h.rank();
    if rank != d + 1 {
        return Err(GeometryError::NotFullDimensional {
            affine_dim: rank as isize - 1,
            dim: d,
        });
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    let n = config.len();
    let mut found: BTreeMap<BTreeSet<usize>, Vec<T>> = BTreeMap::new();
    for subset in combinations(n, d) {
        let sub = h.select_rows(&subset);
        if sub.rank() != d {
            continue;
        }
        let kernel = sub.kernel_basis();
        let mut w = kernel.row(0).to_vec();
        normalize_magnitude(&mut w);
        let slacks: Vec<T> = (0..n).map(|i| dot(h.row(i), &w)).collect();
        let nonneg = slacks.iter().all(|s| !s.is_negative());
        let nonpos = slacks.iter().all(|s| !s.is_positive());
        if !nonneg && !nonpos {
            continue;
        }
        if !nonneg {
            w.iter_mut().for_each(|x| *x = -x.clone());
        }
        let incident: BTreeSet<usize> = (0..n).filter(|&i| slacks[i].is_zero()).collect();
        found.entry(incident).or_insert(w);
    }

    // a vertex is cut out by the facets through it
    for i in 0..n {
        let through: Vec<Vec<T>> = found
            .iter()
            .filter(|(inc, _)| inc.contains(&i))
            .map(|(_, w)| w.clone())
            .collect();
        let rank = if through.is_empty() {
            0
        } else {
            Matrix::from_rows(through).expect("uniform width").rank()
        };
        if rank != d {
            return Err(GeometryError::NonVertexPoint(i));
        }
    }

    Ok(found
        .into_iter()
        .map(|(incident, w)| AffineHyperplane::from_homogeneous(&w, incident))
        .collect())
}
