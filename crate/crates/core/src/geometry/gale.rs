use super::{combinations, GeometryError, PointConfiguration};
use crate::exactmath::Matrix;
use crate::scalar::{Field, OrderedField};

/// A Gale transform: column `i` is the Gale vector of point `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleTransform<T> {
    pub matrix: Matrix<T>,
}

impl<T: Field> GaleTransform<T> {
    pub fn new(matrix: Matrix<T>) -> Self {
        Self { matrix }
    }

    pub fn len(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.cols() == 0
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// A minimal linear dependency `Σ λ_i g_i = 0` among Gale vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit<T> {
    pub support: Vec<usize>,
    pub coefficients: Vec<T>,
}

/// Kernel of the transposed homogenized point matrix, in reduced echelon
/// form.
pub fn gale_transform<T: Field>(
    config: &PointConfiguration<T>,
) -> Result<GaleTransform<T>, GeometryError> {
    let needed = config.dim() + 1;
    if config.len() < needed {
        return Err(GeometryError::TooFewPoints {
            needed,
            found: config.len(),
        });
    }
    Ok(GaleTransform::new(config.homogenized().transpose().kernel_basis()))
}

/// Circuits of the Gale vectors with all coefficients positive, normalized so
/// the first coefficient is one, sorted by support.
///
/// A zero Gale vector is a circuit by itself; in particular a transform with
/// no rows yields every singleton.
pub fn positive_circuits<T: OrderedField>(gale: &GaleTransform<T>) -> Vec<Circuit<T>> {
    let g = &gale.matrix;
    let n = g.cols();
    let max = (g.rank() + 1).min(n);
    let mut out = Vec::new();
    for size in 1..=max {
        for support in combinations(n, size) {
            let kernel = g.select_columns(&support).kernel_basis();
            if kernel.rows() != 1 {
                continue;
            }
            let lambda = kernel.row(0);
            let positive = lambda.iter().all(|x| x.is_positive());
            let negative = lambda.iter().all(|x| x.is_negative());
            if !positive && !negative {
                continue;
            }
            let first = lambda[0].clone();
            let coefficients = lambda.iter().map(|x| x.clone() / first.clone()).collect();
            out.push(Circuit {
                support,
                coefficients,
            });
        }
    }
    out.sort_by(|a, b| a.support.cmp(&b.support));
    out
}

/// Determinant of the columns `cols` of `m`, in the given order.
pub fn pluecker<T: Field>(m: &Matrix<T>, cols: &[usize]) -> Result<T, GeometryError> {
    if cols.len() != m.rows() {
        return Err(GeometryError::SizeMismatch {
            expected: m.rows(),
            found: cols.len(),
        });
    }
    Ok(m.select_columns(cols).det().expect("square by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::facets_from_vertices;
    use crate::Rational;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    fn config(points: &[&[i64]]) -> PointConfiguration<Rational> {
        PointConfiguration::new(qm(points)).unwrap()
    }

    fn square() -> PointConfiguration<Rational> {
        config(&[&[0, 0], &[0, 1], &[1, 1], &[1, 0]])
    }

    fn prism() -> PointConfiguration<Rational> {
        config(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 0, 1], &[1, 1, 0]])
    }

    #[test]
    fn gale_shapes() {
        let simplex = config(&[&[0, 0], &[1, 0], &[0, 1]]);
        let g = gale_transform(&simplex).unwrap();
        assert_eq!((g.matrix.rows(), g.matrix.cols()), (0, 3));
        assert_eq!(gale_transform(&square()).unwrap().matrix, qm(&[&[1, -1, 1, -1]]));
        let g = gale_transform(&prism()).unwrap();
        assert_eq!((g.matrix.rows(), g.matrix.cols()), (2, 6));
        let product = prism().homogenized().transpose().mul(&g.matrix.transpose()).unwrap();
        assert!(product.is_zero());
        assert!(matches!(
            gale_transform(&config(&[&[0, 0], &[1, 0]])),
            Err(GeometryError::TooFewPoints { needed: 3, found: 2 })
        ));
    }

    #[test]
    fn circuit_examples() {
        assert!(positive_circuits(&GaleTransform::new(qm(&[&[1]]))).is_empty());
        let c = positive_circuits(&GaleTransform::new(qm(&[&[1, -1]])));
        assert_eq!(c, vec![Circuit { support: vec![0, 1], coefficients: vec![q(1), q(1)] }]);
        let c = positive_circuits(&gale_transform(&square()).unwrap());
        let supports: Vec<Vec<usize>> = c.iter().map(|c| c.support.clone()).collect();
        assert_eq!(supports, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        assert!(c.iter().all(|c| c.coefficients == vec![q(1), q(1)]));
        // empty transform: singletons
        let g = GaleTransform::new(Matrix::<Rational>::zeros(0, 3));
        assert_eq!(positive_circuits(&g).len(), 3);
    }

    #[test]
    fn circuits_are_dependencies() {
        let g = gale_transform(&prism()).unwrap();
        for c in positive_circuits(&g) {
            for row in 0..g.matrix.rows() {
                let s = c
                    .support
                    .iter()
                    .zip(&c.coefficients)
                    .fold(q(0), |acc, (&i, l)| acc + g.matrix.get(row, i).clone() * l.clone());
                assert_eq!(s, q(0));
            }
            assert!(c.coefficients.iter().all(|l| l > &q(0)));
        }
    }

    #[test]
    fn cofacets_support_positive_circuits() {
        for config in [square(), prism()] {
            let g = gale_transform(&config).unwrap();
            let supports: Vec<Vec<usize>> =
                positive_circuits(&g).into_iter().map(|c| c.support).collect();
            let facets = facets_from_vertices(&config).unwrap();
            assert_eq!(supports.len(), facets.len());
            for f in facets {
                let complement: Vec<usize> =
                    (0..config.len()).filter(|i| !f.incident.contains(i)).collect();
                assert!(supports.contains(&complement), "{complement:?}");
            }
        }
    }

    #[test]
    fn pluecker_examples() {
        let id = Matrix::<Rational>::identity(3);
        assert_eq!(pluecker(&id, &[0, 1, 2]).unwrap(), q(1));
        assert_eq!(pluecker(&id, &[1, 0, 2]).unwrap(), q(-1));
        let g = gale_transform(&square()).unwrap();
        assert_eq!(pluecker(&g.matrix, &[1]).unwrap(), q(-1));
        assert_eq!(
            pluecker(&g.matrix, &[0, 1]),
            Err(GeometryError::SizeMismatch { expected: 1, found: 2 })
        );
        let m = gale_transform(&prism()).unwrap().matrix;
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(pluecker(&m, &[a, b]).unwrap(), -pluecker(&m, &[b, a]).unwrap());
            }
        }
    }
}
