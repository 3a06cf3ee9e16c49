use super::{PolyError, Polynomial};
use crate::scalar::Field;

/// Assigns each variable of a symbolic slack matrix its (row, column) cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigrading {
    nrows: usize,
    ncols: usize,
    cells: Vec<Option<(usize, usize)>>,
}

/// Per-row and per-column degrees of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegree {
    pub row_degrees: Vec<u32>,
    pub col_degrees: Vec<u32>,
    pub row_homogeneous: Vec<bool>,
    pub col_homogeneous: Vec<bool>,
}

impl Multidegree {
    pub fn is_homogeneous(&self) -> bool {
        self.row_homogeneous.iter().all(|&h| h) && self.col_homogeneous.iter().all(|&h| h)
    }
}

impl Multigrading {
    /// `cells[v]` is the cell of variable `v`; `None` marks a variable
    /// outside the matrix (e.g. an auxiliary variable).
    pub fn new(nrows: usize, ncols: usize, cells: Vec<Option<(usize, usize)>>) -> Self {
        Self {
            nrows,
            ncols,
            cells,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn cell(&self, var: usize) -> Option<(usize, usize)> {
        self.cells.get(var).copied().flatten()
    }

    pub fn row_of(&self, var: usize) -> Option<usize> {
        self.cell(var).map(|c| c.0)
    }

    pub fn col_of(&self, var: usize) -> Option<usize> {
        self.cell(var).map(|c| c.1)
    }

    /// Degree of one monomial in every row and column.
    fn monomial_degrees(
        &self,
        m: &super::Monomial,
    ) -> Result<(Vec<u32>, Vec<u32>), PolyError> {
        let mut rows = vec![0; self.nrows];
        let mut cols = vec![0; self.ncols];
        for (v, e) in m.iter() {
            let (r, c) = self.cell(v).ok_or(PolyError::UngradedVariable(v))?;
            rows[r] += e;
            cols[c] += e;
        }
        Ok((rows, cols))
    }

    /// Splits `p` into its multihomogeneous components, ordered by multidegree.
    pub fn components<T: Field>(&self, p: &Polynomial<T>) -> Result<Vec<Polynomial<T>>, PolyError> {
        let mut parts: std::collections::BTreeMap<(Vec<u32>, Vec<u32>), Vec<_>> = Default::default();
        for (m, c) in p.terms() {
            parts
                .entry(self.monomial_degrees(m)?)
                .or_default()
                .push((m.clone(), c.clone()));
        }
        Ok(parts
            .into_values()
            .map(|terms| Polynomial::from_terms(p.nvars(), terms))
            .collect())
    }

    pub fn multidegree<T: Field>(&self, p: &Polynomial<T>) -> Result<Multidegree, PolyError> {
        let per_term = p
            .terms()
            .map(|(m, _)| self.monomial_degrees(m))
            .collect::<Result<Vec<_>, _>>()?;
        let fold = |n: usize, pick: &dyn Fn(&(Vec<u32>, Vec<u32>)) -> &Vec<u32>| {
            let max: Vec<u32> = (0..n)
                .map(|k| per_term.iter().map(|t| pick(t)[k]).max().unwrap_or(0))
                .collect();
            let homogeneous = (0..n)
                .map(|k| per_term.iter().all(|t| pick(t)[k] == max[k]))
                .collect();
            (max, homogeneous)
        };
        let (row_degrees, row_homogeneous) = fold(self.nrows, &|t| &t.0);
        let (col_degrees, col_homogeneous) = fold(self.ncols, &|t| &t.1);
        Ok(Multidegree {
            row_degrees,
            col_degrees,
            row_homogeneous,
            col_homogeneous,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Monomial;
    use crate::Rational;
    use num_traits::One;

    #[test]
    fn single_monomial() {
        // x0 at (1,2), x1 at (3,4)
        let g = Multigrading::new(5, 5, vec![Some((1, 2)), Some((3, 4))]);
        let p = Polynomial::<Rational>::monomial(2, Monomial::from_pairs([(0, 1), (1, 1)]), Rational::one());
        let d = g.multidegree(&p).unwrap();
        assert_eq!(d.row_degrees, vec![0, 1, 0, 1, 0]);
        assert_eq!(d.col_degrees, vec![0, 0, 1, 0, 1]);
        assert!(d.is_homogeneous());
    }

    #[test]
    fn ungraded_variable() {
        let g = Multigrading::new(1, 1, vec![Some((0, 0)), None]);
        let p = Polynomial::<Rational>::var(2, 1);
        assert_eq!(g.multidegree(&p), Err(PolyError::UngradedVariable(1)));
    }
}
