use std::fmt;

use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("expected {expected} entries for the given shape, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::ShapeMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from a list of rows. An empty list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::RaggedRows {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        let cols = self.cols;
        let mut out = Vec::with_capacity(self.rows);
        let mut it = self.data.into_iter();
        for _ in 0..self.rows {
            out.push(it.by_ref().take(cols).collect());
        }
        out
    }
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let all: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &all)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, T::zero())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other.get(k, j).clone();
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].clone() + prod;
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<T, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let lead = a.get(i, k).clone();
                for j in k + 1..n {
                    let v = (pivot.clone() * a.get(i, j).clone()
                        - lead.clone() * a.get(k, j).clone())
                        / prev.clone();
                    a.set(i, j, v);
                }
                a.set(i, k, T::zero());
            }
            prev = pivot;
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if negate { -d } else { d })
    }

    /// Rank by fraction-free elimination with column skipping.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut r = 0;
        let mut prev = T::one();
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let pivot = a.get(r, c).clone();
            for i in r + 1..a.rows {
                let lead = a.get(i, c).clone();
                for j in c + 1..a.cols {
                    let v = (pivot.clone() * a.get(i, j).clone()
                        - lead.clone() * a.get(r, j).clone())
                        / prev.clone();
                    a.set(i, j, v);
                }
                a.set(i, c, T::zero());
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = T::one() / a.get(r, c).clone();
            for j in c..a.cols {
                let v = a.get(r, j).clone() * inv.clone();
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let factor = a.get(i, c).clone();
                for j in c..a.cols {
                    let v = a.get(i, j).clone() - factor.clone() * a.get(r, j).clone();
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Basis of the right kernel `{x : Mx = 0}` as the rows of a matrix in
    /// reduced row echelon form.
    pub fn kernel_basis(&self) -> Self {
        let (reduced, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut data = Vec::with_capacity(free.len() * self.cols);
        for &f in &free {
            let mut v = vec![T::zero(); self.cols];
            v[f] = T::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(k, f).clone();
            }
            data.extend(v);
        }
        let basis = Self {
            rows: free.len(),
            cols: self.cols,
            data,
        };
        basis.rref().0
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
            .unwrap()
    }

    // Laplace expansion along the first row; independent of the Bareiss path.
    fn cofactor_det(m: &Matrix<Rational>) -> Rational {
        let n = m.rows();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = cofactor_det(&m.submatrix(&rows, &cols));
            let term = m.get(0, j).clone() * minor;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Rational>::identity(3).rank(), 3);
        assert_eq!(Matrix::<Rational>::zeros(2, 5).rank(), 0);
        // square slack matrix
        let s = qm(&[&[0, 1, 0, 1], &[1, 0, 0, 1], &[0, 1, 1, 0], &[1, 0, 1, 0]]);
        assert_eq!(s.rank(), 3);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::<Rational>::identity(3).kernel_basis().rows(), 0);
        let k = qm(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, qm(&[&[1, -1]]));
        // homogenized square vertices, one vertex per column
        let h = qm(&[&[1, 1, 1, 1], &[0, 0, 1, 1], &[0, 1, 1, 0]]);
        assert_eq!(h.kernel_basis(), qm(&[&[1, -1, 1, -1]]));
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::<Rational>::identity(4).det().unwrap(), q(1));
        assert_eq!(qm(&[&[1, 2], &[1, 2]]).det().unwrap(), q(0));
        assert_eq!(qm(&[&[1, 2], &[3, 4]]).det().unwrap(), q(-2));
        assert_eq!(
            qm(&[&[1, 2, 3]]).det(),
            Err(MatrixError::NonSquare { rows: 1, cols: 3 })
        );
        assert_eq!(Matrix::<Rational>::zeros(0, 0).det().unwrap(), q(1));
    }

    #[test]
    fn zero_leading_pivot() {
        let m = qm(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        assert_eq!(m.det().unwrap(), q(-6));
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(3)]]).unwrap_err();
        assert_eq!(
            err,
            MatrixError::RaggedRows {
                row: 1,
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn float_scalar_works() {
        let m = Matrix::from_rows(vec![vec![1.0f64, 2.0], vec![3.0, 4.0]]).unwrap();
        assert!((m.det().unwrap() + 2.0).abs() < 1e-12);
        let r = Matrix::from_rows(vec![vec![num_rational::Ratio::<i64>::new(1, 2), num_rational::Ratio::new(1, 3)]])
            .unwrap();
        assert_eq!(r.rank(), 1);
    }

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(q).collect()).unwrap())
        })
    }

    fn square_matrix(max_dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
        (1..=max_dim).prop_flat_map(|n| {
            proptest::collection::vec(-4i64..=4, n * n)
                .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(q).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix(5)) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.rows(), m.cols());
            let prod = m.mul(&k.transpose()).unwrap();
            prop_assert!(prod.is_zero());
        }

        #[test]
        fn det_matches_cofactor_and_transpose(m in square_matrix(4)) {
            let d = m.det().unwrap();
            prop_assert_eq!(d.clone(), cofactor_det(&m));
            prop_assert_eq!(d, m.transpose().det().unwrap());
        }

        #[test]
        fn det_row_swap_flips_sign(m in square_matrix(4), a in 0usize..4, b in 0usize..4) {
            let n = m.rows();
            let (a, b) = (a % n, b % n);
            prop_assume!(a != b);
            let mut order: Vec<usize> = (0..n).collect();
            order.swap(a, b);
            prop_assert_eq!(m.select_rows(&order).det().unwrap(), -m.det().unwrap());
        }

        #[test]
        fn rational_round_trip(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
            let x = Rational::new(a.into(), b.into());
            let y = Rational::new(c.into(), d.into());
            prop_assert_eq!((x.clone() + y.clone()) - y.clone(), x.clone());
            if !y.is_zero() {
                prop_assert_eq!((x.clone() * y.clone()) / y, x);
            }
        }
    }
}
