use std::collections::BTreeSet;
use std::fmt;

use super::{minor, Axis, SlackError, SlackMatrix};
use crate::polyring::{Monomial, Multigrading, Polynomial};
use crate::scalar::Field;

/// A support pattern with one variable per support cell, numbered row-major
/// from zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymbolicSlackMatrix {
    rows: usize,
    cols: usize,
    var_at: Vec<Option<usize>>,
    cells: Vec<(usize, usize)>,
}

impl SymbolicSlackMatrix {
    /// Fails on an empty row or column, which no slack matrix has.
    pub fn from_pattern(pattern: &[Vec<bool>]) -> Result<Self, SlackError> {
        let rows = pattern.len();
        let cols = pattern.first().map_or(0, Vec::len);
        if let Some(i) = pattern.iter().position(|r| r.len() != cols) {
            return Err(SlackError::RaggedPattern { row: i });
        }
        if let Some(i) = (0..rows).find(|&i| !pattern[i].iter().any(|&b| b)) {
            return Err(SlackError::DegeneratePattern { axis: Axis::Row, index: i });
        }
        if let Some(j) = (0..cols).find(|&j| !pattern.iter().any(|r| r[j])) {
            return Err(SlackError::DegeneratePattern { axis: Axis::Column, index: j });
        }
        Ok(Self::build(pattern))
    }

    fn build(pattern: &[Vec<bool>]) -> Self {
        let rows = pattern.len();
        let cols = pattern.first().map_or(0, Vec::len);
        let mut var_at = Vec::with_capacity(rows * cols);
        let mut cells = Vec::new();
        for (i, row) in pattern.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b {
                    var_at.push(Some(cells.len()));
                    cells.push((i, j));
                } else {
                    var_at.push(None);
                }
            }
        }
        Self {
            rows,
            cols,
            var_at,
            cells,
        }
    }

    pub fn from_slack<T: Field>(s: &SlackMatrix<T>) -> Result<Self, SlackError> {
        Self::from_pattern(&s.support())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.cells.len()
    }

    pub fn var_at(&self, i: usize, j: usize) -> Option<usize> {
        self.var_at[i * self.cols + j]
    }

    /// The cell holding variable `v`.
    pub fn cell(&self, v: usize) -> (usize, usize) {
        self.cells[v]
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn support(&self) -> Vec<Vec<bool>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.var_at(i, j).is_some()).collect())
            .collect()
    }

    /// Rows with a zero in column `j`.
    pub fn zero_set(&self, j: usize) -> BTreeSet<usize> {
        (0..self.rows).filter(|&i| self.var_at(i, j).is_none()).collect()
    }

    pub fn zero_count(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.var_at(i, j).is_none()).count()
    }

    /// The row/column grading of the variables.
    pub fn grading(&self) -> Multigrading {
        Multigrading::new(
            self.rows,
            self.cols,
            self.cells.iter().map(|&c| Some(c)).collect(),
        )
    }

    pub fn entry<T: Field>(&self, i: usize, j: usize) -> Polynomial<T> {
        match self.var_at(i, j) {
            Some(v) => Polynomial::var(self.nvars(), v),
            None => Polynomial::zero(self.nvars()),
        }
    }

    /// The submatrix on `columns`, renumbered.
    /// Submatrix on `columns`, renumbering variables. Rows may end up empty.
    pub fn select_columns(&self, columns: &[usize]) -> Result<Self, SlackError> {
        if let Some(i) = columns.iter().position(|&j| j >= self.cols) {
            return Err(SlackError::DegeneratePattern { axis: Axis::Column, index: i });
        }
        let pattern: Vec<Vec<bool>> = (0..self.rows)
            .map(|i| columns.iter().map(|&j| self.var_at(i, j).is_some()).collect())
            .collect();
        Ok(Self::build(&pattern))
    }

    /// Determinant of the submatrix on `rows` × `cols`.
    pub fn minor<T: Field>(&self, rows: &[usize], cols: &[usize]) -> Polynomial<T> {
        minor(&self.monomial_entries(), self.nvars(), rows, cols)
    }

    pub(crate) fn monomial_entries(&self) -> Vec<Vec<Option<Monomial>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.var_at(i, j).map(Monomial::var))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for SymbolicSlackMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.rows, self.cols, |i, j| match self.var_at(i, j) {
            Some(v) => format!("x{v}"),
            None => "0".into(),
        })
    }
}

impl fmt::Debug for SymbolicSlackMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymbolicSlackMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

/// A symbolic slack matrix with some variables fixed to one. Surviving
/// variables keep their original indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScaledSlackMatrix {
    base: SymbolicSlackMatrix,
    ones: BTreeSet<usize>,
}

impl ScaledSlackMatrix {
    /// No variables fixed.
    pub fn unscaled(base: SymbolicSlackMatrix) -> Self {
        Self {
            base,
            ones: BTreeSet::new(),
        }
    }

    /// Does not check that `ones` is a forest; see [`crate::scale::set_ones`].
    pub(crate) fn new_unchecked(base: SymbolicSlackMatrix, ones: BTreeSet<usize>) -> Self {
        Self { base, ones }
    }

    pub fn base(&self) -> &SymbolicSlackMatrix {
        &self.base
    }

    pub fn ones(&self) -> &BTreeSet<usize> {
        &self.ones
    }

    pub fn rows(&self) -> usize {
        self.base.rows
    }

    pub fn cols(&self) -> usize {
        self.base.cols
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    /// Variables not fixed to one.
    pub fn survivors(&self) -> BTreeSet<usize> {
        (0..self.nvars()).filter(|v| !self.ones.contains(v)).collect()
    }

    pub fn entry<T: Field>(&self, i: usize, j: usize) -> Polynomial<T> {
        match self.base.var_at(i, j) {
            Some(v) if self.ones.contains(&v) => Polynomial::one(self.nvars()),
            _ => self.base.entry(i, j),
        }
    }

    /// Determinant of the submatrix on `rows` × `cols`.
    pub fn minor<T: Field>(&self, rows: &[usize], cols: &[usize]) -> Polynomial<T> {
        minor(&self.monomial_entries(), self.nvars(), rows, cols)
    }

    pub(crate) fn monomial_entries(&self) -> Vec<Vec<Option<Monomial>>> {
        let mut m = self.base.monomial_entries();
        for &v in &self.ones {
            let (i, j) = self.base.cell(v);
            m[i][j] = Some(Monomial::one());
        }
        m
    }
}

impl fmt::Display for ScaledSlackMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.rows(), self.cols(), |i, j| match self.base.var_at(i, j) {
            Some(v) if self.ones.contains(&v) => "1".into(),
            Some(v) => format!("x{v}"),
            None => "0".into(),
        })
    }
}

fn write_grid(
    f: &mut fmt::Formatter<'_>,
    rows: usize,
    cols: usize,
    cell: impl Fn(usize, usize) -> String,
) -> fmt::Result {
    let cells: Vec<Vec<String>> = (0..rows)
        .map(|i| (0..cols).map(|j| cell(i, j)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for (i, row) in cells.iter().enumerate() {
        if i > 0 {
            writeln!(f)?;
        }
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        write!(f, "{}", line.join(" "))?;
    }
    Ok(())
}
