use std::collections::BTreeSet;

use super::ScaleError;
use crate::scalar::Field;
use crate::slack::{SlackMatrix, Source, SymbolicSlackMatrix};

/// A slack matrix given either with numbers or only by its support.
#[derive(Clone, Copy, Debug)]
pub enum SlackInput<'a, T> {
    Numeric(&'a SlackMatrix<T>),
    Symbolic(&'a SymbolicSlackMatrix),
}

/// Columns kept by [`reduced_slack_matrix`] and the renumbered submatrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSlackMatrix {
    pub columns: Vec<usize>,
    pub flag: Vec<usize>,
    pub matrix: SymbolicSlackMatrix,
}

/// Affine dimension of the face cut out by `rows`, read off the rank of the
/// slack rows (they span the same space as the homogenized points).
fn face_dim<T: Field>(s: &SlackMatrix<T>, rows: &BTreeSet<usize>) -> isize {
    let rows: Vec<usize> = rows.iter().copied().collect();
    s.entries.select_rows(&rows).rank() as isize - 1
}

/// `d` columns among `columns`, in the order found, whose successive zero-set
/// intersections have dimensions `d-1, d-2, ..., 0`.
pub fn find_flag<T: Field>(columns: &[usize], s: &SlackMatrix<T>) -> Result<Option<Vec<usize>>, ScaleError> {
    if s.source == Source::Pattern {
        return Err(ScaleError::NeedsNumericData);
    }
    if let Some(&column) = columns.iter().find(|&&j| j >= s.cols()) {
        return Err(ScaleError::ColumnOutOfRange { column, cols: s.cols() });
    }
    let all: BTreeSet<usize> = (0..s.rows()).collect();
    let d = face_dim(s, &all);
    if d <= 0 {
        return Ok(Some(Vec::new()));
    }
    let zero_sets = s.zero_sets();
    let mut chosen = Vec::new();
    Ok(search(s, columns, &zero_sets, &all, d - 1, &mut chosen).then_some(chosen))
}

fn search<T: Field>(
    s: &SlackMatrix<T>,
    columns: &[usize],
    zero_sets: &[BTreeSet<usize>],
    face: &BTreeSet<usize>,
    target: isize,
    chosen: &mut Vec<usize>,
) -> bool {
    if target < 0 {
        return true;
    }
    for &j in columns {
        if chosen.contains(&j) {
            continue;
        }
        let next: BTreeSet<usize> = face.intersection(&zero_sets[j]).copied().collect();
        if face_dim(s, &next) != target {
            continue;
        }
        chosen.push(j);
        if search(s, columns, zero_sets, &next, target - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn contains_flag<T: Field>(columns: &[usize], s: &SlackMatrix<T>) -> Result<bool, ScaleError> {
    Ok(find_flag(columns, s)?.is_some())
}

/// Keeps the flag columns and every non-simplicial column (more than `d`
/// zeros). Without `flag`, a flag is searched for among the non-simplicial
/// columns first, which needs numeric data.
pub fn reduced_slack_matrix<T: Field>(
    d: usize,
    input: SlackInput<'_, T>,
    flag: Option<&[usize]>,
) -> Result<ReducedSlackMatrix, ScaleError> {
    let sym = match input {
        SlackInput::Numeric(s) => SymbolicSlackMatrix::from_slack(s)?,
        SlackInput::Symbolic(s) => s.clone(),
    };
    let cols = sym.cols();
    let zeros: Vec<usize> = (0..cols).map(|j| sym.zero_count(j)).collect();
    let non_simplicial: Vec<usize> = (0..cols).filter(|&j| zeros[j] > d).collect();
    let flag = match (flag, input) {
        (Some(flag), input) => {
            if let Some(&column) = flag.iter().find(|&&j| j >= cols) {
                return Err(ScaleError::ColumnOutOfRange { column, cols });
            }
            if let SlackInput::Numeric(s) = input {
                find_flag(flag, s)?.ok_or(ScaleError::NoFlagFound)?;
            }
            flag.to_vec()
        }
        (None, SlackInput::Numeric(s)) => {
            let order: Vec<usize> = non_simplicial
                .iter()
                .copied()
                .chain((0..cols).filter(|&j| zeros[j] <= d))
                .collect();
            find_flag(&order, s)?.ok_or(ScaleError::NoFlagFound)?
        }
        (None, SlackInput::Symbolic(_)) => return Err(ScaleError::NeedsNumericData),
    };
    let kept: BTreeSet<usize> = flag.iter().chain(&non_simplicial).copied().collect();
    if let Some(column) = (0..cols).find(|j| !kept.contains(j) && zeros[*j] < d) {
        return Err(ScaleError::ComplementNotSimplicial {
            column,
            zeros: zeros[column],
            dim: d,
        });
    }
    let columns: Vec<usize> = kept.into_iter().collect();
    let matrix = sym.select_columns(&columns)?;
    Ok(ReducedSlackMatrix {
        columns,
        flag,
        matrix,
    })
}
