use std::collections::BTreeSet;

use super::{ScaledSlackMatrix, SlackError, SlackMatrix, Source, SymbolicSlackMatrix};
use crate::exactmath::Matrix;
use crate::Rational;

pub const BUILTIN_NAMES: [&str; 4] = ["square", "prism", "perles-reduced", "sphere1963-reduced"];

/// A stored matrix together with the dimension of its polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Builtin {
    pub name: &'static str,
    pub dim: usize,
    pub matrix: BuiltinMatrix,
}

/// Numeric when a rational realization is known, otherwise a pattern,
/// possibly with entries already scaled to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltinMatrix {
    Numeric(SlackMatrix<Rational>),
    Symbolic(SymbolicSlackMatrix),
    Scaled(ScaledSlackMatrix),
}

impl Builtin {
    pub fn symbolic(&self) -> SymbolicSlackMatrix {
        match &self.matrix {
            BuiltinMatrix::Numeric(s) => {
                SymbolicSlackMatrix::from_slack(s).expect("stored matrices are nondegenerate")
            }
            BuiltinMatrix::Symbolic(s) => s.clone(),
            BuiltinMatrix::Scaled(s) => s.base().clone(),
        }
    }

    pub fn numeric(&self) -> Option<&SlackMatrix<Rational>> {
        match &self.matrix {
            BuiltinMatrix::Numeric(s) => Some(s),
            _ => None,
        }
    }
}

const SQUARE: [[i64; 4]; 4] = [[0, 1, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0], [1, 0, 1, 0]];

const PRISM: [&[usize]; 6] = [&[1, 4], &[0, 4], &[1, 2], &[0, 2], &[1, 3], &[0, 3]];

const PERLES_REDUCED: [&[usize]; 12] = [
    &[3, 4, 5],
    &[3, 6, 7, 8],
    &[6, 9, 10],
    &[4, 11, 12],
    &[7, 9, 11],
    &[0, 10, 12],
    &[1, 8],
    &[2, 5],
    &[0, 3, 7],
    &[1, 4, 9],
    &[2, 6, 12],
    &[5, 8, 10, 11],
];

// 'x' a variable, '1' a variable scaled to one, '0' a zero
const SPHERE1963_REDUCED: [&str; 14] = [
    "010000", "0x0010", "010x00", "01xx00", "0xx0x1", "0xxxx1", "010111", "x0x0x1", "x0xx01",
    "x0xxx1", "x00100", "1010x1", "x0xxx1", "x0xxx1",
];

fn pattern_from_supports(rows: &[&[usize]], cols: usize) -> Vec<Vec<bool>> {
    rows.iter()
        .map(|r| (0..cols).map(|j| r.contains(&j)).collect())
        .collect()
}

fn builtin(name: &'static str, dim: usize, matrix: BuiltinMatrix) -> Builtin {
    Builtin { name, dim, matrix }
}

pub fn specific_slack_matrix(name: &str) -> Result<Builtin, SlackError> {
    let q = |x: i64| Rational::from_integer(x.into());
    match name {
        "square" => {
            let rows = SQUARE.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let m = Matrix::from_rows(rows).expect("rectangular");
            Ok(builtin("square", 2, BuiltinMatrix::Numeric(SlackMatrix::new(m, Source::Polytope))))
        }
        "prism" => {
            let rows = pattern_from_supports(&PRISM, 5)
                .into_iter()
                .map(|r| r.into_iter().map(|b| q(b as i64)).collect())
                .collect();
            let m = Matrix::from_rows(rows).expect("rectangular");
            Ok(builtin("prism", 3, BuiltinMatrix::Numeric(SlackMatrix::new(m, Source::Polytope))))
        }
        "perles-reduced" => {
            let s = SymbolicSlackMatrix::from_pattern(&pattern_from_supports(&PERLES_REDUCED, 13))
                .expect("nondegenerate");
            Ok(builtin("perles-reduced", 8, BuiltinMatrix::Symbolic(s)))
        }
        "sphere1963-reduced" => {
            let pattern: Vec<Vec<bool>> = SPHERE1963_REDUCED
                .iter()
                .map(|r| r.bytes().map(|b| b != b'0').collect())
                .collect();
            let base = SymbolicSlackMatrix::from_pattern(&pattern).expect("nondegenerate");
            let ones: BTreeSet<usize> = SPHERE1963_REDUCED
                .iter()
                .flat_map(|r| r.bytes().filter(|&b| b != b'0'))
                .enumerate()
                .filter(|&(_, b)| b == b'1')
                .map(|(v, _)| v)
                .collect();
            let s = ScaledSlackMatrix::new_unchecked(base, ones);
            Ok(builtin("sphere1963-reduced", 5, BuiltinMatrix::Scaled(s)))
        }
        other => Err(SlackError::UnknownName(other.to_string())),
    }
}
