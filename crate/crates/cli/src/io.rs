//! Reading and writing matrices, patterns and ideals.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use slackkit::slack::{ScaledSlackMatrix, SymbolicSlackMatrix};
use slackkit::{Ideal, Rational, RationalMatrix};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },
    #[error("not a rational number: {0:?}")]
    BadRational(String),
    #[error("pattern entries must be 0 or 1, got {0:?}")]
    BadPatternEntry(String),
    #[error("invalid JSON matrix: {0}")]
    Json(String),
    #[error("empty matrix")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    /// JSON when the input opens with `[`, text otherwise.
    pub fn detect(input: &str) -> Self {
        if input.trim_start().starts_with('[') {
            Format::Json
        } else {
            Format::Text
        }
    }
}

/// Accepts integers, `p/q` and decimals such as `-1.25`.
pub fn parse_rational(token: &str) -> Result<Rational, InputError> {
    let bad = || InputError::BadRational(token.to_string());
    let int = |s: &str| s.parse::<BigInt>().map_err(|_| bad());
    if let Some((p, q)) = token.split_once('/') {
        let q = int(q)?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(int(p)?, q));
    }
    if let Some((whole, frac)) = token.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => int(w)?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = Rational::new(whole * &scale + int(frac)?, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    Ok(Rational::from_integer(int(token)?))
}

fn rows_of_tokens(input: &str, format: Format) -> Result<Vec<Vec<String>>, InputError> {
    let rows: Vec<Vec<String>> = match format {
        Format::Text => input
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(str::to_string).collect())
            .collect(),
        Format::Json => {
            let value: Value = serde_json::from_str(input).map_err(|e| InputError::Json(e.to_string()))?;
            let not_matrix = || InputError::Json("expected an array of arrays".into());
            value
                .as_array()
                .ok_or_else(not_matrix)?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(not_matrix)?
                        .iter()
                        .map(|x| match x {
                            Value::String(s) => Ok(s.clone()),
                            Value::Number(n) => Ok(n.to_string()),
                            other => Err(InputError::BadRational(other.to_string())),
                        })
                        .collect()
                })
                .collect::<Result<_, _>>()?
        }
    };
    let expected = rows.first().ok_or(InputError::Empty)?.len();
    if expected == 0 {
        return Err(InputError::Empty);
    }
    if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != expected) {
        return Err(InputError::RaggedRows { row, expected, found: r.len() });
    }
    Ok(rows)
}

pub fn parse_matrix(input: &str, format: Format) -> Result<RationalMatrix, InputError> {
    let rows = rows_of_tokens(input, format)?
        .iter()
        .map(|r| r.iter().map(|t| parse_rational(t)).collect())
        .collect::<Result<Vec<Vec<_>>, _>>()?;
    Ok(RationalMatrix::from_rows(rows).expect("rows checked rectangular"))
}

fn is_variable(token: &str) -> bool {
    token.len() > 1 && token.starts_with('x') && token[1..].bytes().all(|b| b.is_ascii_digit())
}

/// A support pattern: `1` or a variable name such as `x7` marks a nonzero
/// entry, so symbolic matrices read back as their support.
pub fn parse_pattern(input: &str, format: Format) -> Result<Vec<Vec<bool>>, InputError> {
    rows_of_tokens(input, format)?
        .iter()
        .map(|r| {
            r.iter()
                .map(|t| match parse_rational(t) {
                    _ if is_variable(t) => Ok(true),
                    Ok(x) if x.is_zero() => Ok(false),
                    Ok(x) if x.is_one() => Ok(true),
                    _ => Err(InputError::BadPatternEntry(t.clone())),
                })
                .collect()
        })
        .collect()
}

fn grid(cells: &[Vec<String>]) -> String {
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    cells
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn emit_cells(cells: Vec<Vec<String>>, format: Format) -> String {
    match format {
        Format::Text => grid(&cells),
        Format::Json => json!(cells).to_string(),
    }
}

pub fn format_matrix(m: &RationalMatrix, format: Format) -> String {
    let cells = m.row_iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    emit_cells(cells, format)
}

pub fn format_pattern(pattern: &[Vec<bool>], format: Format) -> String {
    let cells = pattern
        .iter()
        .map(|r| r.iter().map(|&b| if b { "1" } else { "0" }.to_string()).collect())
        .collect();
    emit_cells(cells, format)
}

fn symbolic_cells(rows: usize, cols: usize, cell: impl Fn(usize, usize) -> String) -> Vec<Vec<String>> {
    (0..rows).map(|i| (0..cols).map(|j| cell(i, j)).collect()).collect()
}

pub fn format_symbolic(s: &SymbolicSlackMatrix, format: Format) -> String {
    let cells = symbolic_cells(s.rows(), s.cols(), |i, j| {
        s.var_at(i, j).map_or("0".into(), |v| format!("x{v}"))
    });
    emit_cells(cells, format)
}

pub fn format_scaled(s: &ScaledSlackMatrix, format: Format) -> String {
    let cells = symbolic_cells(s.rows(), s.cols(), |i, j| match s.base().var_at(i, j) {
        Some(v) if s.ones().contains(&v) => "1".into(),
        Some(v) => format!("x{v}"),
        None => "0".into(),
    });
    emit_cells(cells, format)
}

/// Reduced Gröbner basis, one generator per line, or `{order, generators}`.
pub fn format_ideal(ideal: &Ideal, format: Format) -> String {
    let gens = ideal.basis_strings();
    match format {
        Format::Text => gens.join("\n"),
        Format::Json => json!({ "order": ideal.order().to_string(), "generators": gens }).to_string(),
    }
}

pub fn format_indices(indices: impl IntoIterator<Item = usize>) -> String {
    indices.into_iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}
