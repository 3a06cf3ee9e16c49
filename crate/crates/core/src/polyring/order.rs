use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// Term orders. Lower variable indices are larger: `x0 > x1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order for `front`: monomials are compared by graded
    /// reverse lex on the front block first, then on the remaining
    /// variables.
    BlockElimination { front: BTreeSet<usize> },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

impl MonomialOrder {
    pub fn block(front: impl IntoIterator<Item = usize>) -> Self {
        MonomialOrder::BlockElimination {
            front: front.into_iter().collect(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrevLex => grevlex_filtered(a, b, |_| true),
            MonomialOrder::BlockElimination { front } => {
                grevlex_filtered(a, b, |v| front.contains(&v))
                    .then_with(|| grevlex_filtered(a, b, |v| !front.contains(&v)))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::BlockElimination { front } => {
                let vars: Vec<String> = front.iter().map(|v| format!("x{v}")).collect();
                write!(f, "elim({})", vars.join(","))
            }
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    let (a, b) = (a.raw(), b.raw());
    for k in 0.. {
        match (a.get(k), b.get(k)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                if va != vb {
                    // the monomial holding the smaller index has the larger variable
                    return if va < vb {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
        }
    }
    unreachable!()
}

/// Graded reverse lex restricted to the variables accepted by `keep`.
fn grevlex_filtered(a: &Monomial, b: &Monomial, keep: impl Fn(usize) -> bool) -> Ordering {
    let da: u32 = a.iter().filter(|&(v, _)| keep(v)).map(|(_, e)| e).sum();
    let db: u32 = b.iter().filter(|&(v, _)| keep(v)).map(|(_, e)| e).sum();
    if da != db {
        return da.cmp(&db);
    }
    let mut ia = a.iter().rev().filter(|&(v, _)| keep(v)).peekable();
    let mut ib = b.iter().rev().filter(|&(v, _)| keep(v)).peekable();
    loop {
        match (ia.peek().copied(), ib.peek().copied()) {
            (None, None) => return Ordering::Equal,
            // equal degrees make a one-sided exhaustion impossible here
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some((va, ea)), Some((vb, eb))) => {
                if va != vb {
                    // the monomial carrying the smallest variable is smaller
                    return if va > vb {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
                ia.next();
                ib.next();
            }
        }
    }
}
