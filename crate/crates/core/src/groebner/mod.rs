//! Ideal arithmetic on top of a Buchberger engine: normal forms, reduced
//! Gröbner bases, elimination, saturation, equality and radical membership.

mod engine;
mod ideal;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::polyring::{MonomialOrder, Polynomial};
use crate::scalar::Field;
use engine::Ring;

pub use ideal::Ideal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("cannot saturate by the zero polynomial")]
    ZeroDivisorPolynomial,
    #[error("ideals live in rings with {left} and {right} variables")]
    UniverseMismatch { left: usize, right: usize },
}

/// Restriction of a computation to the variables that occur in it.
struct Compressed {
    /// compressed index -> original index
    back: Vec<usize>,
    /// original index -> compressed index (usize::MAX when unused)
    map: Vec<usize>,
}

impl Compressed {
    fn new<T: Field>(nvars: usize, polys: &[&Polynomial<T>]) -> Self {
        Self::with_last(nvars, polys, None)
    }

    /// Like [`Compressed::new`], but with `last` (if used) moved to the end,
    /// where grevlex makes it the cheapest variable.
    fn with_last<T: Field>(nvars: usize, polys: &[&Polynomial<T>], last: Option<usize>) -> Self {
        let used: BTreeSet<usize> = polys.iter().flat_map(|p| p.variables()).collect();
        let mut back: Vec<usize> = used.iter().copied().filter(|&v| Some(v) != last).collect();
        back.extend(last.filter(|v| used.contains(v)));
        let mut map = vec![usize::MAX; nvars];
        for (k, &v) in back.iter().enumerate() {
            map[v] = k;
        }
        Self { back, map }
    }

    fn order(&self, order: &MonomialOrder) -> MonomialOrder {
        match order {
            MonomialOrder::BlockElimination { front } => MonomialOrder::BlockElimination {
                front: front
                    .iter()
                    .filter_map(|&v| self.map.get(v).copied().filter(|&k| k != usize::MAX))
                    .collect(),
            },
            other => other.clone(),
        }
    }

    fn ring(&self, order: &MonomialOrder) -> Ring {
        Ring::new(self.back.len(), &self.order(order))
    }
}

/// Remainder of multivariate division of `f` by `divisors`: no term of the
/// result is divisible by a leading term of a divisor.
pub fn normal_form<T: Field>(
    f: &Polynomial<T>,
    divisors: &[Polynomial<T>],
    order: &MonomialOrder,
) -> Polynomial<T> {
    let nvars = f.nvars();
    let mut all: Vec<&Polynomial<T>> = divisors.iter().collect();
    all.push(f);
    let comp = Compressed::new(nvars, &all);
    let ring = comp.ring(order);
    let basis: Vec<_> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.import(g, &comp.map))
        .collect();
    let refs: Vec<_> = basis.iter().collect();
    let r = ring.reduce(ring.import(f, &comp.map), &refs);
    ring.export(&r, &comp.back, nvars)
}

/// The reduced Gröbner basis of `gens` under `order`: monic, sorted by
/// descending leading monomial. The zero ideal gives an empty list.
pub fn buchberger<T: Field>(gens: &[Polynomial<T>], order: &MonomialOrder) -> Vec<Polynomial<T>> {
    let Some(nvars) = gens.first().map(Polynomial::nvars) else {
        return Vec::new();
    };
    let refs: Vec<&Polynomial<T>> = gens.iter().collect();
    let comp = Compressed::new(nvars, &refs);
    let ring = comp.ring(order);
    let input = gens.iter().map(|g| ring.import(g, &comp.map)).collect();
    ring.groebner(input)
        .iter()
        .map(|p| ring.export(p, &comp.back, nvars))
        .collect()
}

fn lift<T: Field>(p: &Polynomial<T>, nvars: usize) -> Polynomial<T> {
    p.with_nvars(nvars).expect("lifting into a larger ring")
}

/// `I : f^∞` via `I + <1 - t f>` and elimination of the fresh variable `t`.
pub fn saturate<T: Field>(ideal: &Ideal<T>, f: &Polynomial<T>) -> Result<Ideal<T>, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisorPolynomial);
    }
    let n = ideal.nvars();
    if f.nvars() != n {
        return Err(GroebnerError::UniverseMismatch {
            left: n,
            right: f.nvars(),
        });
    }
    let mut gens: Vec<Polynomial<T>> = ideal.basis().to_vec();
    if gens.is_empty() || f.is_constant() || ideal.is_unit() {
        return Ok(Ideal::with_basis(n, gens));
    }
    if f.len() == 1 {
        // x^a g lies in I forces g into I : x^∞
        let support = f.variables();
        let mut changed = false;
        for g in &mut gens {
            let content = g.monomial_content().restricted(|v| support.contains(&v));
            if !content.is_one() {
                *g = g.div_monomial(&content).expect("content divides");
                changed = true;
            }
        }
        if changed {
            gens = buchberger(&gens, &MonomialOrder::GrevLex);
        }
        // a variable absent from the basis is a nonzerodivisor
        let occurs = gens.iter().any(|g| g.variables().iter().any(|v| support.contains(v)));
        if !occurs {
            return Ok(Ideal::with_basis(n, gens));
        }
    }
    let t = n;
    let mut ext: Vec<Polynomial<T>> = gens.iter().map(|g| lift(g, n + 1)).collect();
    let tf = &Polynomial::var(n + 1, t) * &lift(f, n + 1);
    ext.push(&Polynomial::one(n + 1) - &tf);
    let basis = buchberger(&ext, &MonomialOrder::block([t]));
    let kept = basis
        .into_iter()
        .filter(|g| g.degree_in(t) == 0)
        .map(|g| g.with_nvars(n).expect("t eliminated"))
        .collect();
    Ok(Ideal::with_basis(n, kept))
}

/// `((I : x_a^∞) : x_b^∞) ...`, equal to `I : (∏ x_v)^∞`.
pub fn saturate_by_variables<T: Field>(ideal: &Ideal<T>, vars: &BTreeSet<usize>) -> Ideal<T> {
    let n = ideal.nvars();
    if ideal.generators().iter().all(Polynomial::is_homogeneous) {
        let mut gens = ideal.generators().to_vec();
        for &v in vars {
            gens = saturate_homogeneous(&gens, v);
        }
        return Ideal::new(n, gens);
    }
    let mut current = ideal.clone();
    for &v in vars {
        if current.is_zero() || current.is_unit() {
            break;
        }
        current = saturate(&current, &Polynomial::var(n, v)).expect("variables are nonzero");
    }
    current
}

/// Generators of `I : x_v^∞` for homogeneous `I`: in a grevlex basis with
/// `x_v` smallest, a leading term is divisible by `x_v` only if the whole
/// element is, so dividing out the powers of `x_v` gives a basis of the
/// saturation.
fn saturate_homogeneous<T: Field>(gens: &[Polynomial<T>], v: usize) -> Vec<Polynomial<T>> {
    if !gens.iter().any(|g| g.degree_in(v) > 0) {
        return gens.to_vec();
    }
    let nvars = gens[0].nvars();
    let refs: Vec<&Polynomial<T>> = gens.iter().collect();
    let comp = Compressed::with_last(nvars, &refs, Some(v));
    let ring = comp.ring(&MonomialOrder::GrevLex);
    let input = gens.iter().map(|g| ring.import(g, &comp.map)).collect();
    ring.groebner(input)
        .iter()
        .map(|p| {
            let g = ring.export(p, &comp.back, nvars);
            let content = g.monomial_content().restricted(|u| u == v);
            g.div_monomial(&content).expect("content divides")
        })
        .collect()
}

/// `I ∩ k[remaining variables]`, as a reduced grevlex basis.
pub fn eliminate<T: Field>(ideal: &Ideal<T>, vars: &BTreeSet<usize>) -> Ideal<T> {
    let n = ideal.nvars();
    if vars.is_empty() {
        return Ideal::with_basis(n, ideal.basis().to_vec());
    }
    let basis = buchberger(ideal.basis(), &MonomialOrder::block(vars.iter().copied()));
    let kept: Vec<Polynomial<T>> = basis
        .into_iter()
        .filter(|g| g.variables().is_disjoint(vars))
        .collect();
    Ideal::with_basis(n, kept)
}

/// Equality via reduced grevlex bases.
pub fn ideal_equals<T: Field>(a: &Ideal<T>, b: &Ideal<T>) -> bool {
    a.nvars() == b.nvars() && a.basis() == b.basis()
}

/// Whether `f` lies in the radical of `I`: `1 ∈ I + <1 - t f>`.
pub fn radical_membership<T: Field>(f: &Polynomial<T>, ideal: &Ideal<T>) -> bool {
    let n = ideal.nvars();
    if f.is_zero() || ideal.contains(f) {
        return true;
    }
    let t = n;
    let mut ext: Vec<Polynomial<T>> = ideal.basis().iter().map(|g| lift(g, n + 1)).collect();
    let tf = &Polynomial::var(n + 1, t) * &lift(f, n + 1);
    ext.push(&Polynomial::one(n + 1) - &tf);
    let basis = buchberger(&ext, &MonomialOrder::GrevLex);
    basis.len() == 1 && basis[0].is_constant()
}
