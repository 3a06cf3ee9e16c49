use std::collections::{BTreeSet, HashSet};

use super::{all_minors, slack_matrix, MonomialEntries, Object, SlackError, SymbolicSlackMatrix};
use crate::geometry::PointConfiguration;
use crate::groebner::{saturate_by_variables, Ideal};
use crate::polyring::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::{Field, OrderedField};
use crate::scale::{NonIncidenceGraph, SpanningForest};

/// The nonzero `k`-minors, each divided by its monomial content and made
/// monic, without repeats, in minor order.
///
/// Dropping the content is harmless whenever the ideal is afterwards
/// saturated by every variable that can appear in it.
pub fn minor_generators<T: Field>(
    m: &MonomialEntries,
    nvars: usize,
    k: usize,
) -> Vec<Polynomial<T>> {
    let order = MonomialOrder::GrevLex;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in all_minors::<T>(m, nvars, k) {
        if p.is_zero() {
            continue;
        }
        let p = p.div_monomial(&p.monomial_content()).expect("content divides").monic(&order);
        if seen.insert(p.to_string()) {
            out.push(p);
        }
    }
    out
}

/// The `(d+2)`-minors of `s` saturated by the product of all variables.
/// Zero when the matrix has no minor of that size.
pub fn slack_ideal<T: Field>(d: usize, s: &SymbolicSlackMatrix) -> Ideal<T> {
    let n = s.nvars();
    let gens = minor_generators(&s.monomial_entries(), n, d + 2);
    let all: BTreeSet<usize> = (0..n).collect();
    saturate_by_variables(&Ideal::new(n, gens), &all)
}

/// Slack ideal straight from points. Without `d`, uses the affine dimension
/// of the points, which for a matroid is its rank minus one.
pub fn slack_ideal_of_points<T: OrderedField>(
    config: &PointConfiguration<T>,
    object: Object,
    d: Option<usize>,
) -> Result<Ideal<T>, SlackError> {
    let s = slack_matrix(config, object)?;
    let sym = SymbolicSlackMatrix::from_slack(&s)?;
    let d = d.unwrap_or_else(|| config.affine_dim().max(0) as usize);
    Ok(slack_ideal(d, &sym))
}

/// The toric ideal of the cycle space of the non-incidence graph: one
/// binomial per fundamental cycle of a spanning forest, saturated by all
/// variables.
pub fn graphic_ideal<T: Field>(s: &SymbolicSlackMatrix) -> Ideal<T> {
    let n = s.nvars();
    let graph = NonIncidenceGraph::new(s);
    let forest = SpanningForest::kruskal(&graph);
    let in_forest: BTreeSet<usize> = forest.variables().collect();
    let mut gens = Vec::new();
    for v in (0..n).filter(|v| !in_forest.contains(v)) {
        let (r, c) = graph.endpoints(v);
        let path = forest.path(c, r).expect("endpoints share a component");
        let mut plus = Monomial::var(v);
        let mut minus = Monomial::one();
        for (k, &e) in path.iter().enumerate() {
            if k % 2 == 0 {
                minus = minus.mul(&Monomial::var(e));
            } else {
                plus = plus.mul(&Monomial::var(e));
            }
        }
        let binomial = Polynomial::from_terms(n, [(plus, T::one()), (minus, -T::one())]);
        gens.push(binomial);
    }
    let all: BTreeSet<usize> = (0..n).collect();
    saturate_by_variables(&Ideal::new(n, gens), &all)
}
