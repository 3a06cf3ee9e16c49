//! End-to-end acceptance checks. Runs as a plain binary so every criterion
//! reports a single PASS/FAIL line, then exits non-zero if any failed.

#[path = "acceptance/quadratic.rs"]
mod quadratic;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use slackkit::geometry::{combinations, gale_transform};
use slackkit::groebner::{ideal_equals, normal_form, radical_membership};
use slackkit::scale::{
    dehomogenized_ideal, forest_of, irrationality_certificate, rehomogenize, rehomogenize_poly, set_ones,
    set_ones_forest, slack_ideal_contains, CertificateKind, NonIncidenceGraph, SpanningForest,
};
use slackkit::slack::{
    canonical_cofacets, count_minors, graphic_ideal, minor_generators, positive_scaling, slack_from_gale_circuits,
    slack_from_gale_plucker, slack_ideal, slack_matrix, specific_slack_matrix, Object, ScaledSlackMatrix,
    SlackMatrix, SymbolicSlackMatrix, BUILTIN_NAMES,
};
use slackkit::{Ideal, Matrix, MonomialOrder, PointConfiguration, Polynomial, Rational, RationalMatrix};

use quadratic::Q5;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn config(points: &[&[i64]]) -> PointConfiguration<Rational> {
    let rows = points.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    PointConfiguration::new(Matrix::from_rows(rows).unwrap()).unwrap()
}

fn square_points() -> PointConfiguration<Rational> {
    config(&[&[0, 0], &[0, 1], &[1, 1], &[1, 0]])
}

fn prism_points() -> PointConfiguration<Rational> {
    config(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 0, 1], &[1, 1, 0]])
}

fn symbolic(s: &SlackMatrix<Rational>) -> SymbolicSlackMatrix {
    SymbolicSlackMatrix::from_slack(s).unwrap()
}

fn builtin(name: &str) -> SymbolicSlackMatrix {
    specific_slack_matrix(name).unwrap().symbolic()
}

fn strings(ideal: &Ideal) -> BTreeSet<String> {
    ideal.basis_strings().into_iter().collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

const PRISM_FOREST: [usize; 10] = [0, 1, 2, 3, 4, 5, 6, 8, 9, 10];

const PERLES_ONES: [usize; 24] = [
    0, 3, 4, 5, 6, 7, 8, 9, 12, 14, 15, 16, 17, 20, 21, 25, 26, 27, 28, 29, 30, 31, 32, 34,
];

const PERLES_IDEAL: [&str; 12] = [
    "x35^2 + x35 - 1",
    "x33 - x35 - 1",
    "x24 - x35",
    "x23 - x35",
    "x22 - 1",
    "x19 - x35",
    "x18 - x35",
    "x13 - x35 - 1",
    "x11 - x35",
    "x10 - 1",
    "x2 - 1",
    "x1 - x35 - 1",
];

fn perles_scaled() -> ScaledSlackMatrix {
    set_ones(&builtin("perles-reduced"), &PERLES_ONES.into_iter().collect()).unwrap()
}

fn criterion_1() -> Check {
    let s = symbolic(&slack_matrix(&square_points(), Object::Polytope).unwrap());
    let ideal = slack_ideal::<Rational>(2, &s);
    let expected = Polynomial::parse("x0*x3*x5*x6 - x1*x2*x4*x7", 8).unwrap();
    let basis = ideal.basis();
    ensure(basis.len() == 1, || format!("{} generators", basis.len()))?;
    ensure(basis[0] == expected || basis[0] == -&expected, || basis[0].to_string())?;
    Ok(basis[0].to_string())
}

fn criterion_2() -> Check {
    let s = builtin("prism");
    let y = set_ones(&s, &PRISM_FOREST.into_iter().collect()).map_err(|e| e.to_string())?;
    let de = dehomogenized_ideal::<Rational>(3, &y);
    ensure(strings(&de) == set(&["x7 - 1", "x11 - 1"]), || format!("I^F = {:?}", strings(&de)))?;
    let forest = forest_of(&y).map_err(|e| e.to_string())?;
    let h = rehomogenize(&de, &y, &forest);
    let expected = set(&[
        "x4*x7*x9*x10 - x5*x6*x8*x11",
        "x0*x3*x9*x10 - x1*x2*x8*x11",
        "x0*x3*x5*x6 - x1*x2*x4*x7",
    ]);
    ensure(strings(&h) == expected, || format!("H = {:?}", strings(&h)))?;
    ensure(ideal_equals(&h, &slack_ideal(3, &s)), || "H differs from the slack ideal".into())?;
    Ok("I^F = <x7 - 1, x11 - 1>, H = slack ideal (3 binomials)".into())
}

fn criterion_3() -> Check {
    let y = perles_scaled();
    ensure(y.survivors().len() == 12, || format!("{} survivors", y.survivors().len()))?;
    let pairs: Vec<(Vec<usize>, Vec<usize>)> = combinations(12, 10)
        .flat_map(|r| combinations(13, 10).map(move |c| (r.clone(), c)))
        .collect();
    let counted = count_minors(8, 12, 13);
    ensure(counted == 18876u32.into() && pairs.len() == 18876, || {
        format!("count {counted}, enumerated {}", pairs.len())
    })?;
    let nonzero = pairs
        .par_iter()
        .filter(|(r, c)| !y.minor::<Rational>(r, c).is_zero())
        .count();
    let de = dehomogenized_ideal::<Rational>(8, &y);
    ensure(strings(&de) == set(&PERLES_IDEAL), || format!("I^F = {:?}", strings(&de)))?;
    let cert = irrationality_certificate(&de, 35);
    ensure(cert.kind == CertificateKind::Irrational, || format!("{:?}", cert.kind))?;
    ensure(cert.minimal_polynomial.to_string() == "x35^2 + x35 - 1", || {
        cert.minimal_polynomial.to_string()
    })?;
    ensure(cert.rational_roots.is_empty(), || format!("{:?}", cert.rational_roots))?;
    Ok(format!("18876 minors ({nonzero} nonzero), 12 generators, {}", cert.to_json()))
}

fn criterion_4() -> Check {
    let full = count_minors(8, 12, 34);
    let reduced = count_minors(8, 12, 13);
    ensure(full == 8_654_457_240u64.into(), || full.to_string())?;
    ensure(reduced == 18_876u32.into(), || reduced.to_string())?;
    Ok(format!("{full} and {reduced}"))
}

fn forest_content(p: &Polynomial, forest: &BTreeSet<usize>) -> Polynomial {
    p.div_monomial(&p.monomial_content().restricted(|v| forest.contains(&v)))
        .unwrap()
}

fn round_trip_holds(
    s: &SymbolicSlackMatrix,
    y: &ScaledSlackMatrix,
    forest: &SpanningForest,
    rows: &[usize],
    cols: &[usize],
) -> bool {
    let p: Polynomial = s.minor(rows, cols);
    let ones: BTreeSet<usize> = forest.variables().collect();
    rehomogenize_poly(&p.set_ones(&ones), y, forest) == forest_content(&p, &ones)
}

fn criterion_5() -> Check {
    let prism = builtin("prism");
    let y = set_ones(&prism, &PRISM_FOREST.into_iter().collect()).unwrap();
    let forest = forest_of(&y).unwrap();
    let mut prism_checked = 0;
    for rows in combinations(6, 5) {
        for cols in combinations(5, 5) {
            ensure(round_trip_holds(&prism, &y, &forest, &rows, &cols), || {
                format!("prism minor {rows:?} x {cols:?}")
            })?;
            prism_checked += 1;
        }
    }

    let perles = builtin("perles-reduced");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let rows: Vec<Vec<usize>> = combinations(12, 10).collect();
    let cols: Vec<Vec<usize>> = combinations(13, 10).collect();
    // the explicit scaling and the greedy one
    let scalings = [perles_scaled(), set_ones_forest(&perles).0];
    let mut nonzero = 0;
    let mut drawn = 0;
    while nonzero < 120 {
        let r = rows.choose(&mut rng).unwrap();
        let c = cols.choose(&mut rng).unwrap();
        let y = &scalings[drawn % 2];
        drawn += 1;
        let forest = forest_of(y).unwrap();
        ensure(round_trip_holds(&perles, y, &forest, r, c), || format!("Perles minor {r:?} x {c:?}"))?;
        if !perles.minor::<Rational>(r, c).is_zero() {
            nonzero += 1;
        }
    }
    Ok(format!(
        "{prism_checked} prism minors, {drawn} random Perles minors ({nonzero} nonzero)"
    ))
}

fn containments_direct(d: usize, s: &SymbolicSlackMatrix) -> Result<usize, String> {
    let (y, forest) = set_ones_forest(s);
    let h = rehomogenize(&dehomogenized_ideal::<Rational>(d, &y), &y, &forest);
    let i = slack_ideal::<Rational>(d, s);
    for g in i.basis() {
        ensure(normal_form(g, h.basis(), &MonomialOrder::GrevLex).is_zero(), || {
            format!("{g} not in H")
        })?;
    }
    for g in h.basis() {
        ensure(radical_membership(g, &i), || format!("{g} not in the radical"))?;
    }
    Ok(h.basis().len())
}

fn criterion_6() -> Check {
    let square = symbolic(&slack_matrix(&square_points(), Object::Polytope).unwrap());
    let n_square = containments_direct(2, &square)?;
    let n_prism = containments_direct(3, &builtin("prism"))?;

    // The saturated Perles ideal is out of reach, so both containments go
    // through the scaled ideal: the minors generate the slack ideal up to
    // saturation and H is saturated, and membership of a multihomogeneous
    // polynomial in the slack ideal is decided on the forest slice.
    let perles = builtin("perles-reduced");
    let y = perles_scaled();
    let forest = forest_of(&y).unwrap();
    let de = dehomogenized_ideal::<Rational>(8, &y);
    let h = rehomogenize(&de, &y, &forest);
    let basis = h.basis();
    let grading = perles.grading();
    let minors = minor_generators::<Rational>(&monomial_rows(&perles), perles.nvars(), 10);
    let outside = minors
        .par_iter()
        .find_any(|g| !normal_form(g, basis, &MonomialOrder::GrevLex).is_zero());
    ensure(outside.is_none(), || format!("minor {} not in H", outside.unwrap()))?;
    let bad = basis.par_iter().find_any(|g| {
        !grading.multidegree(g).unwrap().is_homogeneous() || !slack_ideal_contains(g, &y, &de)
    });
    ensure(bad.is_none(), || format!("{} not in the slack ideal", bad.unwrap()))?;
    Ok(format!(
        "square |H| = {n_square}, prism |H| = {n_prism}, Perles: {} minors in H, |H| = {} in I_P (slice test)",
        minors.len(),
        basis.len()
    ))
}

/// The symbolic matrix as monomials, for generating its minors.
fn monomial_rows(s: &SymbolicSlackMatrix) -> Vec<Vec<Option<slackkit::Monomial>>> {
    (0..s.rows())
        .map(|i| {
            (0..s.cols())
                .map(|j| s.var_at(i, j).map(slackkit::Monomial::var))
                .collect()
        })
        .collect()
}

/// `a[i][j] a[k][l] / (a[i][l] a[k][j])` over every 2×2 block of nonzeros.
fn cross_ratios(m: &RationalMatrix) -> Vec<Option<Rational>> {
    let mut out = Vec::new();
    for rows in combinations(m.rows(), 2) {
        for cols in combinations(m.cols(), 2) {
            let [i, k] = [rows[0], rows[1]];
            let [j, l] = [cols[0], cols[1]];
            let entries = [m.get(i, j), m.get(k, l), m.get(i, l), m.get(k, j)];
            out.push(
                entries
                    .iter()
                    .all(|x| !x.is_zero())
                    .then(|| entries[0] * entries[1] / (entries[2] * entries[3])),
            );
        }
    }
    out
}

fn criterion_7() -> Check {
    for (name, points) in [("square", square_points()), ("prism", prism_points())] {
        let s = slack_matrix(&points, Object::Polytope).unwrap();
        let g = gale_transform(&points).unwrap();
        let circuits = slack_from_gale_circuits(&g).map_err(|e| e.to_string())?;
        let plucker = slack_from_gale_plucker(&g, &canonical_cofacets(&g)).map_err(|e| e.to_string())?;
        for (method, t) in [("circuits", &circuits), ("plucker", &plucker)] {
            ensure(t.support() == s.support(), || format!("{name}/{method}: zero pattern differs"))?;
            ensure(t.entries.entries().iter().all(|x| !x.is_negative()), || {
                format!("{name}/{method}: negative entry")
            })?;
            ensure(cross_ratios(&t.entries) == cross_ratios(&s.entries), || {
                format!("{name}/{method}: cross-ratios differ")
            })?;
            ensure(positive_scaling(&s.entries, &t.entries).is_some(), || {
                format!("{name}/{method}: no positive scaling")
            })?;
        }
    }
    Ok("square and prism agree with both Gale constructions".into())
}

/// The point of the scaled Perles variety with x35 the positive root of
/// x35^2 + x35 - 1, read off the scaled ideal.
fn perles_realization() -> Result<Matrix<Q5>, String> {
    let y = perles_scaled();
    let de = dehomogenized_ideal::<Rational>(8, &y);
    let root = Q5::new(Rational::new((-1).into(), 2.into()), Rational::new(1.into(), 2.into()));
    ensure(root.clone() * root.clone() + root.clone() - Q5::one() == Q5::zero(), || "bad root".into())?;
    let mut values = vec![Q5::one(); y.nvars()];
    values[35] = root.clone();
    for g in de.basis() {
        let (lead, _) = g.leading_term(&MonomialOrder::GrevLex).unwrap();
        if lead.degree() != 1 {
            continue;
        }
        let v = lead.max_var().unwrap();
        // g = x_v - (a + b x35)
        let rest = g.try_sub(&Polynomial::var(y.nvars(), v)).unwrap();
        let a = -rest.coefficient(&slackkit::Monomial::one());
        let b = -rest.coefficient(&slackkit::Monomial::var(35));
        values[v] = Q5::from(a) + Q5::from(b) * root.clone();
    }
    let base = y.base();
    let mut m = Matrix::filled(base.rows(), base.cols(), Q5::zero());
    for (v, &(i, j)) in base.cells().iter().enumerate() {
        m.set(i, j, values[v].clone());
    }
    ensure(values.iter().all(Q5::is_positive_real), || "non-positive entry".into())?;
    Ok(m)
}

fn criterion_8() -> Check {
    let mut report = Vec::new();
    // rank d+1 wherever a realization is available
    let square = specific_slack_matrix("square").unwrap();
    let rank = square.numeric().unwrap().rank();
    ensure(rank == 3, || format!("square rank {rank}"))?;
    // the stored prism lists the vertices in this order
    let reordered = prism_points().points().select_rows(&[0, 1, 2, 5, 3, 4]);
    let prism = slack_matrix(&PointConfiguration::new(reordered).unwrap(), Object::Polytope).unwrap();
    ensure(
        same_up_to_columns(&symbolic(&prism), &builtin("prism")),
        || "prism realization does not match the stored pattern".into(),
    )?;
    ensure(prism.rank() == 4, || format!("prism rank {}", prism.rank()))?;
    ensure(quadratic::self_check(), || "Q(sqrt 5) arithmetic".into())?;
    let perles = perles_realization()?;
    ensure(perles.rank() == 9, || format!("Perles-reduced rank {}", perles.rank()))?;
    report.push("ranks 3, 4, 9".to_string());

    for name in BUILTIN_NAMES {
        let s = builtin(name);
        let g = NonIncidenceGraph::new(&s);
        let expected = s.nvars() - (g.node_count() - g.component_count());
        let (y, _) = set_ones_forest(&s);
        ensure(y.survivors().len() == expected, || format!("{name}: {} survivors", y.survivors().len()))?;
        if let slackkit::slack::BuiltinMatrix::Scaled(stored) = &specific_slack_matrix(name).unwrap().matrix {
            ensure(stored.survivors().len() == expected, || format!("{name}: stored scaling"))?;
        }
    }
    report.push("survivor counts".into());

    let square_sym = builtin("square");
    let prism_sym = builtin("prism");
    let mut ideals: Vec<(String, SymbolicSlackMatrix, Ideal)> = vec![
        ("square slack".into(), square_sym.clone(), slack_ideal(2, &square_sym)),
        ("prism slack".into(), prism_sym.clone(), slack_ideal(3, &prism_sym)),
    ];
    for name in BUILTIN_NAMES {
        let s = builtin(name);
        let ideal = graphic_ideal(&s);
        ideals.push((format!("{name} graphic"), s, ideal));
    }
    for (label, s, ideal) in &ideals {
        let grading = s.grading();
        for g in ideal.basis() {
            ensure(grading.multidegree(g).unwrap().is_homogeneous(), || format!("{label}: {g}"))?;
        }
    }
    report.push(format!("{} ideals multihomogeneous", ideals.len()));
    Ok(report.join(", "))
}

fn same_up_to_columns(a: &SymbolicSlackMatrix, b: &SymbolicSlackMatrix) -> bool {
    let cols = |s: &SymbolicSlackMatrix| {
        let mut c: Vec<BTreeSet<usize>> = (0..s.cols()).map(|j| s.zero_set(j)).collect();
        c.sort();
        c
    };
    a.rows() == b.rows() && cols(a) == cols(b)
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 square slack ideal", criterion_1, Duration::from_secs(1)),
        ("2 prism pipeline", criterion_2, Duration::from_secs(30)),
        ("3 Perles certificate", criterion_3, Duration::from_secs(600)),
        ("4 minor counts", criterion_4, Duration::from_secs(1)),
        ("5 dehomogenize/rehomogenize round trip", criterion_5, Duration::from_secs(120)),
        ("6 I_P in H in rad I_P", criterion_6, Duration::from_secs(900)),
        ("7 Gale agreement", criterion_7, Duration::from_secs(30)),
        ("8 structural invariants", criterion_8, Duration::from_secs(600)),
    ];
    let only: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failed = 0;
    for (name, check, budget) in criteria {
        if only.as_deref().is_some_and(|o| !name.contains(o)) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > budget {
                Err(format!("over budget ({:.1?} > {budget:?}): {detail}", elapsed))
            } else {
                Ok(detail)
            }
        });
        match result {
            Ok(detail) => println!("criterion {name}: PASS [{elapsed:.2?}] {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL [{elapsed:.2?}] {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
