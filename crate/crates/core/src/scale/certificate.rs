use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::groebner::{eliminate, Ideal};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    /// The kept variable satisfies a polynomial with no rational root.
    Irrational,
    /// Elimination gave nothing usable, or a rational root exists.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub variable: usize,
    /// Monic generator of the elimination ideal in the kept variable; zero
    /// if that ideal is zero.
    pub minimal_polynomial: Polynomial<Rational>,
    pub rational_roots: Vec<Rational>,
}

impl Certificate {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "variable": self.variable,
            "minimal_polynomial": self.minimal_polynomial.to_string(),
            "rational_roots": self.rational_roots.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

/// Eliminates every variable but `keep` and applies the rational root test to
/// the resulting univariate generator.
pub fn irrationality_certificate(ideal: &Ideal<Rational>, keep: usize) -> Certificate {
    let n = ideal.nvars();
    let others: BTreeSet<usize> = (0..n).filter(|&v| v != keep).collect();
    let elim = eliminate(ideal, &others);
    let minimal_polynomial = elim
        .basis()
        .first()
        .map(|g| g.monic(&MonomialOrder::GrevLex))
        .unwrap_or_else(|| Polynomial::zero(n));
    let coefficients: Vec<Rational> = (0..=minimal_polynomial.degree_in(keep))
        .map(|k| {
            minimal_polynomial.coefficient(&crate::polyring::Monomial::var_pow(keep, k))
        })
        .collect();
    let rational_roots = if minimal_polynomial.is_constant() {
        Vec::new()
    } else {
        rational_roots(&coefficients)
    };
    let kind = if !minimal_polynomial.is_constant() && rational_roots.is_empty() {
        CertificateKind::Irrational
    } else {
        CertificateKind::Inconclusive
    };
    Certificate {
        kind,
        variable: keep,
        minimal_polynomial,
        rational_roots,
    }
}

/// Distinct rational roots of `Σ c_k x^k`, ascending. `c` must not be all
/// zero.
pub(crate) fn rational_roots(c: &[Rational]) -> Vec<Rational> {
    let denominators = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * Rational::from_integer(denominators.clone())).to_integer()).collect();
    let low = ints.iter().position(|x| !x.is_zero()).expect("nonzero polynomial");
    let high = ints.iter().rposition(|x| !x.is_zero()).expect("nonzero polynomial");
    let mut roots = BTreeSet::new();
    if low > 0 {
        roots.insert(Rational::zero());
    }
    if high > low {
        let trimmed = &ints[low..=high];
        for p in divisors(&trimmed[0]) {
            for q in divisors(&trimmed[trimmed.len() - 1]) {
                for sign in [BigInt::one(), -BigInt::one()] {
                    let r = Rational::new(sign * p.clone(), q.clone());
                    if eval(trimmed, &r).is_zero() {
                        roots.insert(r);
                    }
                }
            }
        }
    }
    roots.into_iter().collect()
}

fn eval(c: &[BigInt], x: &Rational) -> Rational {
    c.iter()
        .rev()
        .fold(Rational::zero(), |acc, k| acc * x + Rational::from_integer(k.clone()))
}

/// Positive divisors of `n != 0` by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
