use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, MonomialOrder, PolyError};
use crate::scalar::Field;

/// A sparse polynomial in `nvars` variables. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Field> Polynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        Self::monomial(nvars, Monomial::one(), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "x{index} outside a ring with {nvars} variables");
        Self::monomial(nvars, Monomial::var(index), T::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: T) -> Self {
        debug_assert!(m.max_var().map_or(true, |v| v < nvars));
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { nvars, terms }
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in storage order (not a monomial order).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &T)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &T)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scales so the leading coefficient in `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&(T::one() / c.clone())),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (k, a) in &self.terms {
            terms.insert(k.div(m)?, a.clone());
        }
        Some(Self {
            nvars: self.nvars,
            terms,
        })
    }

    /// Greatest common monomial divisor of all terms (one for zero).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |g, m| g.gcd(m))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Whether every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next();
        degrees.all(|d| Some(d) == first)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect()
    }

    /// Replaces variables by constants.
    pub fn substitute(&self, values: &BTreeMap<usize, T>) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.iter() {
                match values.get(&v) {
                    Some(x) => {
                        for _ in 0..e {
                            coeff = coeff * x.clone();
                        }
                    }
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), coeff);
        }
        out
    }

    /// Sets every variable in `vars` to one.
    pub fn set_ones(&self, vars: &BTreeSet<usize>) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.restricted(|v| !vars.contains(&v)), c.clone());
        }
        out
    }

    /// Evaluates at a full point.
    pub fn eval(&self, point: &[T]) -> T {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                for _ in 0..e {
                    t = t * point[v].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Same polynomial viewed in a ring with `nvars` variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self, PolyError> {
        if let Some(v) = self.variables().into_iter().find(|&v| v >= nvars) {
            return Err(PolyError::VariableOutOfRange { var: v, nvars });
        }
        Ok(Self {
            nvars,
            terms: self.terms.clone(),
        })
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.max_var().map_or(true, |v| v < self.nvars));
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_universe(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::UniverseMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_universe(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Canonical text form with terms sorted descending in `order`.
    pub fn to_string_in(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&magnitude);
            } else {
                if magnitude != "1" {
                    out.push_str(&magnitude);
                    out.push('*');
                }
                out.push_str(&m.to_string());
            }
        }
        out
    }
}

impl<T: Field> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in(&MonomialOrder::GrevLex))
    }
}

impl<T: Field> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [in {} vars]", self, self.nvars)
    }
}

// Operator forms panic on a variable-universe mismatch; use the `try_*`
// methods where that can happen.
impl<T: Field> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        self.try_add(rhs).expect("polynomial universes differ")
    }
}

impl<T: Field> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self.try_sub(rhs).expect("polynomial universes differ")
    }
}

impl<T: Field> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        self.try_mul(rhs).expect("polynomial universes differ")
    }
}

impl<T: Field> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        self.scale(&-T::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::One;
    use proptest::prelude::*;

    type P = Polynomial<Rational>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    fn c(n: usize, v: i64) -> P {
        P::constant(n, Rational::from_integer(v.into()))
    }

    #[test]
    fn multiply_examples() {
        let n = 2;
        let p = &(&x(n, 0) + &c(n, 1)) * &(&x(n, 0) - &c(n, 1));
        assert_eq!(p.to_string(), "x0^2 - 1");
        assert!((&p * &P::zero(n)).is_zero());
        let s = &x(n, 0) + &x(n, 1);
        assert_eq!((&s * &s).to_string(), "x0^2 + 2*x0*x1 + x1^2");
        assert_eq!(
            P::zero(2).try_mul(&P::zero(3)),
            Err(PolyError::UniverseMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn display_forms() {
        let n = 36;
        let p = &(&x(n, 35).pow(2) + &x(n, 35)) - &c(n, 1);
        assert_eq!(p.to_string(), "x35^2 + x35 - 1");
        let q = (&x(n, 0) - &x(n, 1)).scale(&Rational::new((-1).into(), 2.into()));
        assert_eq!(q.to_string(), "-1/2*x0 + 1/2*x1");
        assert_eq!(P::zero(1).to_string(), "0");
        assert_eq!(c(1, -3).to_string(), "-3");
    }

    #[test]
    fn content_and_substitution() {
        let n = 4;
        let p = &(&(&x(n, 0) * &x(n, 1)) * &x(n, 2)) + &(&x(n, 0) * &x(n, 3));
        assert_eq!(p.monomial_content(), Monomial::var(0));
        let q = p.div_monomial(&Monomial::var(0)).unwrap();
        assert_eq!(q.to_string(), "x1*x2 + x3");
        let ones: BTreeSet<usize> = [1, 2].into_iter().collect();
        assert_eq!(q.set_ones(&ones).to_string(), "x3 + 1");
        let vals: BTreeMap<usize, Rational> = [(3, Rational::one())].into_iter().collect();
        assert_eq!(q.substitute(&vals).to_string(), "x1*x2 + 1");
        assert_eq!(q.eval(&vec![Rational::from_integer(2.into()); 4]), Rational::from_integer(6.into()));
    }

    fn small_poly() -> impl Strategy<Value = P> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -3i64..=3), 0..5).prop_map(
            |terms| {
                P::from_terms(
                    3,
                    terms
                        .into_iter()
                        .map(|(e, k)| (Monomial::from_exponents(&e), Rational::from_integer(k.into()))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(!(&a - &a).terms().any(|_| true));
        }
    }
}
