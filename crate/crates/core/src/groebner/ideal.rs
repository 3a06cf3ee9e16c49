use std::fmt;
use std::sync::OnceLock;

use super::{buchberger, normal_form};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::scalar::Field;

/// A finitely generated ideal with a lazily computed reduced grevlex basis.
pub struct Ideal<T> {
    nvars: usize,
    generators: Vec<Polynomial<T>>,
    basis: OnceLock<Vec<Polynomial<T>>>,
}

impl<T: Field> Ideal<T> {
    pub fn new(nvars: usize, generators: Vec<Polynomial<T>>) -> Self {
        debug_assert!(generators.iter().all(|g| g.nvars() == nvars));
        Self {
            nvars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, Vec::new())
    }

    /// Wraps a list already known to be the reduced grevlex basis.
    pub(crate) fn with_basis(nvars: usize, basis: Vec<Polynomial<T>>) -> Self {
        let cache = OnceLock::new();
        let _ = cache.set(basis.clone());
        Self {
            nvars,
            generators: basis,
            basis: cache,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::GrevLex
    }

    pub fn generators(&self) -> &[Polynomial<T>] {
        &self.generators
    }

    /// Reduced grevlex Gröbner basis, computed once.
    pub fn basis(&self) -> &[Polynomial<T>] {
        self.basis
            .get_or_init(|| buchberger(&self.generators, &MonomialOrder::GrevLex))
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis().iter().any(Polynomial::is_constant)
    }

    pub fn contains(&self, f: &Polynomial<T>) -> bool {
        normal_form(f, self.basis(), &MonomialOrder::GrevLex).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<T>) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Canonical strings of the reduced basis.
    pub fn basis_strings(&self) -> Vec<String> {
        self.basis().iter().map(ToString::to_string).collect()
    }
}

impl<T: Field> Clone for Ideal<T> {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Self {
            nvars: self.nvars,
            generators: self.generators.clone(),
            basis,
        }
    }
}

impl<T: Field> fmt::Debug for Ideal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("nvars", &self.nvars)
            .field("generators", &self.generators)
            .finish()
    }
}

impl<T: Field> fmt::Display for Ideal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "ideal({})", gens.join(", "))
    }
}
