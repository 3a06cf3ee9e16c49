use std::fmt;

/// A monomial stored as sorted `(variable, exponent)` pairs with no zero
/// exponents.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self { exps: Vec::new() }
    }

    pub fn var(index: usize) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self {
            exps: vec![(index as u32, exp)],
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// repeated variables are added up and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(v, e)| (v as u32, e))
            .collect();
        exps.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Self { exps: merged }
    }

    /// Dense exponent vector; entries beyond the highest variable are zero.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(v, &e)| (v, e)))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        match self.exps.binary_search_by_key(&(var as u32), |&(v, _)| v) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    /// `(variable, exponent)` pairs in increasing variable order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, u32)> + ExactSizeIterator + '_ {
        self.exps.iter().map(|&(v, e)| (v as usize, e))
    }

    pub(crate) fn raw(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v as usize)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Self { exps: out }
    }

    pub fn divides(&self, other: &Self) -> bool {
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j == other.exps.len() || other.exps[j].0 != v || other.exps[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let pairs = self
            .iter()
            .map(|(v, e)| (v, e - other.exponent(v)))
            .collect::<Vec<_>>();
        Some(Self::from_pairs(pairs))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self::from_pairs(self.iter().map(|(v, e)| (v, e.min(other.exponent(v)))))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::from_pairs(
            self.iter()
                .map(|(v, e)| (v, e.max(other.exponent(v))))
                .chain(other.iter().filter(|&(v, _)| self.exponent(v) == 0)),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.iter().all(|(v, _)| other.exponent(v) == 0)
    }

    /// Keeps only the variables satisfying `keep`.
    pub fn restricted(&self, mut keep: impl FnMut(usize) -> bool) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .copied()
                .filter(|&(v, _)| keep(v as usize))
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::from_pairs([(0, 2), (3, 1)]);
        let b = Monomial::from_pairs([(3, 2), (5, 1)]);
        assert_eq!(a.mul(&b), Monomial::from_pairs([(0, 2), (3, 3), (5, 1)]));
        assert_eq!(a.lcm(&b), Monomial::from_pairs([(0, 2), (3, 2), (5, 1)]));
        assert_eq!(a.gcd(&b), Monomial::var(3));
        assert!(Monomial::var(3).divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.degree(), 3);
        assert_eq!(a.to_string(), "x0^2*x3");
    }

    #[test]
    fn no_zero_exponents() {
        let m = Monomial::from_pairs([(1, 0), (2, 1), (2, 1)]);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(2, 2)]);
        assert!(Monomial::from_exponents(&[0, 0, 0]).is_one());
    }
}
