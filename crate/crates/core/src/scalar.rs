//! Scalar traits the library is generic over.
//!
//! Every algorithm in this crate assumes exact arithmetic: zero tests are
//! plain `is_zero` calls and pivots are never chosen by magnitude. The
//! traits are satisfied by floating-point types too, which is occasionally
//! handy for quick numeric checks, but results over `f64` carry no
//! guarantees.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{Num, Signed};

/// A commutative field with exact equality.
pub trait Field:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
}

impl<T> Field for T where
    T: Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
}

/// An ordered field, needed wherever slacks must be nonnegative or circuits
/// positive.
pub trait OrderedField: Field + Signed + PartialOrd {}

impl<T> OrderedField for T where T: Field + Signed + PartialOrd {}

/// The integer `n` as an element of `T`, built by binary expansion so no
/// conversion trait is needed.
pub fn from_i64<T: Field>(n: i64) -> T {
    let two = T::one() + T::one();
    let mut out = T::zero();
    let mut bit = T::one();
    let mut m = n.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            out = out + bit.clone();
        }
        bit = bit.clone() * two.clone();
        m >>= 1;
    }
    if n < 0 {
        -out
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn integers_embed() {
        for n in [-1000i64, -7, -1, 0, 1, 2, 3, 64, 12345, i64::MIN + 1] {
            assert_eq!(from_i64::<BigRational>(n), BigRational::from_integer(n.into()));
            assert_eq!(from_i64::<f64>(n), n as f64);
        }
    }
}
