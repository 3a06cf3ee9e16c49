//! The real quadratic field Q(√5), enough of it to serve as a matrix scalar.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{Num, One, Signed, Zero};
use slackkit::Rational;

/// `a + b√5`.
#[derive(Clone, Debug, PartialEq)]
pub struct Q5 {
    a: Rational,
    b: Rational,
}

impl Q5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// `a² - 5b²`, nonzero unless the element is zero.
    fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(5.into()) * &self.b * &self.b
    }

    pub fn is_positive_real(&self) -> bool {
        // compare a with -b√5 by squaring when the signs disagree
        match (self.a.is_positive() || self.a.is_zero(), self.b.is_positive() || self.b.is_zero()) {
            (true, true) => !self.is_zero(),
            (false, false) => false,
            (true, false) => self.norm().is_positive(),
            (false, true) => self.norm().is_negative(),
        }
    }
}

impl From<Rational> for Q5 {
    fn from(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }
}

impl fmt::Display for Q5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt5", self.a, self.b)
    }
}

impl Add for Q5 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Q5 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Mul for Q5 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let five = Rational::from_integer(5.into());
        Self::new(&self.a * &o.a + five * &self.b * &o.b, &self.a * &o.b + &self.b * &o.a)
    }
}

impl Div for Q5 {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt 5)");
        let p = self * o.conjugate();
        Self::new(p.a / &n, p.b / n)
    }
}

impl Rem for Q5 {
    type Output = Self;
    fn rem(self, _: Self) -> Self {
        Self::zero()
    }
}

impl Neg for Q5 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Zero for Q5 {
    fn zero() -> Self {
        Self::from(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Q5 {
    fn one() -> Self {
        Self::from(Rational::one())
    }
}

impl Num for Q5 {
    type FromStrRadixErr = <Rational as Num>::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        Rational::from_str_radix(s, radix).map(Self::from)
    }
}

/// Identities of the golden ratio and a few sign decisions.
pub fn self_check() -> bool {
    let half = Rational::new(1.into(), 2.into());
    let phi = Q5::new(half.clone(), half.clone());
    phi.clone() * phi.clone() == phi.clone() + Q5::one()
        && Q5::one() / phi.clone() == phi.clone() - Q5::one()
        && phi.is_positive_real()
        && !(Q5::one() - phi.clone() * phi.clone()).is_positive_real()
        && Q5::new(Rational::from_integer(3.into()), -Rational::one()).is_positive_real()
        && !Q5::new(Rational::from_integer(2.into()), -Rational::one()).is_positive_real()
}
