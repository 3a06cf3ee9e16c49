use std::str::FromStr;

use thiserror::Error;

use super::{Monomial, Polynomial};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePolynomialError {
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("bad number {0:?}")]
    BadNumber(String),
    #[error("variable x{var} outside a ring with {nvars} variables")]
    VariableOutOfRange { var: usize, nvars: usize },
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek_raw() {
            self.pos += c.len_utf8();
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParsePolynomialError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if !c.is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek_raw() {
                Some(c) => ParsePolynomialError::Unexpected {
                    pos: self.pos,
                    found: c,
                },
                None => ParsePolynomialError::UnexpectedEnd,
            });
        }
        Ok(&self.src[start..self.pos])
    }
}

impl<T: Field + FromStr> Polynomial<T> {
    /// Parses text like `x0*x3 - 2/3*x1^2 + 5` into a ring with `nvars`
    /// variables.
    pub fn parse(src: &str, nvars: usize) -> Result<Self, ParsePolynomialError> {
        let mut cur = Cursor { src, pos: 0 };
        let mut out = Self::zero(nvars);
        let mut first = true;
        loop {
            let negative = match cur.peek() {
                None if first => return Err(ParsePolynomialError::UnexpectedEnd),
                None => break,
                Some('+') => {
                    cur.bump();
                    false
                }
                Some('-') => {
                    cur.bump();
                    true
                }
                Some(c) if !first => {
                    return Err(ParsePolynomialError::Unexpected { pos: cur.pos, found: c })
                }
                Some(_) => false,
            };
            first = false;
            let (m, mut c) = parse_term::<T>(&mut cur, nvars)?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
        }
        Ok(out)
    }
}

fn parse_term<T: Field + FromStr>(
    cur: &mut Cursor<'_>,
    nvars: usize,
) -> Result<(Monomial, T), ParsePolynomialError> {
    let mut coeff = T::one();
    let mut mono = Monomial::one();
    loop {
        match cur.peek() {
            Some('x') => {
                cur.bump();
                let idx = cur.digits()?;
                let var: usize = idx
                    .parse()
                    .map_err(|_| ParsePolynomialError::BadNumber(idx.to_string()))?;
                if var >= nvars {
                    return Err(ParsePolynomialError::VariableOutOfRange { var, nvars });
                }
                let mut exp = 1u32;
                if cur.peek() == Some('^') {
                    cur.bump();
                    let e = cur.digits()?;
                    exp = e
                        .parse()
                        .map_err(|_| ParsePolynomialError::BadNumber(e.to_string()))?;
                }
                mono = mono.mul(&Monomial::var_pow(var, exp));
            }
            Some(c) if c.is_ascii_digit() => {
                let num = cur.digits()?.to_string();
                let text = if cur.peek() == Some('/') {
                    cur.bump();
                    format!("{num}/{}", cur.digits()?)
                } else {
                    num
                };
                let value = T::from_str(&text).map_err(|_| ParsePolynomialError::BadNumber(text))?;
                coeff = coeff * value;
            }
            Some(c) => return Err(ParsePolynomialError::Unexpected { pos: cur.pos, found: c }),
            None => return Err(ParsePolynomialError::UnexpectedEnd),
        }
        if cur.peek() == Some('*') {
            cur.bump();
        } else {
            return Ok((mono, coeff));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::MonomialOrder;
    use crate::Rational;
    use proptest::prelude::*;

    type P = Polynomial<Rational>;

    #[test]
    fn parses_canonical_forms() {
        let p = P::parse("x0*x3*x5*x6 - x1*x2*x4*x7", 8).unwrap();
        assert_eq!(p.to_string(), "x0*x3*x5*x6 - x1*x2*x4*x7");
        let q = P::parse("-1/2*x0 + 3 - x1^2*x0", 2).unwrap();
        assert_eq!(q.to_string(), "-x0*x1^2 - 1/2*x0 + 3");
        assert_eq!(P::parse("2*3*x1", 2).unwrap().to_string(), "6*x1");
    }

    #[test]
    fn rejects_garbage() {
        assert!(P::parse("", 2).is_err());
        assert!(P::parse("x0 x1", 2).is_err());
        assert!(matches!(
            P::parse("x5", 2),
            Err(ParsePolynomialError::VariableOutOfRange { var: 5, nvars: 2 })
        ));
        assert!(P::parse("x0 +", 2).is_err());
    }

    fn small_poly() -> impl Strategy<Value = P> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, 4), -5i64..=5, 1i64..4),
            0..6,
        )
        .prop_map(|terms| {
            P::from_terms(
                4,
                terms.into_iter().map(|(e, a, b)| {
                    (Monomial::from_exponents(&e), Rational::new(a.into(), b.into()))
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in small_poly()) {
            for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
                let text = p.to_string_in(&order);
                prop_assert_eq!(P::parse(&text, 4).unwrap(), p.clone());
            }
        }
    }
}
