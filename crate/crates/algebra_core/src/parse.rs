use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, SparsePolynomial};
use crate::quad::QuadExtScalar;

pub(crate) struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(s: &'a str) -> Self {
        Self {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    pub(crate) fn expect_end(&self) -> Result<()> {
        if self.pos == self.s.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digit string"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let neg = self.eat(b'-');
        let n = self.digits()?;
        self.expect(b'/')?;
        let d = self.digits()?;
        if d.is_zero() {
            return self.err("zero denominator");
        }
        let r = BigRational::new(n, d);
        Ok(if neg { -r } else { r })
    }

    /// `(a/b+c/d*w)`, accepting `+`, `-` or `+-` before the ω part.
    pub(crate) fn coefficient(&mut self) -> Result<QuadExtScalar> {
        self.expect(b'(')?;
        let re = self.rational()?;
        let im = if self.eat(b'+') || self.peek() == Some(b'-') {
            self.rational()?
        } else {
            return self.err("expected sign before the w part");
        };
        self.expect(b'*')?;
        self.expect(b'w')?;
        self.expect(b')')?;
        Ok(QuadExtScalar::new(re, im))
    }

    fn variable(&mut self, names: &[String]) -> Result<usize> {
        let rest = &self.s[self.pos..];
        let best = names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_bytes()))
            .max_by_key(|(_, n)| n.len());
        match best {
            Some((i, n)) => {
                self.pos += n.len();
                Ok(i)
            }
            None => self.err("unknown variable"),
        }
    }
}

pub(crate) fn parse_polynomial<K: Field>(
    ring: &Arc<PolyRing<K>>,
    text: &str,
) -> Result<SparsePolynomial<K>> {
    let text = text.trim();
    if text == "0" {
        return Ok(SparsePolynomial::zero(ring));
    }
    let mut cur = Cursor::new(text);
    let n = ring.nvars();
    let mut terms = Vec::new();
    loop {
        let q = cur.coefficient()?;
        let c = ring.field.from_quad(&q)?;
        let mut exps = vec![0u16; n];
        while cur.eat(b'*') {
            let v = cur.variable(&ring.vars)?;
            let e: u16 = if cur.eat(b'^') {
                let d = cur.digits()?;
                match u16::try_from(d) {
                    Ok(e) => e,
                    Err(_) => return cur.err("exponent too large"),
                }
            } else {
                1
            };
            exps[v] = exps[v]
                .checked_add(e)
                .ok_or(AlgebraError::ExponentOverflow)?;
        }
        terms.push((Monomial::new(exps), c));
        if !cur.eat(b'+') {
            break;
        }
    }
    cur.expect_end()?;
    Ok(SparsePolynomial::from_terms(ring, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, QuadExtField};

    #[test]
    fn round_trip() {
        let r = PolyRing::with_prefix(QuadExtField, "U", 10);
        let text = "(1/1+0/1*w)*U1*U2*U3+(1/1-1/1*w)*U3^2*U4+(1/1-1/1*w)*U1^2*U5+(1/1-1/1*w)*U2^2*U6+(10/1-2/1*w)*U4*U5*U6";
        let p = SparsePolynomial::parse_canonical(&r, text).unwrap();
        assert_eq!(p.to_canonical(), text);
        assert_eq!(p.len(), 5);
    }

    #[test]
    fn reduction_while_parsing() {
        let r = PolyRing::new(PrimeField::new(263, 16).unwrap(), &["x"]);
        let p = SparsePolynomial::parse_canonical(&r, "(3/1+2/1*w)*x").unwrap();
        assert_eq!(p.to_canonical(), "(35/1+0/1*w)*x");
    }

    #[test]
    fn rejects_garbage() {
        let r = PolyRing::new(QuadExtField, &["x"]);
        assert!(SparsePolynomial::parse_canonical(&r, "(1/1+0/1*w)*z").is_err());
        assert!(SparsePolynomial::parse_canonical(&r, "x").is_err());
        assert!(SparsePolynomial::parse_canonical(&r, "(1/1+0/1*w)*x+").is_err());
    }
}
