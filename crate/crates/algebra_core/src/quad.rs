use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

/// An element `re + im·ω` of ℚ(ω), where ω² = −7.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadExtScalar {
    pub re: BigRational,
    pub im: BigRational,
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadExtScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rat(re, 1), rat(im, 1))
    }

    pub fn from_fracs(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(rat(re.0, re.1), rat(im.0, im.1))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    /// The Galois conjugate `re − im·ω`.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Field norm `re² + 7·im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + rat(7, 1) * &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Parses the canonical coefficient form `(a/b+c/d*w)`; `+-` is accepted for the sign.
    pub fn parse_canonical(s: &str) -> Result<Self> {
        let mut p = crate::parse::Cursor::new(s);
        let v = p.coefficient()?;
        p.expect_end()?;
        Ok(v)
    }
}

fn fmt_rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for QuadExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im = if self.im.is_negative() {
            format!("-{}", fmt_rat(&-self.im.clone()))
        } else {
            format!("+{}", fmt_rat(&self.im))
        };
        write!(f, "({}{}*w)", fmt_rat(&self.re), im)
    }
}

impl From<i64> for QuadExtScalar {
    fn from(n: i64) -> Self {
        Self::from_ints(n, 0)
    }
}

impl From<BigRational> for QuadExtScalar {
    fn from(r: BigRational) -> Self {
        Self::new(r, BigRational::zero())
    }
}

impl<'a> Add<&'a QuadExtScalar> for &'a QuadExtScalar {
    type Output = QuadExtScalar;
    fn add(self, o: &QuadExtScalar) -> QuadExtScalar {
        QuadExtScalar::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a QuadExtScalar> for &'a QuadExtScalar {
    type Output = QuadExtScalar;
    fn sub(self, o: &QuadExtScalar) -> QuadExtScalar {
        QuadExtScalar::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a QuadExtScalar> for &'a QuadExtScalar {
    type Output = QuadExtScalar;
    fn mul(self, o: &QuadExtScalar) -> QuadExtScalar {
        let re = &self.re * &o.re - rat(7, 1) * &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        QuadExtScalar::new(re, im)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a QuadExtScalar> for &'a QuadExtScalar {
    type Output = QuadExtScalar;
    fn div(self, o: &QuadExtScalar) -> QuadExtScalar {
        self * &o.inv().expect("division by zero in ℚ(ω)")
    }
}

impl Neg for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn neg(self) -> QuadExtScalar {
        QuadExtScalar::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadExtScalar {
            type Output = QuadExtScalar;
            fn $m(self, o: QuadExtScalar) -> QuadExtScalar {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QuadExtScalar {
    type Output = QuadExtScalar;
    fn neg(self) -> QuadExtScalar {
        -&self
    }
}

impl Zero for QuadExtScalar {
    fn zero() -> Self {
        QuadExtScalar::zero()
    }
    fn is_zero(&self) -> bool {
        QuadExtScalar::is_zero(self)
    }
}

impl One for QuadExtScalar {
    fn one() -> Self {
        QuadExtScalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_squares_to_minus_seven() {
        let w = QuadExtScalar::omega();
        assert_eq!(&w * &w, QuadExtScalar::from(-7));
    }

    #[test]
    fn product_rule() {
        let a = QuadExtScalar::from_fracs((1, 2), (3, 5));
        let b = QuadExtScalar::from_fracs((-4, 3), (1, 7));
        let expected = QuadExtScalar::new(
            rat(1, 2) * rat(-4, 3) - rat(7, 1) * rat(3, 5) * rat(1, 7),
            rat(1, 2) * rat(1, 7) + rat(3, 5) * rat(-4, 3),
        );
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn inverse_and_conjugate() {
        let a = QuadExtScalar::from_ints(3, 2);
        assert_eq!(&a * &a.inv().unwrap(), QuadExtScalar::one());
        assert_eq!((&a * &a.conj()).im, rat(0, 1));
        assert_eq!(a.norm(), rat(37, 1));
        assert!(QuadExtScalar::zero().inv().is_err());
    }

    #[test]
    fn canonical_text() {
        let a = QuadExtScalar::from_ints(1, -1);
        assert_eq!(a.to_string(), "(1/1-1/1*w)");
        assert_eq!(QuadExtScalar::zero().to_string(), "(0/1+0/1*w)");
        assert_eq!(QuadExtScalar::parse_canonical("(1/1-1/1*w)").unwrap(), a);
        assert_eq!(QuadExtScalar::parse_canonical("(1/1+-1/1*w)").unwrap(), a);
        assert_eq!(
            QuadExtScalar::parse_canonical("(-5/8-1/8*w)").unwrap(),
            QuadExtScalar::from_fracs((-5, 8), (-1, 8))
        );
        assert!(QuadExtScalar::parse_canonical("(1/0+0/1*w)").is_err());
    }
}
