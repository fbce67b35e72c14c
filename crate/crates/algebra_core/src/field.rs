use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};
use crate::quad::QuadExtScalar;

/// A coefficient field. The field value is a context object; elements are plain data.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    /// 0 for characteristic-zero fields.
    fn characteristic(&self) -> u64;
    /// Maps an element of ℚ(ω) into this field.
    #[allow(clippy::wrong_self_convention)]
    fn from_quad(&self, x: &QuadExtScalar) -> Result<Self::Elem>;
    /// Representative in ℚ(ω), used for canonical text.
    fn to_quad(&self, a: &Self::Elem) -> QuadExtScalar;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|i| self.mul(a, &i))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// ℚ(ω) with ω² = −7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct QuadExtField;

impl Field for QuadExtField {
    type Elem = QuadExtScalar;

    fn zero(&self) -> QuadExtScalar {
        QuadExtScalar::zero()
    }
    fn one(&self) -> QuadExtScalar {
        QuadExtScalar::one()
    }
    fn is_zero(&self, a: &QuadExtScalar) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &QuadExtScalar, b: &QuadExtScalar) -> QuadExtScalar {
        a + b
    }
    fn sub(&self, a: &QuadExtScalar, b: &QuadExtScalar) -> QuadExtScalar {
        a - b
    }
    fn neg(&self, a: &QuadExtScalar) -> QuadExtScalar {
        -a
    }
    fn mul(&self, a: &QuadExtScalar, b: &QuadExtScalar) -> QuadExtScalar {
        a * b
    }
    fn inv(&self, a: &QuadExtScalar) -> Option<QuadExtScalar> {
        a.inv().ok()
    }
    fn from_int(&self, n: i64) -> QuadExtScalar {
        QuadExtScalar::from(n)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_quad(&self, x: &QuadExtScalar) -> Result<QuadExtScalar> {
        Ok(x.clone())
    }
    fn to_quad(&self, a: &QuadExtScalar) -> QuadExtScalar {
        a.clone()
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_quad(&self, x: &QuadExtScalar) -> Result<BigRational> {
        if x.im.is_zero() {
            Ok(x.re.clone())
        } else {
            Err(AlgebraError::InvalidPrimeField(format!(
                "{x} is not rational"
            )))
        }
    }
    fn to_quad(&self, a: &BigRational) -> QuadExtScalar {
        QuadExtScalar::from(a.clone())
    }
}

/// GF(p) together with a chosen square root `r` of −7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
    r: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Accepts primes below 2³¹ that do not divide 14 and a residue with r² ≡ −7.
    pub fn new(p: u64, sqrt_minus7: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::InvalidPrimeField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(AlgebraError::InvalidPrimeField(format!("{p} exceeds 2^31")));
        }
        if p == 2 || p == 7 {
            return Err(AlgebraError::InvalidPrimeField(format!("{p} divides 14")));
        }
        let r = sqrt_minus7 % p;
        if !(r * r + 7).is_multiple_of(p) {
            return Err(AlgebraError::InvalidPrimeField(format!(
                "{sqrt_minus7}^2 is not -7 modulo {p}"
            )));
        }
        Ok(Self { p, r: r as u32 })
    }

    /// Smallest residue r in [1, p−1] with r² ≡ −7 (mod p), if any.
    pub fn smallest_sqrt_minus7(p: u64) -> Option<u64> {
        (1..p).find(|&r| (r * r + 7) % p == 0)
    }

    pub fn with_smallest_root(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::InvalidPrimeField(format!("{p} is not prime")));
        }
        let r = Self::smallest_sqrt_minus7(p).ok_or_else(|| {
            AlgebraError::InvalidPrimeField(format!("-7 is not a square modulo {p}"))
        })?;
        Self::new(p, r)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn sqrt_minus7(&self) -> u32 {
        self.r
    }

    /// The same prime with the other square root of −7 (image of ω ↦ −ω).
    pub fn conjugate(&self) -> Self {
        Self {
            p: self.p,
            r: ((self.p - self.r as u64) % self.p) as u32,
        }
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    fn reduce_bigint(&self, n: &BigInt) -> u32 {
        let m = BigInt::from(self.p);
        n.mod_floor(&m).to_u64().expect("residue fits") as u32
    }

    pub fn reduce_rational(&self, x: &BigRational) -> Result<u32> {
        let d = self.reduce_bigint(x.denom());
        if d == 0 {
            return Err(AlgebraError::DenominatorNotInvertible {
                denominator: x.denom().to_string(),
                modulus: self.p,
            });
        }
        let n = self.reduce_bigint(x.numer());
        Ok(self.mul(&n, &self.inv(&d).expect("nonzero residue")))
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (if s >= self.p { s - self.p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        (if a >= b {
            *a as u64 - *b as u64
        } else {
            *a as u64 + self.p - *b as u64
        }) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            (self.p - *a as u64) as u32
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        Some(t.rem_euclid(self.p as i64) as u32)
    }
    fn from_int(&self, n: i64) -> u32 {
        self.reduce_i64(n)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn from_quad(&self, x: &QuadExtScalar) -> Result<u32> {
        reduce_to_prime_field(x, self)
    }
    fn to_quad(&self, a: &u32) -> QuadExtScalar {
        QuadExtScalar::from(*a as i64)
    }
}

/// The ring homomorphism ℤ[ω]_(p) → GF(p), ω ↦ r.
pub fn reduce_to_prime_field(x: &QuadExtScalar, f: &PrimeField) -> Result<u32> {
    let a = f.reduce_rational(&x.re)?;
    let b = f.reduce_rational(&x.im)?;
    Ok(f.add(&a, &f.mul(&b, &f.r)))
}

/// Exponent e with 7·e ≡ 1 (mod p − 1), when gcd(7, p − 1) = 1.
pub fn seventh_root_exponent(p: u64) -> Option<u64> {
    let m = p - 1;
    (1..m).find(|&e| (7 * e) % m == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::rat;

    fn f263() -> PrimeField {
        PrimeField::new(263, 16).unwrap()
    }

    #[test]
    fn omega_reduces_to_sixteen() {
        assert_eq!(
            reduce_to_prime_field(&QuadExtScalar::omega(), &f263()),
            Ok(16)
        );
        assert_eq!(
            reduce_to_prime_field(&QuadExtScalar::zero(), &f263()),
            Ok(0)
        );
        assert_eq!(
            reduce_to_prime_field(&QuadExtScalar::from_ints(3, 2), &f263()),
            Ok(35)
        );
    }

    #[test]
    fn bad_denominator() {
        let x = QuadExtScalar::new(rat(1, 263), rat(0, 1));
        assert!(matches!(
            reduce_to_prime_field(&x, &f263()),
            Err(AlgebraError::DenominatorNotInvertible { .. })
        ));
    }

    #[test]
    fn prime_field_validation() {
        assert!(PrimeField::new(263, 15).is_err());
        assert!(PrimeField::new(264, 16).is_err());
        assert!(PrimeField::with_smallest_root(5).is_err());
        assert!(PrimeField::new(7, 0).is_err());
        let f = PrimeField::with_smallest_root(263).unwrap();
        assert_eq!(f.sqrt_minus7(), 16);
        let g = PrimeField::with_smallest_root(337).unwrap();
        assert_eq!(g.sqrt_minus7(), 88);
        assert_eq!(f.conjugate().sqrt_minus7(), 247);
    }

    #[test]
    fn seventh_root_exponent_263() {
        assert_eq!(seventh_root_exponent(263), Some(75));
        assert_eq!(seventh_root_exponent(337), None);
    }

    #[test]
    fn prime_field_inverse() {
        let f = f263();
        for a in 1..263u32 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
    }
}
