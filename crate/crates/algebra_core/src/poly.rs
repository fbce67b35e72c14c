use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// Variable names, coefficient field and monomial order of a polynomial ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<K: Field> {
    pub field: K,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl<K: Field> PolyRing<K> {
    pub fn new(field: K, vars: &[&str]) -> Arc<Self> {
        Arc::new(Self {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order: MonomialOrder::Grevlex,
        })
    }

    /// Variables `prefix0 … prefix{n−1}`.
    pub fn with_prefix(field: K, prefix: &str, n: usize) -> Arc<Self> {
        Arc::new(Self {
            field,
            vars: (0..n).map(|i| format!("{prefix}{i}")).collect(),
            order: MonomialOrder::Grevlex,
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and order over a different field.
    pub fn with_field<L: Field>(&self, field: L) -> Arc<PolyRing<L>> {
        Arc::new(PolyRing {
            field,
            vars: self.vars.clone(),
            order: self.order,
        })
    }
}

pub fn same_ring<K: Field>(a: &Arc<PolyRing<K>>, b: &Arc<PolyRing<K>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Sparse polynomial; terms are sorted strictly descending under the ring's order, with no zero coefficients.
#[derive(Clone, Debug)]
pub struct SparsePolynomial<K: Field> {
    ring: Arc<PolyRing<K>>,
    terms: Vec<(Monomial, K::Elem)>,
}

impl<K: Field> PartialEq for SparsePolynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Eq for SparsePolynomial<K> {}

impl<K: Field> SparsePolynomial<K> {
    pub fn zero(ring: &Arc<PolyRing<K>>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing<K>>, c: K::Elem) -> Self {
        let n = ring.nvars();
        Self::from_terms(ring, vec![(Monomial::one(n), c)])
    }

    pub fn one(ring: &Arc<PolyRing<K>>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Arc<PolyRing<K>>, i: usize) -> Self {
        Self::from_terms(
            ring,
            vec![(Monomial::var(ring.nvars(), i), ring.field.one())],
        )
    }

    pub fn monomial(ring: &Arc<PolyRing<K>>, m: Monomial, c: K::Elem) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a normalized polynomial from arbitrary terms (combining duplicates, dropping zeros).
    pub fn from_terms(ring: &Arc<PolyRing<K>>, terms: Vec<(Monomial, K::Elem)>) -> Self {
        let f = &ring.field;
        let mut map: FxHashMap<Monomial, K::Elem> = FxHashMap::default();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity differs from ring");
            match map.get_mut(&m) {
                Some(v) => *v = f.add(v, &c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        let order = ring.order;
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from terms already sorted descending, nonzero and distinct.
    pub fn from_sorted_terms(ring: &Arc<PolyRing<K>>, terms: Vec<(Monomial, K::Elem)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !ring.field.is_zero(c)));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn field(&self) -> &K {
        &self.ring.field
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> &[(Monomial, K::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, K::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, K::Elem)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&K::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> K::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(i))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// The common degree when the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            Some(self.terms[0].0.degree())
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "{}",
            AlgebraError::RingMismatch
        );
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.check_ring(other);
        let f = &self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other {
                        f.neg(&b[j].1)
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        f.sub(&a[i].1, &b[j].1)
                    } else {
                        f.add(&a[i].1, &b[j].1)
                    };
                    if !f.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate_other { f.neg(c) } else { c.clone() })),
        );
        Self {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &K::Elem) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Monic rescaling; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) => {
                let inv = self.ring.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let f = &self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(i);
                if e == 0 {
                    return None;
                }
                let c2 = f.mul(c, &f.from_int(e as i64));
                (!f.is_zero(&c2)).then(|| (m.lower(i).expect("positive exponent"), c2))
            })
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    pub fn evaluate(&self, point: &[K::Elem]) -> Result<K::Elem> {
        if point.len() != self.nvars() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.nvars()
            )));
        }
        let f = &self.ring.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v = f.mul(&v, &f.pow(x, e as u64));
                }
            }
            acc = f.add(&acc, &v);
        }
        Ok(acc)
    }

    /// Replaces variable `i` by `images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[SparsePolynomial<K>]) -> Result<SparsePolynomial<K>> {
        if images.len() != self.nvars() || images.is_empty() {
            return Err(AlgebraError::RingMismatch);
        }
        let target = images[0].ring.clone();
        if images.iter().any(|p| !same_ring(&p.ring, &target)) || target.field != self.ring.field {
            return Err(AlgebraError::RingMismatch);
        }
        let mut powers: FxHashMap<(usize, u16), SparsePolynomial<K>> = FxHashMap::default();
        let mut pieces: Vec<SparsePolynomial<K>> = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut acc = SparsePolynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e as u32));
                acc = &acc * p;
                if acc.is_zero() {
                    break;
                }
            }
            pieces.push(acc);
        }
        Ok(sum_all(&target, pieces))
    }

    /// Coefficient-wise map into another ring with the same variables.
    pub fn map_coefficients<L: Field>(
        &self,
        target: &Arc<PolyRing<L>>,
        mut f: impl FnMut(&K::Elem) -> Result<L::Elem>,
    ) -> Result<SparsePolynomial<L>> {
        if target.nvars() != self.nvars() {
            return Err(AlgebraError::RingMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), f(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparsePolynomial::from_terms(target, terms))
    }

    /// Moves the polynomial into a different ring with the same number of variables.
    pub fn into_ring(&self, target: &Arc<PolyRing<K>>) -> Result<SparsePolynomial<K>> {
        if target.nvars() != self.nvars() || target.field != self.ring.field {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(SparsePolynomial {
            ring: target.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_ring(d);
        let f = &self.ring.field;
        let (dm, dc) = d.leading_term()?;
        let dinv = f.inv(dc)?;
        let mut rem = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            let qm = dm.quotient_of(&m)?;
            let qc = f.mul(&c, &dinv);
            rem = &rem - &d.mul_term(&qm, &qc);
            q.push((qm, qc));
        }
        Some(Self::from_terms(&self.ring, q))
    }

    /// Σⱼ xⱼ·∂f/∂xⱼ.
    pub fn euler_operator(&self) -> Self {
        let f = &self.ring.field;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f.mul(c, &f.from_int(m.degree() as i64))))
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    /// Canonical text: `(a/b+c/d*w)*U0^2*U3+…`, or `0`.
    pub fn to_canonical(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push('+');
            }
            s.push_str(&self.ring.field.to_quad(c).to_string());
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => {
                        s.push('*');
                        s.push_str(&self.ring.vars[i]);
                    }
                    _ => {
                        s.push('*');
                        s.push_str(&self.ring.vars[i]);
                        s.push('^');
                        s.push_str(&e.to_string());
                    }
                }
            }
        }
        s
    }

    pub fn parse_canonical(ring: &Arc<PolyRing<K>>, text: &str) -> Result<Self> {
        crate::parse::parse_polynomial(ring, text)
    }
}

pub fn sum_all<K: Field>(
    ring: &Arc<PolyRing<K>>,
    mut pieces: Vec<SparsePolynomial<K>>,
) -> SparsePolynomial<K> {
    while pieces.len() > 1 {
        let mut next = Vec::with_capacity(pieces.len().div_ceil(2));
        let mut it = pieces.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(&a + &b),
                None => next.push(a),
            }
        }
        pieces = next;
    }
    pieces.pop().unwrap_or_else(|| SparsePolynomial::zero(ring))
}

impl<K: Field> fmt::Display for SparsePolynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl<'a, K: Field> Add<&'a SparsePolynomial<K>> for &'a SparsePolynomial<K> {
    type Output = SparsePolynomial<K>;
    fn add(self, o: &SparsePolynomial<K>) -> SparsePolynomial<K> {
        self.merge(o, false)
    }
}

impl<'a, K: Field> Sub<&'a SparsePolynomial<K>> for &'a SparsePolynomial<K> {
    type Output = SparsePolynomial<K>;
    fn sub(self, o: &SparsePolynomial<K>) -> SparsePolynomial<K> {
        self.merge(o, true)
    }
}

impl<K: Field> Neg for &SparsePolynomial<K> {
    type Output = SparsePolynomial<K>;
    fn neg(self) -> SparsePolynomial<K> {
        let f = &self.ring.field;
        SparsePolynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(c)))
                .collect(),
        }
    }
}

impl<'a, K: Field> Mul<&'a SparsePolynomial<K>> for &'a SparsePolynomial<K> {
    type Output = SparsePolynomial<K>;
    fn mul(self, o: &SparsePolynomial<K>) -> SparsePolynomial<K> {
        self.check_ring(o);
        if self.is_zero() || o.is_zero() {
            return SparsePolynomial::zero(&self.ring);
        }
        let f = &self.ring.field;
        let (small, large) = if self.len() <= o.len() {
            (self, o)
        } else {
            (o, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        let mut map: FxHashMap<Monomial, K::Elem> = FxHashMap::with_capacity_and_hasher(
            small.len() * large.len() / 2 + 1,
            Default::default(),
        );
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let m = m1.mul(m2);
                let c = f.mul(c1, c2);
                match map.get_mut(&m) {
                    Some(v) => *v = f.add(v, &c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        let order = self.ring.order;
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        SparsePolynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: Field> $tr for SparsePolynomial<K> {
            type Output = SparsePolynomial<K>;
            fn $m(self, o: SparsePolynomial<K>) -> SparsePolynomial<K> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<K: Field> Neg for SparsePolynomial<K> {
    type Output = SparsePolynomial<K>;
    fn neg(self) -> SparsePolynomial<K> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, QuadExtField};
    use crate::quad::QuadExtScalar;

    fn ring2() -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(PrimeField::new(263, 16).unwrap(), &["x", "y"])
    }

    #[test]
    fn arithmetic_and_text() {
        let r = ring2();
        let x = SparsePolynomial::var(&r, 0);
        let y = SparsePolynomial::var(&r, 1);
        let p = &(&x * &x) * &y;
        assert_eq!(p.to_canonical(), "(1/1+0/1*w)*x^2*y");
        let q = &(&x + &y) * &(&x - &y);
        assert_eq!(q.to_canonical(), "(1/1+0/1*w)*x^2+(262/1+0/1*w)*y^2");
        assert_eq!((&q - &q).to_canonical(), "0");
    }

    #[test]
    fn jacobian_entry_power_rule() {
        let r = ring2();
        let x = SparsePolynomial::var(&r, 0);
        let y = SparsePolynomial::var(&r, 1);
        let p = &(&x * &x) * &y;
        assert_eq!(
            p.derivative(0),
            &(&x * &y) * &SparsePolynomial::constant(&r, 2)
        );
        assert_eq!(p.derivative(1), &x * &x);
    }

    #[test]
    fn substitution_and_division() {
        let r = PolyRing::new(QuadExtField, &["x", "y"]);
        let x = SparsePolynomial::var(&r, 0);
        let y = SparsePolynomial::var(&r, 1);
        let p = &(&x * &x) - &(&y * &y);
        let swapped = p.substitute(&[y.clone(), x.clone()]).unwrap();
        assert_eq!(swapped, -&p);
        assert_eq!(p.substitute(&[x.clone(), y.clone()]).unwrap(), p);
        assert_eq!(p.div_exact(&(&x - &y)).unwrap(), &x + &y);
        assert!(p.div_exact(&(&x + &SparsePolynomial::one(&r))).is_none());
        let c = SparsePolynomial::constant(&r, QuadExtScalar::omega());
        assert_eq!((&c * &c).to_canonical(), "(-7/1+0/1*w)");
    }

    #[test]
    fn euler_identity_small() {
        let r = ring2();
        let x = SparsePolynomial::var(&r, 0);
        let y = SparsePolynomial::var(&r, 1);
        let p = &(&(&x * &x) * &y) + &(&(&y * &y) * &y);
        let lhs = &(&x * &p.derivative(0)) + &(&y * &p.derivative(1));
        assert_eq!(lhs, p.scale(&3));
        assert_eq!(p.euler_operator(), lhs);
    }
}
