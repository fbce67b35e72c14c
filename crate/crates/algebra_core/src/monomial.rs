use std::cmp::Ordering;

use crate::error::{AlgebraError, Result};

/// A power product `x₀^e₀ ⋯ x_{n−1}^e_{n−1}` with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self { exps, degree }
    }

    pub fn one(n: usize) -> Self {
        Self {
            exps: vec![0; n],
            degree: 0,
        }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial {
            exps,
            degree: self.degree + other.degree,
        })
    }

    /// Product; panics on exponent overflow beyond `u16`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("monomial exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Vec<u16> = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drops one power of variable `i`, if present.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial {
            exps,
            degree: self.degree - 1,
        })
    }

    pub fn raise(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = exps[i].checked_add(1).expect("monomial exponent overflow");
        Monomial {
            exps,
            degree: self.degree + 1,
        }
    }

    /// `Σ eᵢ·wᵢ mod modulus`.
    pub fn weight(&self, weights: &[u32], modulus: u32) -> u32 {
        let s: u64 = self
            .exps
            .iter()
            .zip(weights)
            .map(|(e, w)| *e as u64 * *w as u64)
            .sum();
        (s % modulus as u64) as u32
    }

    /// All monomials of total degree `d` in `n` variables, in descending grevlex order.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if i + 1 == n {
                cur[i] = left as u16;
                out.push(Monomial::new(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::new(vec![]));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| MonomialOrder::Grevlex.compare(b, a));
        out
    }
}

/// Monomial order; variable precedence follows the declared variable list (x₀ > x₁ > …).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1, 0]), &m(&[2, 0, 0])), Ordering::Less);
        // x·z < y² in grevlex with three variables
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.compare(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration() {
        let ms = Monomial::all_of_degree(10, 3);
        assert_eq!(ms.len(), 220);
        assert_eq!(ms[0], m(&[3, 0, 0, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(Monomial::all_of_degree(3, 0).len(), 1);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(m(&[1, 0, 1])));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 1])));
        assert!(m(&[u16::MAX]).try_mul(&m(&[1])).is_err());
    }

    #[test]
    fn weights() {
        let w = [0, 6, 5, 3, 1, 2, 4, 1, 2, 4];
        assert_eq!(m(&[0, 1, 1, 1, 0, 0, 0, 0, 0, 0]).weight(&w, 7), 0);
        assert_eq!(m(&[0, 0, 0, 2, 1, 0, 0, 0, 0, 0]).weight(&w, 7), 0);
    }
}
