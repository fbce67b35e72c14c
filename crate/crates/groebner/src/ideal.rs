//! Ideals given by generators, with a lazily computed Gröbner basis.

use std::sync::{Arc, OnceLock};

use algebra_core::{Field, MonomialOrder, PolyRing, SparsePolynomial};

use crate::basis::{buchberger_with, BuchbergerOptions, GroebnerBasis};
use crate::error::{GroebnerError, Result};

#[derive(Clone, Debug)]
pub struct IdealHandle<K: Field> {
    ring: Arc<PolyRing<K>>,
    generators: Vec<SparsePolynomial<K>>,
    homogeneous: bool,
    cache: OnceLock<GroebnerBasis<K>>,
}

impl<K: Field> IdealHandle<K> {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing<K>>, generators: Vec<SparsePolynomial<K>>) -> Result<Self> {
        if generators
            .iter()
            .any(|g| !algebra_core::poly::same_ring(g.ring(), ring))
        {
            return Err(GroebnerError::RingMismatch);
        }
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        Ok(Self {
            ring: ring.clone(),
            generators,
            homogeneous,
            cache: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing<K>>) -> Self {
        Self {
            ring: ring.clone(),
            generators: Vec::new(),
            homogeneous: true,
            cache: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn generators(&self) -> &[SparsePolynomial<K>] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Cached reduced basis; the first call computes it with `opts`.
    pub fn groebner_basis(&self, opts: &BuchbergerOptions) -> Result<&GroebnerBasis<K>> {
        if let Some(b) = self.cache.get() {
            return Ok(b);
        }
        if self.generators.is_empty() {
            return Err(GroebnerError::EmptyInput);
        }
        let b = buchberger_with(&self.generators, MonomialOrder::Grevlex, opts)?;
        Ok(self.cache.get_or_init(|| b))
    }

    pub fn contains(&self, f: &SparsePolynomial<K>, opts: &BuchbergerOptions) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if self.generators.is_empty() {
            return Ok(false);
        }
        self.groebner_basis(opts)?.contains(f)
    }
}

/// I + J: concatenated generators, fresh cache.
pub fn ideal_sum<K: Field>(i: &IdealHandle<K>, j: &IdealHandle<K>) -> Result<IdealHandle<K>> {
    if !algebra_core::poly::same_ring(&i.ring, &j.ring) {
        return Err(GroebnerError::RingMismatch);
    }
    IdealHandle::new(
        &i.ring,
        i.generators.iter().chain(&j.generators).cloned().collect(),
    )
}

/// I·J: pairwise products of generators, duplicates removed.
pub fn ideal_product<K: Field>(i: &IdealHandle<K>, j: &IdealHandle<K>) -> Result<IdealHandle<K>> {
    if !algebra_core::poly::same_ring(&i.ring, &j.ring) {
        return Err(GroebnerError::RingMismatch);
    }
    let mut out: Vec<SparsePolynomial<K>> = Vec::new();
    for (a, f) in i.generators.iter().enumerate() {
        for (b, g) in j.generators.iter().enumerate() {
            // the same generator list on both sides: skip mirrored pairs
            if std::ptr::eq(i, j) && b < a {
                continue;
            }
            let h = f * g;
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    IdealHandle::new(&i.ring, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::PrimeField;

    #[test]
    fn products_and_sums() {
        let r = PolyRing::new(PrimeField::new(263, 16).unwrap(), &["x", "y"]);
        let x = IdealHandle::new(&r, vec![SparsePolynomial::var(&r, 0)]).unwrap();
        let y = IdealHandle::new(&r, vec![SparsePolynomial::var(&r, 1)]).unwrap();
        let xy = ideal_product(&x, &y).unwrap();
        assert_eq!(
            xy.generators(),
            &[SparsePolynomial::var(&r, 0) * SparsePolynomial::var(&r, 1)]
        );
        assert!(ideal_product(&x, &IdealHandle::zero(&r)).unwrap().is_zero());
        let s = ideal_sum(&x, &IdealHandle::zero(&r)).unwrap();
        assert_eq!(s.generators(), x.generators());
        let both = ideal_sum(&x, &y).unwrap();
        let opts = BuchbergerOptions::default();
        assert!(both
            .contains(
                &(SparsePolynomial::var(&r, 0) + SparsePolynomial::var(&r, 1)),
                &opts
            )
            .unwrap());
        assert!(!x.contains(&SparsePolynomial::var(&r, 1), &opts).unwrap());
    }

    #[test]
    fn square_counts_symmetric_pairs() {
        let r = PolyRing::with_prefix(PrimeField::new(263, 16).unwrap(), "x", 5);
        let gens = (0..5).map(|i| SparsePolynomial::var(&r, i)).collect();
        let i = IdealHandle::new(&r, gens).unwrap();
        assert_eq!(ideal_product(&i, &i).unwrap().generators().len(), 15);
    }
}
