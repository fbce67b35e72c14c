//! Reduced Gröbner bases of polynomial ideals and submodules of free modules.

use std::sync::Arc;
use std::time::Duration;

use algebra_core::{Field, Monomial, MonomialOrder, PolyRing, SparsePolynomial};

use crate::engine::{sort_terms, Engine, EngineOptions, EngineStats, Layout, Reducer, Terms};
use crate::error::{GroebnerError, Result};

/// Knobs for a Buchberger run.
#[derive(Clone, Debug, Default)]
pub struct BuchbergerOptions {
    /// Truncate at this degree (homogeneous input only).
    pub degree_cap: Option<u32>,
    /// Allow characteristic-zero coefficient fields.
    pub allow_characteristic_zero: bool,
    /// Abort after this many S-pair reductions.
    pub max_pairs: Option<u64>,
    /// Abort after this much wall time.
    pub time_limit: Option<Duration>,
}

impl BuchbergerOptions {
    fn engine(&self) -> EngineOptions {
        EngineOptions {
            degree_cap: self.degree_cap,
            max_pairs: self.max_pairs,
            time_limit: self.time_limit,
        }
    }
}

fn check_field<K: Field>(field: &K, opts: &BuchbergerOptions) -> Result<()> {
    if field.characteristic() == 0 && !opts.allow_characteristic_zero {
        return Err(GroebnerError::CoefficientFieldUnsupported);
    }
    Ok(())
}

pub(crate) fn pack_poly<K: Field>(
    layout: &Layout,
    f: &SparsePolynomial<K>,
    comp: usize,
) -> Result<Terms<K::Elem>> {
    let mut t = f
        .terms()
        .iter()
        .map(|(m, c)| Ok((layout.pack(m.exponents(), comp)?, c.clone())))
        .collect::<Result<Terms<K::Elem>>>()?;
    sort_terms(&mut t);
    Ok(t)
}

pub(crate) fn unpack_poly<K: Field>(
    ring: &Arc<PolyRing<K>>,
    layout: &Layout,
    t: &[(crate::engine::Mon, K::Elem)],
) -> SparsePolynomial<K> {
    SparsePolynomial::from_sorted_terms(
        ring,
        t.iter()
            .map(|(m, c)| (Monomial::new(layout.exps(*m)), c.clone()))
            .collect(),
    )
}

/// A reduced, monic Gröbner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field> {
    ring: Arc<PolyRing<K>>,
    generators: Vec<SparsePolynomial<K>>,
    stats: EngineStats,
    truncated: bool,
    degree_cap: Option<u32>,
    reducer: Reducer<K::Elem>,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    /// Basis elements sorted ascending by leading monomial.
    pub fn generators(&self) -> &[SparsePolynomial<K>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    pub fn stats(&self) -> &EngineStats {
        &self.stats
    }

    /// True when pairs or generators above the degree cap were dropped.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    pub fn normal_form(&self, f: &SparsePolynomial<K>) -> Result<SparsePolynomial<K>> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &SparsePolynomial<K>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// One canonical polynomial per line.
    pub fn to_canonical_lines(&self) -> String {
        self.generators
            .iter()
            .map(|g| g.to_canonical() + "\n")
            .collect()
    }
}

/// Reduced Gröbner basis with default options plus an optional degree cap.
pub fn buchberger<K: Field>(
    gens: &[SparsePolynomial<K>],
    order: MonomialOrder,
    degree_cap: Option<u32>,
) -> Result<GroebnerBasis<K>> {
    buchberger_with(
        gens,
        order,
        &BuchbergerOptions {
            degree_cap,
            ..Default::default()
        },
    )
}

pub fn buchberger_with<K: Field>(
    gens: &[SparsePolynomial<K>],
    order: MonomialOrder,
    opts: &BuchbergerOptions,
) -> Result<GroebnerBasis<K>> {
    let MonomialOrder::Grevlex = order;
    let first = gens.first().ok_or(GroebnerError::EmptyInput)?;
    let ring = first.ring().clone();
    if gens
        .iter()
        .any(|g| !algebra_core::poly::same_ring(g.ring(), &ring))
    {
        return Err(GroebnerError::RingMismatch);
    }
    check_field(&ring.field, opts)?;
    if opts.degree_cap.is_some() && gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(GroebnerError::InhomogeneousTruncation);
    }
    let layout = Layout::polynomial(ring.nvars());
    let packed = gens
        .iter()
        .map(|g| pack_poly(&layout, g, 0))
        .collect::<Result<Vec<_>>>()?;
    let engine = Engine::new(ring.field.clone(), layout.clone())?;
    let out = engine.run(packed, &opts.engine())?;
    let generators = out
        .basis
        .iter()
        .map(|t| unpack_poly(&ring, &layout, t))
        .collect();
    let reducer = Reducer::new(layout, &out.basis);
    Ok(GroebnerBasis {
        ring,
        generators,
        stats: out.stats,
        truncated: out.truncated,
        degree_cap: opts.degree_cap,
        reducer,
    })
}

/// Remainder of full reduction by the basis.
pub fn normal_form<K: Field>(
    f: &SparsePolynomial<K>,
    b: &GroebnerBasis<K>,
) -> Result<SparsePolynomial<K>> {
    if !algebra_core::poly::same_ring(f.ring(), &b.ring) {
        return Err(GroebnerError::RingMismatch);
    }
    let layout = b.reducer.layout();
    let t = pack_poly(layout, f, 0)?;
    let r = b.reducer.reduce(&b.ring.field, t);
    Ok(unpack_poly(&b.ring, layout, &r))
}

/// A vector in a graded free module, one polynomial per component.
pub type ModuleVector<K> = Vec<SparsePolynomial<K>>;

/// Reduced Gröbner basis of a submodule of ⊕ R(−shiftᵢ), position-over-term after weighted degree.
#[derive(Clone, Debug)]
pub struct ModuleBasis<K: Field> {
    ring: Arc<PolyRing<K>>,
    shifts: Vec<u32>,
    basis: Vec<Terms<K::Elem>>,
    stats: EngineStats,
    truncated: bool,
    reducer: Reducer<K::Elem>,
}

impl<K: Field> ModuleBasis<K> {
    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn stats(&self) -> &EngineStats {
        &self.stats
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Leading monomials of the basis grouped by component.
    pub fn leading_monomials_by_component(&self) -> Vec<Vec<Monomial>> {
        let layout = self.reducer.layout();
        let mut out = vec![Vec::new(); self.shifts.len()];
        for m in self.reducer.leading_terms() {
            out[m.comp()].push(Monomial::new(layout.exps(m)));
        }
        out
    }

    pub fn elements(&self) -> Vec<ModuleVector<K>> {
        self.basis.iter().map(|t| self.unpack(t)).collect()
    }

    fn unpack(&self, t: &Terms<K::Elem>) -> ModuleVector<K> {
        let layout = self.reducer.layout();
        let mut parts = vec![Vec::new(); self.shifts.len()];
        for (m, c) in t {
            parts[m.comp()].push((*m, c.clone()));
        }
        parts
            .iter()
            .map(|p| unpack_poly(&self.ring, layout, p))
            .collect()
    }

    pub fn normal_form(&self, v: &[SparsePolynomial<K>]) -> Result<ModuleVector<K>> {
        let t = pack_vector(self.reducer.layout(), v)?;
        let r = self.reducer.reduce(&self.ring.field, t);
        Ok(self.unpack(&r))
    }
}

fn pack_vector<K: Field>(layout: &Layout, v: &[SparsePolynomial<K>]) -> Result<Terms<K::Elem>> {
    if v.len() != layout.ncomps() {
        return Err(GroebnerError::Unsupported(format!(
            "vector of length {} in a module of rank {}",
            v.len(),
            layout.ncomps()
        )));
    }
    let mut t = Vec::new();
    for (c, p) in v.iter().enumerate() {
        t.extend(pack_poly(layout, p, c)?);
    }
    sort_terms(&mut t);
    Ok(t)
}

/// Gröbner basis of the submodule generated by `gens` inside ⊕ R(−shiftᵢ).
pub fn module_groebner<K: Field>(
    ring: &Arc<PolyRing<K>>,
    shifts: &[u32],
    gens: &[ModuleVector<K>],
    opts: &BuchbergerOptions,
) -> Result<ModuleBasis<K>> {
    check_field(&ring.field, opts)?;
    if gens
        .iter()
        .flatten()
        .any(|g| !algebra_core::poly::same_ring(g.ring(), ring))
    {
        return Err(GroebnerError::RingMismatch);
    }
    let layout = Layout::module(ring.nvars(), shifts.to_vec());
    let packed = gens
        .iter()
        .map(|g| pack_vector(&layout, g))
        .collect::<Result<Vec<_>>>()?;
    if opts.degree_cap.is_some()
        && packed
            .iter()
            .any(|t| t.iter().any(|(m, _)| m.deg() != t[0].0.deg()))
    {
        return Err(GroebnerError::InhomogeneousTruncation);
    }
    let engine = Engine::new(ring.field.clone(), layout.clone())?;
    let out = engine.run(packed, &opts.engine())?;
    let reducer = Reducer::new(layout, &out.basis);
    Ok(ModuleBasis {
        ring: ring.clone(),
        shifts: shifts.to_vec(),
        basis: out.basis,
        stats: out.stats,
        truncated: out.truncated,
        reducer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::PrimeField;

    fn ring() -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(PrimeField::new(263, 16).unwrap(), &["x", "y"])
    }

    fn p(r: &Arc<PolyRing<PrimeField>>, s: &str) -> SparsePolynomial<PrimeField> {
        SparsePolynomial::parse_canonical(r, s).unwrap()
    }

    #[test]
    fn single_monomial() {
        let r = ring();
        let x = SparsePolynomial::var(&r, 0);
        let b = buchberger(std::slice::from_ref(&x), MonomialOrder::Grevlex, None).unwrap();
        assert_eq!(b.generators(), &[x]);
    }

    #[test]
    fn two_generator_example() {
        let r = ring();
        let f = p(&r, "(1/1+0/1*w)*x^2+(1/1+0/1*w)*y^2");
        let g = p(&r, "(1/1+0/1*w)*x*y");
        let b = buchberger(&[f.clone(), g.clone()], MonomialOrder::Grevlex, None).unwrap();
        let got: Vec<String> = b.generators().iter().map(|g| g.to_canonical()).collect();
        assert_eq!(
            got,
            vec![
                "(1/1+0/1*w)*x*y",
                "(1/1+0/1*w)*x^2+(1/1+0/1*w)*y^2",
                "(1/1+0/1*w)*y^3"
            ]
        );
        let y3 = p(&r, "(1/1+0/1*w)*y^3");
        assert!(normal_form(&y3, &b).unwrap().is_zero());
        assert!(normal_form(&SparsePolynomial::zero(&r), &b)
            .unwrap()
            .is_zero());
        assert!(b.contains(&f).unwrap() && b.contains(&g).unwrap());
    }

    #[test]
    fn rational_field_needs_opt_in() {
        let r = PolyRing::new(algebra_core::QuadExtField, &["x"]);
        let x = SparsePolynomial::var(&r, 0);
        assert_eq!(
            buchberger(std::slice::from_ref(&x), MonomialOrder::Grevlex, None).unwrap_err(),
            GroebnerError::CoefficientFieldUnsupported
        );
        let opts = BuchbergerOptions {
            allow_characteristic_zero: true,
            ..Default::default()
        };
        assert_eq!(
            buchberger_with(&[x], MonomialOrder::Grevlex, &opts)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn module_basis_of_simple_submodule() {
        let r = ring();
        let x = SparsePolynomial::var(&r, 0);
        let y = SparsePolynomial::var(&r, 1);
        let z = SparsePolynomial::zero(&r);
        // rows (x, y) and (y, 0): the quotient of R² has finite length
        let gens = vec![
            vec![x.clone(), y.clone()],
            vec![y.clone(), z.clone()],
            vec![z.clone(), x.clone() * x.clone()],
        ];
        let b = module_groebner(&r, &[0, 0], &gens, &BuchbergerOptions::default()).unwrap();
        for g in &gens {
            assert!(b.normal_form(g).unwrap().iter().all(|c| c.is_zero()));
        }
        let lead = b.leading_monomials_by_component();
        assert_eq!(lead.len(), 2);
    }
}
