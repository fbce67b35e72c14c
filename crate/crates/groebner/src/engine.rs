//! Buchberger engine on packed terms.
//!
//! A term is a monomial in at most 14 variables, optionally tagged with a free-module component.
//! The 128-bit key holds the weighted degree in the top byte, exponents in bytes 15−n+i, and the
//! component in byte 0. Flipping the low 120 bits turns integer comparison into the term order:
//! weighted degree first, then reverse-lexicographic on exponents (grevlex), then component.

use std::collections::BinaryHeap;
use std::time::{Duration, Instant};

use algebra_core::Field;
use rustc_hash::FxHashMap;

use crate::error::{GroebnerError, Result};

const FLIP: u128 = (1u128 << 120) - 1;
pub const MAX_VARS: usize = 14;
pub const MAX_DEGREE: u32 = 255;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mon(pub u128);

impl Mon {
    #[inline]
    pub fn deg(self) -> u32 {
        (self.0 >> 120) as u32
    }

    #[inline]
    pub fn ord(self) -> u128 {
        self.0 ^ FLIP
    }

    #[inline]
    pub fn from_ord(o: u128) -> Mon {
        Mon(o ^ FLIP)
    }

    #[inline]
    pub fn comp(self) -> usize {
        (self.0 & 0xff) as usize
    }
}

/// Variable count and per-component degree shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub nvars: usize,
    pub shifts: Vec<u32>,
}

impl Layout {
    pub fn polynomial(nvars: usize) -> Self {
        Self {
            nvars,
            shifts: vec![0],
        }
    }

    pub fn module(nvars: usize, shifts: Vec<u32>) -> Self {
        Self { nvars, shifts }
    }

    pub fn ncomps(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_module(&self) -> bool {
        self.shifts.len() > 1
    }

    #[inline]
    fn shift_of(&self, i: usize) -> u32 {
        8 * (15 - self.nvars + i) as u32
    }

    pub fn validate(&self) -> Result<()> {
        if self.nvars == 0 || self.nvars > MAX_VARS {
            return Err(GroebnerError::Unsupported(format!(
                "{} variables (engine supports 1..=14)",
                self.nvars
            )));
        }
        if self.shifts.is_empty() || self.shifts.len() > 256 {
            return Err(GroebnerError::Unsupported(format!(
                "{} components",
                self.shifts.len()
            )));
        }
        Ok(())
    }

    pub fn pack(&self, exps: &[u16], comp: usize) -> Result<Mon> {
        let deg: u32 = exps.iter().map(|&e| e as u32).sum::<u32>() + self.shifts[comp];
        if deg > MAX_DEGREE {
            return Err(GroebnerError::DegreeOverflow(deg));
        }
        let mut raw = (deg as u128) << 120 | comp as u128;
        for (i, &e) in exps.iter().enumerate() {
            raw |= (e as u128) << self.shift_of(i);
        }
        Ok(Mon(raw))
    }

    pub fn exps(&self, m: Mon) -> Vec<u16> {
        (0..self.nvars).map(|i| self.exp(m, i) as u16).collect()
    }

    #[inline]
    pub fn exp(&self, m: Mon, i: usize) -> u32 {
        ((m.0 >> self.shift_of(i)) & 0xff) as u32
    }

    /// Degree of the monomial part, without the component shift.
    pub fn plain_degree(&self, m: Mon) -> u32 {
        m.deg() - self.shifts[m.comp()]
    }

    #[inline]
    pub fn divides(&self, a: Mon, b: Mon) -> bool {
        if a.comp() != b.comp() || a.deg() > b.deg() {
            return false;
        }
        (0..self.nvars).all(|i| self.exp(a, i) <= self.exp(b, i))
    }

    /// b / a as a pure monomial (component 0, no shift); caller guarantees divisibility.
    #[inline]
    pub fn quotient(&self, b: Mon, a: Mon) -> Mon {
        Mon((b.0 - a.0) & !0xff)
    }

    pub fn lcm(&self, a: Mon, b: Mon) -> Result<Mon> {
        debug_assert_eq!(a.comp(), b.comp());
        let exps: Vec<u16> = (0..self.nvars)
            .map(|i| self.exp(a, i).max(self.exp(b, i)) as u16)
            .collect();
        self.pack(&exps, a.comp())
    }

    pub fn coprime(&self, a: Mon, b: Mon) -> bool {
        (0..self.nvars).all(|i| self.exp(a, i) == 0 || self.exp(b, i) == 0)
    }

    #[inline]
    pub fn divmask(&self, m: Mon) -> u64 {
        let mut mask = 1u64 << (56 + (m.comp() % 8));
        for i in 0..self.nvars {
            let e = self.exp(m, i);
            let base = 4 * i as u32;
            if e >= 1 {
                mask |= 1 << base;
            }
            if e >= 2 {
                mask |= 1 << (base + 1);
            }
            if e >= 4 {
                mask |= 1 << (base + 2);
            }
            if e >= 8 {
                mask |= 1 << (base + 3);
            }
        }
        mask
    }

    /// Pure monomial from exponents (component 0, no shift).
    pub fn pure(&self, exps: &[u16]) -> Result<Mon> {
        let deg: u32 = exps.iter().map(|&e| e as u32).sum();
        if deg > MAX_DEGREE {
            return Err(GroebnerError::DegreeOverflow(deg));
        }
        let mut raw = (deg as u128) << 120;
        for (i, &e) in exps.iter().enumerate() {
            raw |= (e as u128) << self.shift_of(i);
        }
        Ok(Mon(raw))
    }
}

/// Terms sorted strictly descending in the term order.
pub type Terms<E> = Vec<(Mon, E)>;

pub fn sort_terms<E>(terms: &mut Terms<E>) {
    terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0.ord()));
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub pairs_created: u64,
    pub pairs_eliminated: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
    pub pairs_beyond_cap: u64,
    pub max_degree_seen: u32,
    pub wall_time: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct EngineOptions {
    pub degree_cap: Option<u32>,
    pub max_pairs: Option<u64>,
    pub time_limit: Option<Duration>,
}

#[derive(Clone, Debug)]
struct Elem<E> {
    terms: Terms<E>,
    lm: Mon,
    mask: u64,
    sugar: u32,
    active: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mon,
    sugar: u32,
}

pub struct EngineOutput<E> {
    pub basis: Vec<Terms<E>>,
    pub stats: EngineStats,
    pub truncated: bool,
}

pub struct Engine<K: Field> {
    field: K,
    layout: Layout,
    elems: Vec<Elem<K::Elem>>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    stats: EngineStats,
    truncated: bool,
}

fn sugar_of<E>(terms: &Terms<E>) -> u32 {
    terms.iter().map(|(m, _)| m.deg()).max().unwrap_or(0)
}

impl<K: Field> Engine<K> {
    pub fn new(field: K, layout: Layout) -> Result<Self> {
        layout.validate()?;
        let n = layout.ncomps();
        Ok(Self {
            field,
            layout,
            elems: Vec::new(),
            by_comp: vec![Vec::new(); n],
            pairs: Vec::new(),
            stats: EngineStats::default(),
            truncated: false,
        })
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    fn make_monic(&self, terms: &mut Terms<K::Elem>) {
        if let Some((_, c)) = terms.first() {
            if !self.field.is_one(c) {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                for t in terms.iter_mut() {
                    t.1 = self.field.mul(&t.1, &inv);
                }
            }
        }
    }

    /// Full reduction of `terms` by all stored elements. With `skip`, that element is not used.
    fn reduce(&self, terms: Terms<K::Elem>, skip: Option<usize>) -> Terms<K::Elem> {
        reduce_with(
            &self.field,
            &self.layout,
            &self.elems,
            &self.by_comp,
            terms,
            skip,
        )
    }

    fn insert(&mut self, terms: Terms<K::Elem>, sugar: u32) -> Result<()> {
        let lm = terms[0].0;
        let mask = self.layout.divmask(lm);
        let h = self.elems.len();
        self.elems.push(Elem {
            terms,
            lm,
            mask,
            sugar,
            active: true,
        });
        self.by_comp[lm.comp()].push(h);
        self.update(h)
    }

    /// Gebauer–Möller pair update for a new element `h`.
    fn update(&mut self, h: usize) -> Result<()> {
        let lay = &self.layout;
        let module = lay.is_module();
        let lm_h = self.elems[h].lm;
        let sugar_h = self.elems[h].sugar;
        let deg_h = lm_h.deg();

        let mut cand: Vec<(usize, Mon, bool)> = Vec::new();
        for &g in &self.by_comp[lm_h.comp()] {
            if g == h || !self.elems[g].active {
                continue;
            }
            let lm_g = self.elems[g].lm;
            let l = lay.lcm(lm_h, lm_g)?;
            let coprime = !module && lay.coprime(lm_h, lm_g);
            cand.push((g, l, coprime));
        }
        self.stats.pairs_created += cand.len() as u64;

        // chain criterion among the new pairs: drop (h,g1) if some (h,g2) has lcm properly dividing lcm(h,g1),
        // or an equal lcm appears earlier (keeping coprime representatives preferentially).
        let mut keep = vec![true; cand.len()];
        for a in 0..cand.len() {
            let (_, la, ca) = cand[a];
            for b in 0..cand.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let (_, lb, cb) = cand[b];
                if lb == la {
                    if (cb && !ca) || (cb == ca && b < a) {
                        keep[a] = false;
                        break;
                    }
                } else if lay.divides(lb, la) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut new_pairs = Vec::new();
        for (k, &(g, l, coprime)) in cand.iter().enumerate() {
            if !keep[k] || coprime {
                self.stats.pairs_eliminated += 1;
                continue;
            }
            let e = &self.elems[g];
            let s = (sugar_h + l.deg() - deg_h).max(e.sugar + l.deg() - e.lm.deg());
            new_pairs.push(Pair {
                i: g,
                j: h,
                lcm: l,
                sugar: s,
            });
        }

        // Buchberger criterion on old pairs
        let before = self.pairs.len();
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.lcm.comp() != lm_h.comp() || !lay.divides(lm_h, p.lcm) {
                return true;
            }
            let li = lay
                .lcm(elems[p.i].lm, lm_h)
                .expect("degree bounded by pair lcm");
            let lj = lay
                .lcm(elems[p.j].lm, lm_h)
                .expect("degree bounded by pair lcm");
            li == p.lcm || lj == p.lcm
        });
        self.stats.pairs_eliminated += (before - self.pairs.len()) as u64;
        self.pairs.extend(new_pairs);

        // retire elements whose leading term is a multiple of lm_h
        for &g in &self.by_comp[lm_h.comp()] {
            if g != h && self.elems[g].active && lay.divides(lm_h, self.elems[g].lm) {
                self.elems[g].active = false;
            }
        }
        Ok(())
    }

    fn spoly(&self, p: &Pair) -> Terms<K::Elem> {
        let lay = &self.layout;
        let f = &self.field;
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let qa = lay.quotient(p.lcm, a.lm);
        let qb = lay.quotient(p.lcm, b.lm);
        let mut out: Terms<K::Elem> = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut x, mut y) = (1, 1);
        while x < a.terms.len() || y < b.terms.len() {
            let ta = a.terms.get(x).map(|(m, c)| (Mon(m.0 + qa.0), c));
            let tb = b.terms.get(y).map(|(m, c)| (Mon(m.0 + qb.0), c));
            match (ta, tb) {
                (Some((ma, ca)), Some((mb, cb))) if ma == mb => {
                    let c = f.sub(ca, cb);
                    if !f.is_zero(&c) {
                        out.push((ma, c));
                    }
                    x += 1;
                    y += 1;
                }
                (Some((ma, ca)), Some((mb, _))) if ma.ord() > mb.ord() => {
                    out.push((ma, ca.clone()));
                    x += 1;
                }
                (Some((ma, ca)), None) => {
                    out.push((ma, ca.clone()));
                    x += 1;
                }
                (_, Some((mb, cb))) => {
                    out.push((mb, f.neg(cb)));
                    y += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        out
    }

    fn select(&mut self) -> Option<Pair> {
        let idx = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then(p.lcm.ord().cmp(&q.lcm.ord()))
                .then(p.i.cmp(&q.i))
                .then(p.j.cmp(&q.j))
        })?;
        Some(self.pairs.swap_remove(idx))
    }

    /// Runs Buchberger on `gens` (each already sorted descending).
    pub fn run(
        mut self,
        gens: Vec<Terms<K::Elem>>,
        opts: &EngineOptions,
    ) -> Result<EngineOutput<K::Elem>> {
        let start = Instant::now();
        let mut gens: Vec<Terms<K::Elem>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
        gens.sort_by(|a, b| a[0].0.ord().cmp(&b[0].0.ord()));
        for g in gens {
            let sugar = sugar_of(&g);
            if opts.degree_cap.is_some_and(|cap| sugar > cap) {
                self.truncated = true;
                continue;
            }
            let mut r = self.reduce(g, None);
            if r.is_empty() {
                continue;
            }
            self.make_monic(&mut r);
            self.insert(r, sugar)?;
        }
        while let Some(p) = self.select() {
            if let Some(cap) = opts.degree_cap {
                if p.sugar > cap {
                    self.truncated = true;
                    self.stats.pairs_beyond_cap += 1;
                    continue;
                }
            }
            if opts
                .max_pairs
                .is_some_and(|m| self.stats.pairs_reduced >= m)
            {
                return Err(GroebnerError::BudgetExceeded(format!(
                    "{} pairs reduced",
                    self.stats.pairs_reduced
                )));
            }
            if opts.time_limit.is_some_and(|t| start.elapsed() > t) {
                return Err(GroebnerError::BudgetExceeded(format!(
                    "{:?} elapsed",
                    start.elapsed()
                )));
            }
            self.stats.pairs_reduced += 1;
            self.stats.max_degree_seen = self.stats.max_degree_seen.max(p.lcm.deg());
            let s = self.spoly(&p);
            let mut r = self.reduce(s, None);
            if r.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            self.make_monic(&mut r);
            self.insert(r, p.sugar)?;
        }
        let basis = self.interreduce();
        self.stats.wall_time = start.elapsed();
        Ok(EngineOutput {
            basis,
            stats: self.stats,
            truncated: self.truncated,
        })
    }

    /// Reduced basis from the active elements.
    fn interreduce(&mut self) -> Vec<Terms<K::Elem>> {
        let mut active: Vec<usize> = (0..self.elems.len())
            .filter(|&i| self.elems[i].active)
            .collect();
        active.sort_by(|&a, &b| self.elems[a].lm.ord().cmp(&self.elems[b].lm.ord()));
        // keep only active elements as reducers
        let mut by_comp = vec![Vec::new(); self.layout.ncomps()];
        for &i in &active {
            by_comp[self.elems[i].lm.comp()].push(i);
        }
        let mut out = Vec::with_capacity(active.len());
        for &i in &active {
            let e = &self.elems[i];
            let tail: Terms<K::Elem> = e.terms[1..].to_vec();
            let red = reduce_with(
                &self.field,
                &self.layout,
                &self.elems,
                &by_comp,
                tail,
                Some(i),
            );
            let mut t = Vec::with_capacity(red.len() + 1);
            t.push(e.terms[0].clone());
            t.extend(red);
            out.push(t);
        }
        out
    }
}

/// Full reduction of `terms` by `elems` (restricted to indices in `by_comp`); elements must be monic.
fn reduce_with<K: Field, X: ElemView<K::Elem>>(
    field: &K,
    layout: &Layout,
    elems: &[X],
    by_comp: &[Vec<usize>],
    terms: Terms<K::Elem>,
    skip: Option<usize>,
) -> Terms<K::Elem> {
    if terms.is_empty() {
        return terms;
    }
    let mut heap: BinaryHeap<u128> = BinaryHeap::with_capacity(terms.len() * 2);
    let mut coeffs: FxHashMap<u128, K::Elem> = FxHashMap::default();
    coeffs.reserve(terms.len() * 2);
    for (m, c) in terms {
        heap.push(m.ord());
        coeffs.insert(m.0, c);
    }
    let mut out = Vec::new();
    while let Some(o) = heap.pop() {
        let m = Mon::from_ord(o);
        let Some(c) = coeffs.remove(&m.0) else {
            continue;
        };
        if field.is_zero(&c) {
            continue;
        }
        let mask = layout.divmask(m);
        let reducer = by_comp[m.comp()].iter().copied().find(|&g| {
            Some(g) != skip && {
                let e = &elems[g];
                e.mask() & !mask == 0 && layout.divides(e.lm(), m)
            }
        });
        match reducer {
            None => out.push((m, c)),
            Some(g) => {
                let e = &elems[g];
                let q = layout.quotient(m, e.lm());
                for (t, d) in &e.terms()[1..] {
                    let key = t.0 + q.0;
                    let delta = field.mul(&c, d);
                    match coeffs.get_mut(&key) {
                        Some(v) => *v = field.sub(v, &delta),
                        None => {
                            coeffs.insert(key, field.neg(&delta));
                            heap.push(Mon(key).ord());
                        }
                    }
                }
            }
        }
    }
    out
}

trait ElemView<E> {
    fn lm(&self) -> Mon;
    fn mask(&self) -> u64;
    fn terms(&self) -> &Terms<E>;
}

impl<E> ElemView<E> for Elem<E> {
    fn lm(&self) -> Mon {
        self.lm
    }
    fn mask(&self) -> u64 {
        self.mask
    }
    fn terms(&self) -> &Terms<E> {
        &self.terms
    }
}

/// A reduced basis prepared for normal forms.
#[derive(Clone, Debug)]
pub struct Reducer<E> {
    layout: Layout,
    elems: Vec<ReducerElem<E>>,
    by_comp: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
struct ReducerElem<E> {
    terms: Terms<E>,
    lm: Mon,
    mask: u64,
}

impl<E> ElemView<E> for ReducerElem<E> {
    fn lm(&self) -> Mon {
        self.lm
    }
    fn mask(&self) -> u64 {
        self.mask
    }
    fn terms(&self) -> &Terms<E> {
        &self.terms
    }
}

impl<E: Clone> Reducer<E> {
    /// Elements must be monic with distinct leading terms.
    pub fn new(layout: Layout, basis: &[Terms<E>]) -> Self {
        let mut by_comp = vec![Vec::new(); layout.ncomps()];
        let mut elems = Vec::with_capacity(basis.len());
        for (i, t) in basis.iter().enumerate() {
            let lm = t[0].0;
            by_comp[lm.comp()].push(i);
            elems.push(ReducerElem {
                terms: t.clone(),
                lm,
                mask: layout.divmask(lm),
            });
        }
        Self {
            layout,
            elems,
            by_comp,
        }
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn reduce<K: Field<Elem = E>>(&self, field: &K, terms: Terms<E>) -> Terms<E> {
        reduce_with(field, &self.layout, &self.elems, &self.by_comp, terms, None)
    }

    pub fn leading_terms(&self) -> impl Iterator<Item = Mon> + '_ {
        self.elems.iter().map(|e| e.lm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_order_matches_grevlex() {
        let lay = Layout::polynomial(3);
        let a = lay.pack(&[1, 0, 1], 0).unwrap();
        let b = lay.pack(&[0, 2, 0], 0).unwrap();
        assert!(a.ord() < b.ord());
        let c = lay.pack(&[0, 0, 3], 0).unwrap();
        let d = lay.pack(&[1, 0, 0], 0).unwrap();
        assert!(c.ord() > d.ord());
        assert_eq!(lay.exps(a), vec![1, 0, 1]);
        let q = lay.quotient(lay.pack(&[2, 1, 1], 0).unwrap(), a);
        assert_eq!(lay.exps(q), vec![1, 1, 0]);
    }

    #[test]
    fn module_terms_carry_shift() {
        let lay = Layout::module(2, vec![0, 2]);
        let a = lay.pack(&[1, 0], 1).unwrap();
        assert_eq!(a.deg(), 3);
        assert_eq!(a.comp(), 1);
        assert_eq!(lay.plain_degree(a), 1);
        let q = lay.pure(&[0, 2]).unwrap();
        let b = Mon(a.0 + q.0);
        assert_eq!((b.deg(), b.comp(), lay.exps(b)), (5, 1, vec![1, 2]));
        assert!(lay.divides(a, b));
        assert!(!lay.divides(lay.pack(&[1, 0], 0).unwrap(), b));
    }
}
