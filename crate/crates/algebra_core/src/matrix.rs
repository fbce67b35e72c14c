use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{same_ring, SparsePolynomial};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> ExactMatrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        check_indices(rows, self.rows)?;
        check_indices(cols, self.cols)?;
        Ok(Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        }))
    }
}

fn check_indices(idx: &[usize], bound: usize) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &i in idx {
        if i >= bound {
            return Err(AlgebraError::IndexOutOfRange { index: i, bound });
        }
        if !seen.insert(i) {
            return Err(AlgebraError::RepeatedIndex(i));
        }
    }
    Ok(())
}

/// Rank, pivot columns and a right-kernel basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelRank<E> {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub kernel: Vec<Vec<E>>,
}

/// Reduced row echelon form in place; pivot = first nonzero entry in row-major scan of the remaining block.
pub fn row_reduce<K: Field>(field: &K, m: &mut ExactMatrix<K::Elem>) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(m.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(m.get(r, c)).expect("nonzero pivot");
        for j in c..cols {
            let v = field.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || field.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in c..cols {
                let v = field.sub(m.get(i, j), &field.mul(&factor, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn kernel_and_rank<K: Field>(field: &K, m: &ExactMatrix<K::Elem>) -> KernelRank<K::Elem> {
    let mut a = m.clone();
    let pivots = row_reduce(field, &mut a);
    let rank = pivots.len();
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut kernel = Vec::new();
    for free in (0..m.cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(a.get(r, free));
        }
        kernel.push(v);
    }
    KernelRank {
        rank,
        pivots,
        kernel,
    }
}

/// Determinant over a field by Gaussian elimination.
pub fn determinant<K: Field>(field: &K, m: &ExactMatrix<K::Elem>) -> Result<K::Elem> {
    if m.rows != m.cols {
        return Err(AlgebraError::NonSquareSelection {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(a.get(i, c))) else {
            return Ok(field.zero());
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = field.neg(&det);
        }
        let piv = a.get(c, c).clone();
        det = field.mul(&det, &piv);
        let inv = field.inv(&piv).expect("nonzero pivot");
        for i in c + 1..n {
            if field.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = field.mul(a.get(i, c), &inv);
            for j in c..n {
                let v = field.sub(a.get(i, j), &field.mul(&factor, a.get(c, j)));
                a.set(i, j, v);
            }
        }
    }
    Ok(det)
}

/// ∂genᵢ/∂xⱼ.
pub fn jacobian<K: Field>(
    gens: &[SparsePolynomial<K>],
) -> Result<ExactMatrix<SparsePolynomial<K>>> {
    let Some(first) = gens.first() else {
        return Err(AlgebraError::DimensionMismatch(
            "empty generator list".into(),
        ));
    };
    if gens.iter().any(|g| !same_ring(g.ring(), first.ring())) {
        return Err(AlgebraError::RingMismatch);
    }
    let n = first.nvars();
    Ok(ExactMatrix::from_fn(gens.len(), n, |i, j| {
        gens[i].derivative(j)
    }))
}

/// Determinant by Laplace expansion along rows, memoizing minors by column subset.
///
/// `entry(r, c)` yields matrix entries and `mul_entry(e, acc)` multiplies an accumulated minor by an entry,
/// so the accumulator type may differ from the entry type. A k×k determinant costs k·2^(k−1) products.
pub fn laplace_determinant<E, A: Clone>(
    k: usize,
    entry: impl Fn(usize, usize) -> E,
    zero: A,
    one: A,
    mul_entry: impl Fn(&E, &A) -> A,
    add: impl Fn(&A, &A) -> A,
    sub: impl Fn(&A, &A) -> A,
) -> A {
    assert!(k <= 20, "Laplace expansion limited to 20 columns");
    let mut layer: FxHashMap<u32, A> = FxHashMap::default();
    layer.insert(0, one);
    for r in 0..k {
        let mut next: FxHashMap<u32, A> = FxHashMap::default();
        for s in (0u32..(1 << k)).filter(|s| s.count_ones() as usize == r + 1) {
            let mut acc = zero.clone();
            for c in (0..k).filter(|c| s & (1 << c) != 0) {
                let minor = &layer[&(s & !(1 << c))];
                let pos = (s & ((1 << c) - 1)).count_ones() as usize;
                let term = mul_entry(&entry(r, c), minor);
                acc = if (r + pos) % 2 == 1 {
                    sub(&acc, &term)
                } else {
                    add(&acc, &term)
                };
            }
            next.insert(s, acc);
        }
        layer = next;
    }
    layer
        .remove(&((1u32 << k) - 1))
        .expect("full minor present")
}

/// Determinant of the selected square submatrix of a polynomial matrix.
pub fn minor_determinant<K: Field>(
    m: &ExactMatrix<SparsePolynomial<K>>,
    rows: &[usize],
    cols: &[usize],
) -> Result<SparsePolynomial<K>> {
    if rows.len() != cols.len() {
        return Err(AlgebraError::NonSquareSelection {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    check_indices(rows, m.rows)?;
    check_indices(cols, m.cols)?;
    let ring = m
        .data
        .first()
        .map(|p| p.ring().clone())
        .ok_or(AlgebraError::DimensionMismatch("empty matrix".into()))?;
    Ok(laplace_determinant(
        rows.len(),
        |r, c| m.get(rows[r], cols[c]).clone(),
        SparsePolynomial::zero(&ring),
        SparsePolynomial::one(&ring),
        |e, a| e * a,
        |a, b| a + b,
        |a, b| a - b,
    ))
}

/// Fraction-free Bareiss elimination over a polynomial ring; exact divisions throughout.
pub fn bareiss_determinant<K: Field>(
    m: &ExactMatrix<SparsePolynomial<K>>,
) -> Result<SparsePolynomial<K>> {
    if m.rows != m.cols {
        return Err(AlgebraError::NonSquareSelection {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let Some(first) = m.data.first() else {
        return Err(AlgebraError::DimensionMismatch("empty matrix".into()));
    };
    let ring = first.ring().clone();
    let mut a = m.clone();
    let mut sign_negative = false;
    let mut prev = SparsePolynomial::one(&ring);
    for k in 0..n {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(SparsePolynomial::zero(&ring));
            };
            for j in 0..n {
                a.data.swap(p * n + j, k * n + j);
            }
            sign_negative = !sign_negative;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(a.get(k, k) * a.get(i, j)) - &(a.get(i, k) * a.get(k, j));
                let q = num.div_exact(&prev).expect("Bareiss division is exact");
                a.set(i, j, q);
            }
        }
        prev = a.get(k, k).clone();
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if sign_negative { -&det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};
    use crate::poly::PolyRing;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn identity_rank_and_kernel() {
        let m = ExactMatrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(1)]]).unwrap();
        let kr = kernel_and_rank(&RationalField, &m);
        assert_eq!(kr.rank, 2);
        assert!(kr.kernel.is_empty());
        let z = ExactMatrix::from_fn(3, 5, |_, _| q(0));
        let kr = kernel_and_rank(&RationalField, &z);
        assert_eq!((kr.rank, kr.kernel.len()), (0, 5));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m =
            ExactMatrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]]).unwrap();
        let kr = kernel_and_rank(&RationalField, &m);
        assert_eq!(kr.rank, 1);
        for v in &kr.kernel {
            for i in 0..2 {
                let s: BigRational = (0..3).map(|j| m.get(i, j) * &v[j]).sum();
                assert_eq!(s, q(0));
            }
        }
    }

    #[test]
    fn polynomial_minor_variants_agree() {
        let f = PrimeField::new(263, 16).unwrap();
        let r = PolyRing::new(f, &["x", "y", "z"]);
        let x = SparsePolynomial::var(&r, 0);
        let y = SparsePolynomial::var(&r, 1);
        let z = SparsePolynomial::var(&r, 2);
        let one = SparsePolynomial::one(&r);
        let m = ExactMatrix::from_rows(vec![
            vec![&x * &y, &y + &z, one.clone()],
            vec![z.clone(), &x * &x, &y - &one],
            vec![&x + &y, one.clone(), &z * &z],
        ])
        .unwrap();
        let l = minor_determinant(&m, &[0, 1, 2], &[0, 1, 2]).unwrap();
        let b = bareiss_determinant(&m).unwrap();
        assert_eq!(l, b);
        let id = ExactMatrix::from_fn(7, 7, |i, j| {
            if i == j {
                one.clone()
            } else {
                SparsePolynomial::zero(&r)
            }
        });
        assert_eq!(
            minor_determinant(&id, &[0, 1, 2, 3, 4, 5, 6], &[0, 1, 2, 3, 4, 5, 6]).unwrap(),
            one
        );
        assert!(matches!(
            minor_determinant(&m, &[0, 0], &[0, 1]),
            Err(AlgebraError::RepeatedIndex(0))
        ));
        assert!(matches!(
            minor_determinant(&m, &[0, 5], &[0, 1]),
            Err(AlgebraError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn jacobian_of_constant_is_zero() {
        let f = PrimeField::new(263, 16).unwrap();
        let r = PolyRing::new(f, &["x", "y"]);
        let j = jacobian(&[SparsePolynomial::constant(&r, 5)]).unwrap();
        assert!(j.get(0, 0).is_zero() && j.get(0, 1).is_zero());
    }

    #[test]
    fn scalar_determinant() {
        let f = PrimeField::new(263, 16).unwrap();
        let m = ExactMatrix::from_rows(vec![vec![2u32, 1], vec![1, 1]]).unwrap();
        assert_eq!(determinant(&f, &m).unwrap(), 1);
    }
}
