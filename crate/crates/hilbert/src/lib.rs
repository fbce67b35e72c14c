//! Hilbert series of monomial quotients by pivot recursion, Hilbert polynomials, and a
//! brute-force standard-monomial oracle.

use std::fmt;

use algebra_core::Monomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HilbertError {
    #[error("generator set is not minimal")]
    NotMinimal,
    #[error("monomial arity {found} differs from ring size {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("enumeration of {count} monomials exceeds budget {budget}")]
    EnumerationTooLarge { count: u128, budget: u128 },
}

/// Numerator N(t) of the Hilbert series N(t)/(1−t)ⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator {
    pub coeffs: Vec<i64>,
    pub nvars: usize,
}

/// Pivot rule for the recursion; the result is independent of the rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// Most frequent variable, median exponent.
    #[default]
    MostFrequent,
    /// Last variable that occurs in a mixed generator, smallest exponent.
    LastVariable,
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] += 1;
    v[d as usize] -= 1;
    trim(v)
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn degree(a: &[u16]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

/// Removes generators divisible by other generators (and duplicates).
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let raw: Vec<Vec<u16>> = gens.iter().map(|m| m.exponents().to_vec()).collect();
    minimal_exps(raw).into_iter().map(Monomial::new).collect()
}

fn minimal_exps(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|g| degree(g));
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn is_pure_power(g: &[u16]) -> bool {
    g.iter().filter(|&&e| e > 0).count() <= 1
}

fn pairwise_coprime(gens: &[Vec<u16>]) -> bool {
    let n = gens.first().map_or(0, |g| g.len());
    (0..n).all(|i| gens.iter().filter(|g| g[i] > 0).count() <= 1)
}

fn numerator_rec(gens: Vec<Vec<u16>>, strategy: PivotStrategy) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| degree(g) == 0) {
        return vec![0];
    }
    if pairwise_coprime(&gens) {
        return gens.iter().fold(vec![1], |acc, g| {
            poly_mul(&acc, &one_minus_t_pow(degree(g)))
        });
    }
    let n = gens[0].len();
    let mixed: Vec<&Vec<u16>> = gens.iter().filter(|g| !is_pure_power(g)).collect();
    let (var, exp) = match strategy {
        PivotStrategy::MostFrequent => {
            let var = (0..n)
                .max_by_key(|&i| {
                    (
                        mixed.iter().filter(|g| g[i] > 0).count(),
                        std::cmp::Reverse(i),
                    )
                })
                .expect("nonempty ring");
            let mut exps: Vec<u16> = mixed.iter().map(|g| g[var]).filter(|&e| e > 0).collect();
            exps.sort_unstable();
            (var, exps[exps.len() / 2])
        }
        PivotStrategy::LastVariable => {
            let var = (0..n)
                .rev()
                .find(|&i| mixed.iter().any(|g| g[i] > 0))
                .expect("mixed generator");
            let e = mixed
                .iter()
                .map(|g| g[var])
                .filter(|&e| e > 0)
                .min()
                .expect("positive exponent");
            (var, e)
        }
    };
    let mut pivot = vec![0u16; n];
    pivot[var] = exp;

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let sum_part = numerator_rec(minimal_exps(with_pivot), strategy);

    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            g.iter()
                .zip(&pivot)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect()
        })
        .collect();
    let colon_part = numerator_rec(minimal_exps(colon), strategy);
    let mut shifted = vec![0i64; exp as usize];
    shifted.extend(colon_part);
    poly_add(&sum_part, &shifted)
}

/// N(t) for the quotient of k[x₀…x_{n−1}] by the monomial ideal generated by `lead_ideal`.
pub fn hilbert_numerator(
    lead_ideal: &[Monomial],
    n: usize,
) -> Result<HilbertNumerator, HilbertError> {
    hilbert_numerator_with(lead_ideal, n, PivotStrategy::default())
}

pub fn hilbert_numerator_with(
    lead_ideal: &[Monomial],
    n: usize,
    strategy: PivotStrategy,
) -> Result<HilbertNumerator, HilbertError> {
    if let Some(m) = lead_ideal.iter().find(|m| m.nvars() != n) {
        return Err(HilbertError::ArityMismatch {
            expected: n,
            found: m.nvars(),
        });
    }
    let gens = minimal_exps(lead_ideal.iter().map(|m| m.exponents().to_vec()).collect());
    Ok(HilbertNumerator {
        coeffs: numerator_rec(gens, strategy),
        nvars: n,
    })
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl HilbertNumerator {
    pub fn new(coeffs: Vec<i64>, nvars: usize) -> Self {
        Self {
            coeffs: trim(coeffs),
            nvars,
        }
    }

    /// N(1).
    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// t^s·N(t).
    pub fn shifted(&self, s: u32) -> Self {
        let mut c = vec![0i64; s as usize];
        c.extend(&self.coeffs);
        Self::new(c, self.nvars)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        Self::new(poly_add(&self.coeffs, &other.coeffs), self.nvars)
    }

    pub fn mul_poly(&self, p: &[i64]) -> Self {
        Self::new(poly_mul(&self.coeffs, p), self.nvars)
    }

    /// dim of the degree-k component: Σᵢ Nᵢ·C(k−i+n−1, n−1).
    pub fn hilbert_function(&self, k: u32) -> BigInt {
        let n = self.nvars as i64;
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == 0 || i as i64 > k as i64 {
                continue;
            }
            let b = if n == 0 {
                BigInt::from((k as i64 == i as i64) as i64)
            } else {
                binomial(k as i64 - i as i64 + n - 1, n - 1)
            };
            acc += BigInt::from(*c) * b;
        }
        acc
    }

    /// Cancels (1−t) factors: returns (Ñ, δ) with N/(1−t)ⁿ = Ñ/(1−t)^δ and Ñ(1) ≠ 0 unless N = 0.
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut num = self.coeffs.clone();
        let mut delta = self.nvars;
        while delta > 0 && num.iter().sum::<i64>() == 0 && num.iter().any(|&c| c != 0) {
            // division by (1 − t): q_i = Σ_{j≤i} n_j
            let mut q = Vec::with_capacity(num.len() - 1);
            let mut acc = 0i64;
            for c in &num[..num.len() - 1] {
                acc += c;
                q.push(acc);
            }
            num = trim(q);
            delta -= 1;
        }
        (num, delta)
    }

    pub fn hilbert_polynomial(&self) -> HilbertPolynomialRepr {
        hilbert_polynomial(self)
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_univariate(
            &self
                .coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect::<Vec<_>>(),
            "t",
        ))
    }
}

/// HP(k) = Σ cᵢ kⁱ together with the reduced numerator and the validity threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomialRepr {
    pub coeffs: Vec<BigRational>,
    /// Dimension of the projective support plus one.
    pub delta: usize,
    pub reduced_numerator: Vec<i64>,
    /// HF(k) = HP(k) for all k ≥ k0.
    pub k0: i64,
}

impl HilbertPolynomialRepr {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Degree of HP, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.degree()
            .map(|d| self.coeffs[d].clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn evaluate(&self, k: i64) -> BigRational {
        let kk = BigRational::from_integer(k.into());
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &kk + c)
    }

    /// Σ Ñᵢ; the total length when the quotient is Artinian.
    pub fn total_length(&self) -> i64 {
        self.reduced_numerator.iter().sum()
    }

    /// Integer coefficients, when all are integral.
    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn equals_integers(&self, expected: &[i64]) -> bool {
        let mut a = self.coeffs.clone();
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        let mut b: Vec<BigRational> = expected
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        while b.last().is_some_and(|c| c.is_zero()) {
            b.pop();
        }
        a == b
    }
}

impl fmt::Display for HilbertPolynomialRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_univariate(&self.coeffs, "k"))
    }
}

fn format_univariate(coeffs: &[BigRational], var: &str) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { "-" } else { "+" });
        }
        let mag = if a.is_integer() {
            a.to_integer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        };
        match i {
            0 => s.push_str(&mag),
            _ => {
                if !a.is_one() {
                    s.push_str(&mag);
                }
                s.push_str(var);
                if i > 1 {
                    s.push('^');
                    s.push_str(&i.to_string());
                }
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Polynomial in k with rational coefficients for Σᵢ Ñᵢ·C(k−i+δ−1, δ−1).
pub fn hilbert_polynomial(n: &HilbertNumerator) -> HilbertPolynomialRepr {
    let (red, delta) = n.reduced();
    let deg_red = red.len() as i64 - 1;
    let k0 = deg_red - delta as i64 + 1;
    if delta == 0 || red.iter().all(|&c| c == 0) {
        return HilbertPolynomialRepr {
            coeffs: vec![BigRational::zero()],
            delta,
            reduced_numerator: red,
            k0,
        };
    }
    let mut total = vec![BigRational::zero(); delta];
    let fact: BigInt = (1..delta as i64).map(BigInt::from).product();
    for (i, &c) in red.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // Π_{j=1}^{δ−1} (k − i + j)
        let mut poly = vec![BigRational::one()];
        for j in 1..delta as i64 {
            let a = BigRational::from_integer(BigInt::from(j - i as i64));
            let mut next = vec![BigRational::zero(); poly.len() + 1];
            for (d, p) in poly.iter().enumerate() {
                next[d + 1] += p;
                next[d] += p * &a;
            }
            poly = next;
        }
        for (d, p) in poly.into_iter().enumerate() {
            total[d] += p * BigRational::from_integer(BigInt::from(c));
        }
    }
    let denom = BigRational::from_integer(fact);
    let coeffs = total.into_iter().map(|c| c / &denom).collect();
    HilbertPolynomialRepr {
        coeffs,
        delta,
        reduced_numerator: red,
        k0,
    }
}

/// Number of degree-k monomials in n variables divisible by no generator.
pub fn hilbert_function_oracle(
    lead_ideal: &[Monomial],
    n: usize,
    k: u32,
    budget: u128,
) -> Result<u64, HilbertError> {
    let count = binomial(k as i64 + n as i64 - 1, n as i64 - 1)
        .to_u128()
        .unwrap_or(u128::MAX);
    if count > budget {
        return Err(HilbertError::EnumerationTooLarge { count, budget });
    }
    let gens: Vec<&[u16]> = lead_ideal.iter().map(|m| m.exponents()).collect();
    let mut cur = vec![0u16; n];
    let mut total = 0u64;
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, gens: &[&[u16]], total: &mut u64) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left as u16;
            if !gens.iter().any(|g| divides(g, cur)) {
                *total += 1;
            }
            cur[i] = 0;
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, gens, total);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return Ok((k == 0 && lead_ideal.is_empty()) as u64);
    }
    rec(0, k, &mut cur, &gens, &mut total);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn free_ring_and_principal() {
        assert_eq!(hilbert_numerator(&[], 3).unwrap().coeffs, vec![1]);
        assert_eq!(
            hilbert_numerator(&[m(&[2, 0])], 2).unwrap().coeffs,
            vec![1, 0, -1]
        );
    }

    #[test]
    fn polynomial_of_principal_quadric() {
        let hp = hilbert_polynomial(&HilbertNumerator::new(vec![1, 0, -1], 2));
        assert!(hp.equals_integers(&[2]));
        assert_eq!(hp.to_string(), "2");
    }

    #[test]
    fn surface_polynomial_from_numerator() {
        let hp = hilbert_polynomial(&HilbertNumerator::new(vec![1, 7, 28], 3));
        assert!(hp.equals_integers(&[1, -9, 18]));
        assert_eq!(hp.to_string(), "18k^2-9k+1");
        assert_eq!(hp.k0, 0);
    }

    #[test]
    fn artinian_case() {
        let hp = hilbert_polynomial(&HilbertNumerator::new(vec![5], 0));
        assert!(hp.is_zero());
        assert_eq!(hp.total_length(), 5);
        // (x², y²) in two variables: length 4
        let n = hilbert_numerator(&[m(&[2, 0]), m(&[0, 2])], 2).unwrap();
        let hp = hilbert_polynomial(&n);
        assert!(hp.is_zero());
        assert_eq!(hp.total_length(), 4);
    }

    #[test]
    fn projective_space_closed_form() {
        for n in 1..=4usize {
            let hp = hilbert_polynomial(&HilbertNumerator::new(vec![1], n + 1));
            for k in 0..10i64 {
                let expected = binomial(k + n as i64, n as i64);
                assert_eq!(hp.evaluate(k), BigRational::from_integer(expected));
            }
        }
    }

    #[test]
    fn oracle_counts() {
        let gens = [m(&[1, 1, 0]), m(&[0, 0, 2])];
        let n = hilbert_numerator(&gens, 3).unwrap();
        for k in 0..8 {
            let o = hilbert_function_oracle(&gens, 3, k, 1 << 20).unwrap();
            assert_eq!(n.hilbert_function(k), BigInt::from(o));
        }
        assert!(hilbert_function_oracle(&gens, 3, 2000, 10).is_err());
    }
}
