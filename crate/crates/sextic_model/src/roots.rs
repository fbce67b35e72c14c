//! Dense univariate polynomials over GF(p) and their roots by distinct- and equal-degree splitting.

use rand::Rng;

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    p: u64,
    c: Vec<u64>,
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a, p - 2, p)
}

impl UniPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, c }
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with −1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| (acc * x + a) % self.p)
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => {
                let i = mod_inv(lc, self.p);
                Self::new(self.p, self.c.iter().map(|&a| a * i).collect())
            }
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let at = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(
            self.p,
            (0..n)
                .map(|i| at(&self.c, i) + self.p - at(&o.c, i))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let mut r = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                r[i + j] = (r[i + j] + a * b) % self.p;
            }
        }
        Self::new(self.p, r)
    }

    /// (quotient, remainder) by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let p = self.p;
        let mut r = self.c.clone();
        let dl = d.c.len();
        if r.len() < dl {
            return (Self::new(p, vec![]), self.clone());
        }
        let inv = mod_inv(*d.c.last().expect("nonzero"), p);
        let mut q = vec![0u64; r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let coef = r[k + dl - 1] * inv % p;
            q[k] = coef;
            if coef != 0 {
                for (j, &dj) in d.c.iter().enumerate() {
                    r[k + j] = (r[k + j] + p * p - coef * dj) % p;
                }
            }
        }
        r.truncate(dl - 1);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut acc = Self::new(self.p, vec![1]).rem(m);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            e >>= 1;
        }
        acc
    }
}

/// Splits a monic squarefree product of distinct linear factors into its roots.
fn split_linear(g: &UniPoly, rng: &mut impl Rng, out: &mut Vec<u64>) {
    let p = g.p;
    match g.degree() {
        d if d < 1 => {}
        1 => out.push((p - g.c[0] * mod_inv(g.c[1], p) % p) % p),
        _ => loop {
            let delta = rng.random_range(0..p);
            let t = UniPoly::new(p, vec![delta, 1])
                .pow_mod((p - 1) / 2, g)
                .sub(&UniPoly::new(p, vec![1]));
            let h = g.gcd(&t);
            if h.degree() >= 1 && h.degree() < g.degree() {
                let (q, _) = g.div_rem(&h);
                split_linear(&h, rng, out);
                split_linear(&q.monic(), rng, out);
                return;
            }
        },
    }
}

/// The distinct roots of f in GF(p), ascending. Requires p odd.
pub fn roots(f: &UniPoly, rng: &mut impl Rng) -> Vec<u64> {
    let p = f.p;
    if f.degree() < 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let f = f.monic();
    if f.c[0] == 0 {
        out.push(0);
    }
    // gcd with X^p − X isolates the product of the distinct linear factors
    let xp = UniPoly::x(p).pow_mod(p, &f);
    let g = f.gcd(&xp.sub(&UniPoly::x(p)));
    let mut lin = Vec::new();
    split_linear(&g, rng, &mut lin);
    out.extend(lin.into_iter().filter(|&r| r != 0));
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn roots_of_products() {
        let p = 263;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let lin = |r: u64| UniPoly::new(p, vec![p - r, 1]);
        let f = lin(3)
            .mul(&lin(3))
            .mul(&lin(0))
            .mul(&lin(200))
            .mul(&UniPoly::new(p, vec![5, 0, 1]));
        // x² + 5 has a root iff −5 is a square mod 263
        let extra: Vec<u64> = (0..p).filter(|x| (x * x + 5) % p == 0).collect();
        let mut expected = vec![0, 3, 200];
        expected.extend(extra);
        expected.sort_unstable();
        assert_eq!(roots(&f, &mut rng), expected);
    }

    #[test]
    fn brute_force_agreement() {
        let p = 263;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let f = UniPoly::new(p, (0..7).map(|_| rng.random_range(0..p)).collect());
            let brute: Vec<u64> = (0..p).filter(|&x| f.eval(x) == 0).collect();
            assert_eq!(roots(&f, &mut rng), brute, "{f:?}");
        }
    }

    #[test]
    fn div_rem_reconstructs() {
        let p = 263;
        let a = UniPoly::new(p, vec![1, 2, 3, 4, 5, 6]);
        let b = UniPoly::new(p, vec![7, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).sub(&a.sub(&r)), UniPoly::new(p, vec![]));
        assert!(r.degree() < b.degree());
    }
}
