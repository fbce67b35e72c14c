//! Integer matrix rank by fraction-free elimination and by Smith normal form, and the inertia of a
//! symmetric matrix.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("integer overflow in Smith normal form")]
pub struct SmithError;

/// Rank over ℚ by Bareiss elimination in i128.
pub fn rank_bareiss(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect();
    let (n, m) = (a.len(), a.first().map_or(0, Vec::len));
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..n {
            for j in c + 1..m {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
        if r == n {
            break;
        }
    }
    r
}

/// Nonzero invariant factors d₁ | d₂ | … of the Smith normal form.
pub fn smith_invariants(rows: &[Vec<i64>]) -> Result<Vec<i64>, SmithError> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect();
    let (n, m) = (a.len(), a.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    for t in 0..n.min(m) {
        // smallest nonzero entry of the remaining block as pivot
        let Some((pi, pj)) = (t..n)
            .flat_map(|i| (t..m).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let piv = a[t][t];
            let mut dirty = false;
            for i in t + 1..n {
                let q = a[i][t].div_euclid(piv);
                if q != 0 {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, &y) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                        *x = x
                            .checked_sub(q.checked_mul(y).ok_or(SmithError)?)
                            .ok_or(SmithError)?;
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..m {
                let q = a[t][j].div_euclid(piv);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] = row[j]
                            .checked_sub(q.checked_mul(row[t]).ok_or(SmithError)?)
                            .ok_or(SmithError)?;
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if !dirty {
                // divisibility of the rest of the block by the pivot
                match (t + 1..n).find(|&i| (t + 1..m).any(|j| a[i][j] % piv != 0)) {
                    None => break,
                    Some(i) => {
                        let (top, rest) = a.split_at_mut(i);
                        for (x, &y) in top[t][t..].iter_mut().zip(&rest[0][t..]) {
                            *x = x.checked_add(y).ok_or(SmithError)?;
                        }
                        continue;
                    }
                }
            }
            // move the smallest remaining entry of row t / column t into the pivot
            let best_row = (t..n)
                .filter(|&i| a[i][t] != 0)
                .min_by_key(|&i| a[i][t].abs());
            let best_col = (t..m)
                .filter(|&j| a[t][j] != 0)
                .min_by_key(|&j| a[t][j].abs());
            match (best_row, best_col) {
                (Some(i), Some(j)) if a[i][t].abs() <= a[t][j].abs() => a.swap(t, i),
                (_, Some(j)) => a.iter_mut().for_each(|row| row.swap(t, j)),
                (Some(i), None) => a.swap(t, i),
                (None, None) => unreachable!("pivot is nonzero"),
            }
        }
        out.push(i64::try_from(a[t][t].abs()).map_err(|_| SmithError)?);
    }
    Ok(out)
}

/// Numbers of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// det(xI − A) by Faddeev–LeVerrier, coefficients from x⁰ up to xⁿ; `None` on overflow.
pub fn characteristic_polynomial(rows: &[Vec<i64>]) -> Option<Vec<i128>> {
    let n = rows.len();
    let a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I, c_{n−k} = −tr(A·M_k)/k
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i128;
                for (l, row) in m.iter().enumerate() {
                    acc = acc.checked_add(a[i][l].checked_mul(row[j])?)?;
                }
                next[i][j] = acc;
            }
            next[i][i] = next[i][i].checked_add(c[n + 1 - k])?;
        }
        m = next;
        let mut tr = 0i128;
        for i in 0..n {
            for l in 0..n {
                tr = tr.checked_add(a[i][l].checked_mul(m[l][i])?)?;
            }
        }
        c[n - k] = -tr / k as i128;
    }
    Some(c)
}

fn sign_changes(c: &[i128]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|&&v| v != 0).map(|&v| v > 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia of a symmetric integer matrix: its characteristic polynomial has only real roots, so
/// Descartes' rule of signs counts the positive and negative ones exactly.
pub fn inertia(rows: &[Vec<i64>]) -> Option<Inertia> {
    let c = characteristic_polynomial(rows)?;
    let zero = c.iter().position(|&v| v != 0).unwrap_or(c.len());
    let c = &c[zero..];
    let flipped: Vec<i128> = c
        .iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 1 { -v } else { v })
        .collect();
    Some(Inertia {
        positive: sign_changes(c),
        negative: sign_changes(&flipped),
        zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_of_small_matrices() {
        assert_eq!(
            smith_invariants(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap(),
            [2, 6, 12]
        );
        assert_eq!(
            smith_invariants(&[vec![0, 0], vec![0, 0]]).unwrap(),
            Vec::<i64>::new()
        );
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]]).unwrap(), [1, 6]);
    }

    #[test]
    fn bareiss_rank() {
        assert_eq!(
            rank_bareiss(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]),
            2
        );
        assert_eq!(rank_bareiss(&[vec![0, 0], vec![0, 0]]), 0);
        // affine Ã₂ cycle
        assert_eq!(
            rank_bareiss(&[vec![-2, 1, 1], vec![1, -2, 1], vec![1, 1, -2]]),
            2
        );
    }

    #[test]
    fn inertia_of_small_matrices() {
        // hyperbolic plane U
        assert_eq!(
            inertia(&[vec![0, 1], vec![1, 0]]),
            Some(Inertia {
                positive: 1,
                negative: 1,
                zero: 0
            })
        );
        assert_eq!(
            inertia(&[vec![-2, 1, 1], vec![1, -2, 1], vec![1, 1, -2]]),
            Some(Inertia {
                positive: 0,
                negative: 2,
                zero: 1
            })
        );
        assert_eq!(
            characteristic_polynomial(&[vec![1, 2], vec![3, 4]]),
            Some(vec![-2, -5, 1])
        );
    }
}
