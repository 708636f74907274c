//! Exact linear algebra over ℚ: rank, solving and kernels.
//!
//! Rank uses fraction-free (Bareiss) elimination on integer rows obtained by
//! clearing denominators; solving and kernels use rational reduced row echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coeffring::Rational;

pub type Matrix = Vec<Vec<Rational>>;

fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Rank by Bareiss elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut a = integer_rows(m);
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(a: &mut Matrix) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let v = &f * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Some solution of `m x = b`, or `None` if inconsistent. Free variables are set to 0.
pub fn solve(m: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    if m.is_empty() {
        return Some(vec![Rational::zero(); cols]);
    }
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// A basis of the right kernel `{x : m x = 0}`; `cols` fixes the width for empty matrices.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn mat_vec(m: &Matrix, x: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| row.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    // Determinant by cofactor expansion, used as an independent rank oracle.
    fn det(a: &Matrix) -> Rational {
        let n = a.len();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let minor: Matrix = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &a[0][j] * det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
            .collect()
    }

    fn minor_rank(a: &Matrix) -> usize {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        (1..=rows.min(cols))
            .rev()
            .find(|&k| {
                subsets(rows, k).iter().any(|rs| {
                    subsets(cols, k).iter().any(|cs| {
                        let sub: Matrix = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c].clone()).collect()).collect();
                        !det(&sub).is_zero()
                    })
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn rank_agrees_with_minors() {
        let cases = [
            m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]),
            m(&[&[0, 0], &[0, 0]]),
            m(&[&[2, -1, 0, 3], &[1, 1, 1, 1], &[3, 0, 1, 4]]),
            m(&[&[5]]),
        ];
        for a in cases {
            assert_eq!(rank(&a), minor_rank(&a), "{a:?}");
        }
        let frac = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), int(1)]];
        assert_eq!(rank(&frac), minor_rank(&frac));
    }

    #[test]
    fn solve_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let x = solve(&a, &[int(1), int(2)]).unwrap();
        assert_eq!(mat_vec(&a, &x), vec![int(1), int(2)]);
        assert!(solve(&a, &[int(1), int(3)]).is_none());
        let k = nullspace(&a, 3);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(mat_vec(&a, &v).iter().all(Zero::is_zero));
        }
    }
}
