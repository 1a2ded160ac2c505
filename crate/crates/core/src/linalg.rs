//! Small dense linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Rational>>`. Everything here is exact;
//! pivots are chosen as the first nonzero entry, which is all exact
//! arithmetic needs.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::weight::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    (0..cols).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Rational::zero(), |acc, k| acc + row[k] * b[k][j])
                })
                .collect()
        })
        .collect()
}

/// Row vector times matrix.
pub fn row_times(v: &[Rational], m: &Matrix) -> Vec<Rational> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(m)
                .fold(Rational::zero(), |acc, (x, row)| acc + *x * row[j])
        })
        .collect()
}

/// Matrix times column vector.
pub fn times_col(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (a, b)| acc + *a * *b)
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` when singular or not square.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return None;
    }
    let mut a: Matrix = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(a: &mut Matrix) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pv = a[r][c];
        for x in a[r].iter_mut() {
            *x /= pv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..cols {
                    let t = a[r][j];
                    a[i][j] -= f * t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : m x = 0}` where `m` has `cols` columns.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -a[row][f];
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{int, rat};

    fn m(rows: &[&[i128]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let c = m(&[&[2, -1], &[-1, 2]]);
        let inv = inverse(&c).unwrap();
        assert_eq!(inv, vec![vec![rat(2, 3), rat(1, 3)], vec![rat(1, 3), rat(2, 3)]]);
        assert_eq!(mul(&c, &inv), identity(2));
    }

    #[test]
    fn singular_has_no_inverse() {
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, -1, 0], &[0, 1, -1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(times_col(&a, v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(nullspace(&Vec::new(), 2).len(), 2);
    }
}
