//! Exact integer and rational linear algebra.
//!
//! Everything here is fraction-free (Bareiss) elimination over `BigInt`, so
//! determinants and solutions are exact regardless of graph size.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Leading principal minors `det(M_1), ..., det(M_n)` of a square matrix.
///
/// Runs Bareiss elimination without pivoting; after step `k` the pivot is
/// exactly `det(M_{k+1})`. When a pivot vanishes the remaining minors are
/// computed from scratch for the affected sizes.
pub fn leading_principal_minors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            // Elimination without pivoting cannot continue; fall back to an
            // independent determinant for each remaining leading block.
            minors.push(BigInt::zero());
            for m in (k + 2)..=n {
                let block: Vec<Vec<i64>> = rows[..m].iter().map(|r| r[..m].to_vec()).collect();
                minors.push(determinant(&block));
            }
            return minors;
        }
        minors.push(a[k][k].clone());
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    minors
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * prev
}

/// Solves `M x = b` exactly for a nonsingular integer matrix.
///
/// Returns `None` when `M` is singular.
pub fn solve(matrix: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<BigRational>> {
    let n = matrix.len();
    assert_eq!(rhs.len(), n, "right-hand side length");
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut row: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
            row.push(BigInt::from(b));
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(p, k);
        for i in (k + 1)..n {
            for j in (k + 1)..=n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(a[i][n].clone());
        for j in (i + 1)..n {
            acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(a[i][i].clone());
    }
    Some(x)
}

/// Negative definiteness from the signs of the leading principal minors:
/// `(-1)^k det(M_k) > 0` for every `k`.
pub fn is_negative_definite(rows: &[Vec<i64>]) -> bool {
    leading_principal_minors(rows)
        .iter()
        .enumerate()
        .all(|(i, d)| {
            if i % 2 == 0 {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
}
