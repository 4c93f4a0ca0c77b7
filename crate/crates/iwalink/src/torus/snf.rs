//! Smith-style diagonalization of integer matrices, tracking the column
//! transform needed to parametrize solution subgroups of congruence systems.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Diagonalization `U * A * C = D` by unimodular row and column operations.
/// Only the diagonal of `D` and the column transform `C` are returned; the
/// invariant-factor divisibility chain is not enforced since every later use
/// reads the diagonal through `gcd(d_j, p^n)`.
pub struct Diagonalized {
    pub diag: Vec<BigInt>,
    pub col_transform: Vec<Vec<BigInt>>, // C, size d x d (columns of C are the new basis)
}

pub fn diagonalize(a: &[Vec<i64>], d: usize, track_cols: bool) -> Diagonalized {
    let rows = a.len();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| {
            assert_eq!(r.len(), d);
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut c: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let steps = rows.min(d);
    for k in 0..steps {
        loop {
            // pivot: minimal nonzero absolute value in the trailing block
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..d {
                    if !m[i][j].is_zero()
                        && pivot
                            .map(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match pivot {
                Some(p) => p,
                None => return finish(m, c, steps),
            };
            m.swap(k, pi);
            if pj != k {
                for row in m.iter_mut() {
                    row.swap(k, pj);
                }
                c.swap(k, pj); // c stored row-per-column; see note below
            }
            let mut clean = true;
            // clear column k below the pivot
            for i in k + 1..rows {
                if !m[i][k].is_zero() {
                    let q = rounded_div(&m[i][k], &m[k][k]);
                    if !q.is_zero() {
                        for j in k..d {
                            let v = &m[i][j] - &q * &m[k][j];
                            m[i][j] = v;
                        }
                    }
                    if !m[i][k].is_zero() {
                        clean = false;
                    }
                }
            }
            // clear row k to the right of the pivot
            for j in k + 1..d {
                if !m[k][j].is_zero() {
                    let q = rounded_div(&m[k][j], &m[k][k]);
                    if !q.is_zero() {
                        for row in m.iter_mut() {
                            let v = &row[j] - &q * &row[k];
                            row[j] = v;
                        }
                        if track_cols {
                            for idx in 0..d {
                                let v = &c[j][idx] - &q * &c[k][idx];
                                c[j][idx] = v;
                            }
                        }
                    }
                    if !m[k][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
    }
    finish(m, c, steps)
}

// `c` is stored as one Vec per *column* of C (c[j] = column j, as a length-d
// vector), so column operations on A become row-style updates on `c`.
fn finish(m: Vec<Vec<BigInt>>, c: Vec<Vec<BigInt>>, steps: usize) -> Diagonalized {
    let diag = (0..steps).map(|k| m[k][k].clone()).collect();
    Diagonalized { diag, col_transform: c }
}

fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    // quotient minimizing |a - q b|
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if &r.abs() * &two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_c_unimodular_and_consistent(a: &[Vec<i64>], d: usize) {
        let out = diagonalize(a, d, true);
        // A*C = U^{-1} D, so column j of A*C is d_j times a column of the
        // unimodular U^{-1}: every entry is divisible by d_j, and columns
        // beyond the diagonal vanish.
        let rows = a.len();
        for j in 0..d {
            let dj = out.diag.get(j).cloned().unwrap_or_else(BigInt::zero);
            for (i, row) in a.iter().enumerate().take(rows) {
                let mut s = BigInt::zero();
                for k in 0..d {
                    s += BigInt::from(row[k]) * &out.col_transform[j][k];
                }
                if dj.is_zero() {
                    assert!(s.is_zero(), "column {} entry {} should vanish, got {}", j, i, s);
                } else {
                    assert!(
                        (&s % &dj).is_zero(),
                        "entry ({}, {}) = {} not divisible by d_{} = {}",
                        i,
                        j,
                        s,
                        j,
                        dj
                    );
                }
            }
        }
    }

    #[test]
    fn diagonalizes_small_matrices() {
        check_c_unimodular_and_consistent(&[vec![2, 4], vec![6, 8]], 2);
        check_c_unimodular_and_consistent(&[vec![1, 1]], 2);
        check_c_unimodular_and_consistent(&[vec![3, 0, 0], vec![0, 0, 5]], 3);
        check_c_unimodular_and_consistent(&[vec![0, 0]], 2);
        check_c_unimodular_and_consistent(&[vec![2, 3, 5], vec![7, 11, 13], vec![1, 0, 1]], 3);
    }
}
