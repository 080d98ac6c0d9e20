//! Dense exact linear algebra over the coefficient fields: rank, inverse,
//! and linear solves by Gaussian elimination.

use crate::field::{Coeff, Field};

pub type Matrix = Vec<Vec<Coeff>>;

/// Row-reduce in place to fully reduced echelon form (pivots are 1, cleared
/// above and below); returns the pivot columns.
pub fn row_reduce(mat: &mut Matrix) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Prefer a ±1 pivot to keep rational entries small.
        let mut pivot_row = None;
        for i in r..rows {
            if mat[i][c].is_zero() {
                continue;
            }
            if pivot_row.is_none() {
                pivot_row = Some(i);
            }
            if mat[i][c].is_one() || mat[i][c].neg().is_one() {
                pivot_row = Some(i);
                break;
            }
        }
        let Some(i) = pivot_row else { continue };
        mat.swap(r, i);
        let inv = mat[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            mat[r][j] = mat[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let factor = mat[i][c].clone();
                for j in c..cols {
                    let sub = mat[r][j].mul(&factor);
                    mat[i][j] = mat[i][j].sub(&sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mat: &Matrix) -> usize {
    let mut m = mat.clone();
    row_reduce(&mut m).len()
}

/// Inverse of a square matrix, or None if singular.
pub fn invert(mat: &Matrix, field: Field) -> Option<Matrix> {
    let n = mat.len();
    let mut aug: Matrix = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { field.one() } else { field.zero() });
            }
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul(a: &Matrix, b: &Matrix, field: Field) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = field.zero();
                    for l in 0..k {
                        acc = acc.add(&a[i][l].mul(&b[l][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Solve A·x = b for square invertible A; None if singular.
pub fn solve(a: &Matrix, b: &[Coeff], field: Field) -> Option<Vec<Coeff>> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_inverse_over_q() {
        let q = Field::Rationals;
        let m: Matrix = vec![
            vec![q.from_i64(1), q.from_i64(2)],
            vec![q.from_i64(3), q.from_i64(4)],
        ];
        assert_eq!(rank(&m), 2);
        let inv = invert(&m, q).unwrap();
        let prod = mat_mul(&m, &inv, q);
        assert!(prod[0][0].is_one() && prod[1][1].is_one());
        assert!(prod[0][1].is_zero() && prod[1][0].is_zero());
    }

    #[test]
    fn singular_detected() {
        let q = Field::Rationals;
        let m: Matrix = vec![
            vec![q.from_i64(1), q.from_i64(2)],
            vec![q.from_i64(2), q.from_i64(4)],
        ];
        assert_eq!(rank(&m), 1);
        assert!(invert(&m, q).is_none());
    }

    #[test]
    fn solve_over_f7() {
        let f7 = Field::prime(7).unwrap();
        let m: Matrix = vec![
            vec![f7.from_i64(2), f7.from_i64(1)],
            vec![f7.from_i64(1), f7.from_i64(3)],
        ];
        let b = vec![f7.from_i64(1), f7.from_i64(0)];
        let x = solve(&m, &b, f7).unwrap();
        // 2x + y = 1, x + 3y = 0 mod 7
        let c0 = m[0][0].mul(&x[0]).add(&m[0][1].mul(&x[1]));
        let c1 = m[1][0].mul(&x[0]).add(&m[1][1].mul(&x[1]));
        assert_eq!(c0, b[0]);
        assert_eq!(c1, b[1]);
    }
}
