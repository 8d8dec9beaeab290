//! Small exact integer-matrix helpers: Bareiss determinants, rank, and
//! det-scaled inverses. All matrices are dense row-major `Vec<Vec<BigInt>>`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Mat = Vec<Vec<BigInt>>;

pub(crate) fn identity(n: usize) -> Mat {
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

pub(crate) fn mat_vec(a: &Mat, x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum())
        .collect()
}

#[cfg(test)]
pub(crate) fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let p = b[0].len();
    let mut out = vec![vec![BigInt::zero(); p]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..b.len()).map(|t| &a[i][t] * &b[t][j]).sum();
        }
    }
    out
}

/// Exact determinant by fraction-free Bareiss elimination.
pub(crate) fn det_bareiss(mut a: Mat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Rank over the rationals, by fraction-free elimination with full pivoting.
pub(crate) fn rank(mut a: Mat) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = (r..rows).find(|&i| !a[i][c].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Returns `(b, det)` with `a · b = det · I`, or `None` when `a` is singular.
///
/// `b` is the adjugate up to the sign convention `b = det · a⁻¹`; its entries
/// are exact integers.
pub(crate) fn inverse_times_det(a: &Mat) -> Option<(Mat, BigInt)> {
    let n = a.len();
    let det = det_bareiss(a.clone());
    if det.is_zero() {
        return None;
    }
    // Rational Gauss-Jordan on [a | I].
    let mut w: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !w[i][c].is_zero())?;
        w.swap(c, p);
        let inv = w[c][c].recip();
        for x in w[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i == c || w[i][c].is_zero() {
                continue;
            }
            let f = w[i][c].clone();
            for j in 0..2 * n {
                let sub = &f * &w[c][j];
                w[i][j] -= sub;
            }
        }
    }
    let det_rat = BigRational::from_integer(det.clone());
    let b = w
        .iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| {
                    let scaled = x * &det_rat;
                    debug_assert!(scaled.denom().is_one());
                    scaled.to_integer()
                })
                .collect()
        })
        .collect();
    Some((b, det))
}

pub(crate) fn max_abs(a: &Mat) -> BigInt {
    a.iter()
        .flat_map(|row| row.iter())
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: Vec<Vec<i64>>) -> Mat {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_bareiss(mat(vec![vec![2]])), BigInt::from(2));
        assert_eq!(
            det_bareiss(mat(vec![vec![0, 1], vec![1, 0]])),
            BigInt::from(-1),
            "swap changes sign"
        );
        assert_eq!(
            det_bareiss(mat(vec![vec![2, 0, 0], vec![1, 3, 0], vec![5, 7, 4]])),
            BigInt::from(24)
        );
        assert_eq!(
            det_bareiss(mat(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]])),
            BigInt::zero()
        );
        // Needs a pivot swap mid-elimination.
        assert_eq!(
            det_bareiss(mat(vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 1]])),
            BigInt::from(-1)
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(mat(vec![vec![1, 2, 3], vec![2, 4, 6]])), 1);
        assert_eq!(rank(mat(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]])), 2);
        assert_eq!(rank(mat(vec![vec![0, 0], vec![0, 0]])), 0);
        assert_eq!(rank(mat(vec![vec![0, 1], vec![1, 0], vec![1, 1]])), 2);
    }

    #[test]
    fn inverse_times_det_is_exact() {
        let a = mat(vec![vec![2, 1, 0], vec![-3, 4, 5], vec![0, 7, 1]]);
        let (b, det) = inverse_times_det(&a).unwrap();
        assert_eq!(det, det_bareiss(a.clone()));
        let prod = mat_mul(&a, &b);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expect = if i == j { det.clone() } else { BigInt::zero() };
                assert_eq!(*x, expect);
            }
        }
        assert!(inverse_times_det(&mat(vec![vec![1, 2], vec![2, 4]])).is_none());
    }
}
