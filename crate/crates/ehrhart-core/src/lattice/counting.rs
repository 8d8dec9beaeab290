//! Budgeted brute-force lattice-point counting in dilates.
//!
//! Counts `|nP ∩ Z^N|` (or the interior variant) by scanning every integer
//! point of the bounding box of `nP` and testing barycentric membership
//! exactly. The barycentric solve is scaled by the determinant so the inner
//! loop is pure integer arithmetic; an `i128` fast path covers every input
//! whose intermediate products provably fit, with big integers as fallback.

use super::mat::{self};
use super::{LatticeError, LatticeSimplex};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn count_dilates(
    s: &LatticeSimplex,
    n: u64,
    interior: bool,
    box_budget: u64,
) -> Result<u64, LatticeError> {
    let rows = s.homogenized_rows()?;
    let size = rows.len();
    let ambient = size - 1;
    // Columns are the homogenized vertices (v_i, 1).
    let mut a = vec![vec![BigInt::zero(); size]; size];
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            a[j][i] = x.clone();
        }
    }
    let (mut b, det) = mat::inverse_times_det(&a).ok_or(LatticeError::Degenerate)?;
    if det.is_negative() {
        // Fold the determinant sign into b so membership is simply
        // "every scaled coordinate nonnegative" (positive for interior).
        for row in b.iter_mut() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }

    let n_big = BigInt::from(n);
    let mut lo = Vec::with_capacity(ambient);
    let mut hi = Vec::with_capacity(ambient);
    for j in 0..ambient {
        let min = s.vertices.iter().map(|v| &v[j]).min().unwrap();
        let max = s.vertices.iter().map(|v| &v[j]).max().unwrap();
        lo.push(min * &n_big);
        hi.push(max * &n_big);
    }

    let mut box_points = BigInt::from(1u32);
    for (l, h) in lo.iter().zip(&hi) {
        box_points *= h - l + 1;
    }
    if box_points > BigInt::from(box_budget) {
        return Err(LatticeError::BudgetExceeded {
            needed: box_points.to_string(),
            budget: box_budget,
        });
    }

    // Worst-case |row · (q, n)| over the box decides whether i128 suffices.
    let coord_bound = lo
        .iter()
        .chain(hi.iter())
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        .max(n_big.clone());
    let dot_bound = mat::max_abs(&b) * coord_bound * BigInt::from(size as u64);
    if dot_bound < BigInt::from(i128::MAX / 4) {
        let b128: Vec<Vec<i128>> = b
            .iter()
            .map(|row| row.iter().map(|x| x.to_i128().unwrap()).collect())
            .collect();
        let lo128: Vec<i128> = lo.iter().map(|x| x.to_i128().unwrap()).collect();
        let hi128: Vec<i128> = hi.iter().map(|x| x.to_i128().unwrap()).collect();
        Ok(count_box(&b128, &lo128, &hi128, &(n as i128), interior))
    } else {
        Ok(count_box(&b, &lo, &hi, &n_big, interior))
    }
}

trait BoxScalar: Clone + Ord + Send + Sync {
    fn zero() -> Self;
    fn from_u64(x: u64) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn incr(&mut self);
    fn span_u64(lo: &Self, hi: &Self) -> u64;
}

impl BoxScalar for i128 {
    fn scalar_zero() -> Self {
        0
    }
    fn from_u64(x: u64) -> Self {
        x as i128
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn incr(&mut self) {
        *self += 1;
    }
    fn span_u64(lo: &Self, hi: &Self) -> u64 {
        (hi - lo) as u64
    }
}

impl BoxScalar for BigInt {
    fn scalar_zero() -> Self {
        BigInt::zero()
    }
    fn from_u64(x: u64) -> Self {
        BigInt::from(x)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn incr(&mut self) {
        *self += 1;
    }
    fn span_u64(lo: &Self, hi: &Self) -> u64 {
        (hi - lo).to_u64().expect("span bounded by the box budget")
    }
}

/// Counts accepted points of the box `Π [lo_j, hi_j]`, splitting on the
/// first coordinate. `b` already carries the determinant sign.
fn count_box<T: BoxScalar>(b: &[Vec<T>], lo: &[T], hi: &[T], n: &T, interior: bool) -> u64 {
    let span0 = T::span_u64(&lo[0], &hi[0]);
    let count_at = |offset: u64| {
        let q0 = lo[0].add_ref(&T::from_u64(offset));
        count_slice(b, &q0, &lo[1..], &hi[1..], n, interior)
    };
    #[cfg(feature = "parallel")]
    {
        (0..=span0).into_par_iter().map(count_at).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..=span0).map(count_at).sum()
    }
}

/// Odometer over the remaining coordinates with the first one fixed.
fn count_slice<T: BoxScalar>(
    b: &[Vec<T>],
    q0: &T,
    lo: &[T],
    hi: &[T],
    n: &T,
    interior: bool,
) -> u64 {
    let mut q: Vec<T> = lo.to_vec();
    let mut count = 0u64;
    loop {
        if accepts(b, q0, &q, n, interior) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == q.len() {
                return count;
            }
            if q[pos] < hi[pos] {
                q[pos].incr();
                break;
            }
            q[pos] = lo[pos].clone();
            pos += 1;
        }
    }
}

/// Membership of `(q0, q_rest)` in the (closed or open) dilate: every
/// det-scaled barycentric coordinate `row · (q, n)` must be nonnegative
/// (positive for the interior).
fn accepts<T: BoxScalar>(b: &[Vec<T>], q0: &T, q_rest: &[T], n: &T, interior: bool) -> bool {
    let zero = T::scalar_zero();
    for row in b {
        let mut acc = row[0].mul_ref(q0);
        for (coef, qi) in row[1..row.len() - 1].iter().zip(q_rest) {
            acc = acc.add_ref(&coef.mul_ref(qi));
        }
        acc = acc.add_ref(&row[row.len() - 1].mul_ref(n));
        let bad = if interior { acc <= zero } else { acc < zero };
        if bad {
            return false;
        }
    }
    true
}
