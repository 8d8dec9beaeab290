//! Fundamental-parallelepiped enumeration through the Smith normal form.
//!
//! Writing `A` for the matrix whose columns are the homogenized vertices
//! `(v_i, 1)`, the lattice points of the half-open parallelepiped are exactly
//! one representative per coset of `Z^{d+1} / A·Z^{d+1}`. With
//! `u · A · v = diag(d_1, ..., d_{d+1})` the cosets are indexed by
//! `y ∈ Π [0, d_j)`; the barycentric coordinates of the representative are
//! the fractional parts of `x = v · (y_j / d_j)`, and the representative
//! itself is `u⁻¹·y - A·⌊x⌋`. Everything is exact: `x` is carried as an
//! integer numerator over the common denominator `det`.

use super::mat::{self, Mat};
use super::snf::smith_normal_form;
use super::{DeltaVector, LatticeError, LatticeSimplex, ParallelepipedPoint};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) struct CosetBasis {
    n: usize,
    /// Radix per nontrivial elementary divisor, paired with its position.
    radices: Vec<(usize, u64)>,
    /// `v[:, j] · (det / d_j)` for each nontrivial position `j`.
    v_cols_scaled: Vec<Vec<BigInt>>,
    /// `u⁻¹[:, j]` for each nontrivial position `j`.
    u_inv_cols: Vec<Vec<BigInt>>,
    /// Homogenized vertex columns `(v_i, 1)`.
    a: Mat,
    det: BigInt,
    vol: u64,
}

impl CosetBasis {
    pub(crate) fn build(s: &LatticeSimplex, budget: u64) -> Result<Self, LatticeError> {
        let rows = s.homogenized_rows()?;
        let n = rows.len();
        let mut a = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                a[j][i] = x.clone();
            }
        }
        let snf = smith_normal_form(&a);
        if snf.diag.iter().any(|d| d.is_zero()) {
            return Err(LatticeError::Degenerate);
        }
        let det: BigInt = snf.diag.iter().product();
        if det > BigInt::from(budget) {
            return Err(LatticeError::BudgetExceeded {
                needed: det.to_string(),
                budget,
            });
        }
        let vol = det.to_u64().expect("volume fits u64 once under budget");

        let mut radices = Vec::new();
        let mut v_cols_scaled = Vec::new();
        let mut u_inv_cols = Vec::new();
        for (j, dj) in snf.diag.iter().enumerate() {
            if dj.is_one() {
                continue;
            }
            let scale = &det / dj;
            radices.push((j, dj.to_u64().expect("divisor divides the volume")));
            v_cols_scaled.push((0..n).map(|i| &snf.v[i][j] * &scale).collect());
            u_inv_cols.push((0..n).map(|i| snf.u_inv[i][j].clone()).collect());
        }
        Ok(CosetBasis {
            n,
            radices,
            v_cols_scaled,
            u_inv_cols,
            a,
            det,
            vol,
        })
    }

    pub(crate) fn volume(&self) -> u64 {
        self.vol
    }

    fn digits(&self, mut idx: u64) -> Vec<u64> {
        let mut y = Vec::with_capacity(self.radices.len());
        for &(_, radix) in &self.radices {
            y.push(idx % radix);
            idx /= radix;
        }
        debug_assert_eq!(idx, 0);
        y
    }

    /// Numerators of `x = v·(y_j/d_j)` over the common denominator `det`,
    /// and the integer coset representative `u⁻¹·y`.
    fn raw_coset(&self, idx: u64) -> (Vec<BigInt>, Vec<BigInt>) {
        let y = self.digits(idx);
        let mut x_num = vec![BigInt::zero(); self.n];
        let mut z = vec![BigInt::zero(); self.n];
        for (t, &digit) in y.iter().enumerate() {
            if digit == 0 {
                continue;
            }
            let digit = BigInt::from(digit);
            for i in 0..self.n {
                x_num[i] += &self.v_cols_scaled[t][i] * &digit;
                z[i] += &self.u_inv_cols[t][i] * &digit;
            }
        }
        (x_num, z)
    }

    pub(crate) fn point_from_index(&self, idx: u64) -> ParallelepipedPoint {
        let (x_num, z) = self.raw_coset(idx);
        let mut floors = Vec::with_capacity(self.n);
        let mut barycentric = Vec::with_capacity(self.n);
        for num in &x_num {
            let f = num.div_floor(&self.det);
            let rem = num - &f * &self.det;
            barycentric.push(BigRational::new(rem, self.det.clone()));
            floors.push(f);
        }
        let shift = mat::mat_vec(&self.a, &floors);
        let coords: Vec<BigInt> = z.iter().zip(&shift).map(|(zi, si)| zi - si).collect();
        let degree = coords[self.n - 1]
            .to_usize()
            .expect("degree lies in [0, d]");
        debug_assert!(degree < self.n);
        debug_assert_eq!(
            barycentric.iter().sum::<BigRational>(),
            BigRational::from_integer(BigInt::from(degree)),
            "degree is the sum of the barycentric parts"
        );
        ParallelepipedPoint {
            coords,
            degree,
            barycentric,
        }
    }

    /// Degree of the representative only: the last row of `A` is all ones,
    /// so `degree = (u⁻¹·y)_last - Σ_i ⌊x_i⌋`.
    pub(crate) fn degree_from_index(&self, idx: u64) -> usize {
        let (x_num, z) = self.raw_coset(idx);
        let mut floor_sum = BigInt::zero();
        for num in &x_num {
            floor_sum += num.div_floor(&self.det);
        }
        (&z[self.n - 1] - floor_sum)
            .to_usize()
            .expect("degree lies in [0, d]")
    }
}

pub(crate) fn enumerate(
    s: &LatticeSimplex,
    budget: u64,
) -> Result<Vec<ParallelepipedPoint>, LatticeError> {
    let basis = CosetBasis::build(s, budget)?;
    let mut points = collect_points(&basis);
    points.sort_unstable_by(|a, b| (a.degree, &a.coords).cmp(&(b.degree, &b.coords)));
    Ok(points)
}

#[cfg(feature = "parallel")]
fn collect_points(basis: &CosetBasis) -> Vec<ParallelepipedPoint> {
    (0..basis.vol)
        .into_par_iter()
        .map(|idx| basis.point_from_index(idx))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn collect_points(basis: &CosetBasis) -> Vec<ParallelepipedPoint> {
    (0..basis.vol)
        .map(|idx| basis.point_from_index(idx))
        .collect()
}

pub(crate) fn delta_vector(s: &LatticeSimplex, budget: u64) -> Result<DeltaVector, LatticeError> {
    let basis = CosetBasis::build(s, budget)?;
    let counts = degree_histogram(&basis);
    assert_eq!(
        counts.iter().sum::<u64>(),
        basis.vol,
        "every coset yields exactly one parallelepiped point"
    );
    let entries = counts.into_iter().map(BigInt::from).collect();
    Ok(DeltaVector::new(entries).expect("enumeration preserves the delta-vector invariants"))
}

#[cfg(feature = "parallel")]
fn degree_histogram(basis: &CosetBasis) -> Vec<u64> {
    (0..basis.vol)
        .into_par_iter()
        .fold(
            || vec![0u64; basis.n],
            |mut acc, idx| {
                acc[basis.degree_from_index(idx)] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; basis.n],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

#[cfg(not(feature = "parallel"))]
fn degree_histogram(basis: &CosetBasis) -> Vec<u64> {
    let mut acc = vec![0u64; basis.n];
    for idx in 0..basis.vol {
        acc[basis.degree_from_index(idx)] += 1;
    }
    acc
}
