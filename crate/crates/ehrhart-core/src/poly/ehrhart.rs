//! Ehrhart polynomials from δ-vectors and the degree-`k` factor family
//! `g_{m,d,k}(n) = Π_{j=d-k+1}^{d}(n+j) + m·Π_{j=0}^{k-1}(n-j)`.

use super::RationalPolynomial;
use crate::family::FamilyParams;
use crate::lattice::DeltaVector;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Structured report for a failed exact polynomial/series identity.
///
/// Signals an implementation bug rather than a user error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{context}: first mismatch at {position}: lhs = {lhs}, rhs = {rhs}")]
pub struct IdentityMismatch {
    pub context: String,
    pub position: String,
    pub lhs: String,
    pub rhs: String,
}

/// `binom(n + a, d)` expanded as an exact polynomial in `n`:
/// `Π_{t=0}^{d-1}(n + a - t) / d!`.
pub(crate) fn binomial_in_n(a: i64, d: usize) -> RationalPolynomial {
    let mut p = RationalPolynomial::one();
    for t in 0..d {
        p = p.mul_linear(&BigRational::from_integer(BigInt::from(a - t as i64)));
    }
    let mut d_factorial = BigInt::one();
    for t in 2..=d {
        d_factorial *= BigInt::from(t);
    }
    p.scale(&BigRational::new(BigInt::one(), d_factorial))
}

/// Assembles the Ehrhart polynomial `Σ_i δ_i · binom(n + d - i, d)` exactly.
pub fn ehrhart_from_delta(dv: &DeltaVector) -> RationalPolynomial {
    let d = dv.dim();
    let mut p = RationalPolynomial::zero();
    for (i, delta) in dv.entries().iter().enumerate() {
        if delta.is_zero() {
            continue;
        }
        let term = binomial_in_n(d as i64 - i as i64, d);
        p = &p + &term.scale(&BigRational::from_integer(delta.clone()));
    }
    p
}

/// The degree-`k` factor `g_{m,d,k}` with integer coefficients and leading
/// coefficient `m + 1`.
pub fn g_polynomial(params: FamilyParams) -> RationalPolynomial {
    let (m, d, k) = (params.m(), params.d() as i64, params.k() as i64);
    let mut left = RationalPolynomial::one();
    for j in (d - k + 1)..=d {
        left = left.mul_linear(&BigRational::from_integer(BigInt::from(j)));
    }
    let mut right = RationalPolynomial::one();
    for j in 0..k {
        right = right.mul_linear(&BigRational::from_integer(BigInt::from(-j)));
    }
    &left + &right.scale(&BigRational::from_integer(BigInt::from(m)))
}

/// Verifies the exact factorization
/// `d! · i(n) = Π_{j=1}^{d-k}(n+j) · g_{m,d,k}(n)`
/// where `i` is the Ehrhart polynomial assembled from the family δ-vector.
pub fn factor_check(params: FamilyParams) -> Result<(), IdentityMismatch> {
    let (d, k) = (params.d() as i64, params.k() as i64);
    let mut d_factorial = BigInt::one();
    for t in 2..=d {
        d_factorial *= BigInt::from(t);
    }
    let lhs = ehrhart_from_delta(&DeltaVector::theorem_shape(params))
        .scale(&BigRational::from_integer(d_factorial));

    let mut rhs = g_polynomial(params);
    for j in 1..=(d - k) {
        rhs = rhs.mul_linear(&BigRational::from_integer(BigInt::from(j)));
    }

    if lhs == rhs {
        return Ok(());
    }
    let pos = (0..lhs.coeffs().len().max(rhs.coeffs().len()))
        .find(|&i| lhs.coeff(i) != rhs.coeff(i))
        .unwrap_or(0);
    Err(IdentityMismatch {
        context: format!("factorization identity for {params}"),
        position: format!("coefficient of n^{pos}"),
        lhs: lhs.coeff(pos).to_string(),
        rhs: rhs.coeff(pos).to_string(),
    })
}

/// Checks the generating-function identity
/// `Σ_n i(n) λ^n = (1 + m λ^k) / (1 - λ)^{d+1}`
/// on the first `n_terms` coefficients, as exact integers.
///
/// The left side evaluates the assembled Ehrhart polynomial; the right side
/// expands `1/(1-λ)^{d+1}` by iterated prefix sums, so the two routes share
/// no code.
pub fn generating_function_check(
    params: FamilyParams,
    n_terms: usize,
) -> Result<(), IdentityMismatch> {
    let (m, d, k) = (params.m(), params.d() as usize, params.k() as usize);
    assert!(
        n_terms >= d + k + 2,
        "n_terms = {n_terms} must be at least d + k + 2 = {}",
        d + k + 2
    );

    // 1/(1-λ)^{d+1}: start from the coefficients of 1/(1-λ) and prefix-sum d times.
    let mut series = vec![BigInt::one(); n_terms];
    for _ in 0..d {
        for i in 1..n_terms {
            let prev = series[i - 1].clone();
            series[i] += prev;
        }
    }
    let m_big = BigInt::from(m);
    let poly = ehrhart_from_delta(&DeltaVector::theorem_shape(params));

    for n in 0..n_terms {
        let mut rhs = series[n].clone();
        if n >= k {
            rhs += &m_big * &series[n - k];
        }
        let lhs = poly.evaluate_int(n as i64);
        if !lhs.denom().is_one() || lhs.numer() != &rhs {
            return Err(IdentityMismatch {
                context: format!("generating-function identity for {params}"),
                position: format!("λ^{n}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    Ok(())
}

/// Discriminant of the `k = 2` member: `(2d - m - 1)² - 4(m+1)d(d-1)`.
///
/// A negative sign means the two roots form a complex pair with real part
/// `-d/(m+1) + 1/2`; a positive sign means two real roots.
pub fn discriminant_quadratic(m: u64, d: u32) -> BigRational {
    let m = BigInt::from(m);
    let d = BigInt::from(d);
    let b = BigInt::from(2) * &d - &m - 1;
    let ac = BigInt::from(4) * (&m + 1) * &d * (&d - 1);
    BigRational::from_integer(&b * &b - ac)
}

/// Exact real part `-d/(m+1) + 1/2` of the `k = 2` complex root pair, or
/// `None` when the discriminant is nonnegative (real roots).
pub fn k2_complex_real_part(m: u64, d: u32) -> Option<BigRational> {
    if discriminant_quadratic(m, d).is_negative() {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Some(half - BigRational::new(BigInt::from(d), BigInt::from(m + 1)))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent integer binomial `binom(a, d)`, zero for `a < d`.
    fn int_binomial(a: i64, d: u32) -> BigInt {
        if a < d as i64 {
            return BigInt::zero();
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for t in 0..d as i64 {
            num *= BigInt::from(a - t);
            den *= BigInt::from(t + 1);
        }
        num / den
    }

    fn params(m: u64, d: u32, k: u32) -> FamilyParams {
        FamilyParams::new(m, d, k).unwrap()
    }

    #[test]
    fn standard_simplex_polynomial() {
        // δ = (1, 0, ..., 0) gives binom(n+d, d).
        for d in 1..=6u32 {
            let mut entries = vec![BigInt::zero(); d as usize + 1];
            entries[0] = BigInt::one();
            let dv = DeltaVector::new(entries).unwrap();
            let p = ehrhart_from_delta(&dv);
            assert_eq!(p.degree(), Some(d as usize));
            for n in 0..8 {
                let expect = int_binomial(n + d as i64, d);
                assert_eq!(p.evaluate_int(n), BigRational::from_integer(expect));
            }
        }
    }

    #[test]
    fn segment_polynomial() {
        // δ = (1, m) in dimension 1 gives (m+1)n + 1.
        for m in 1..=5i64 {
            let dv = DeltaVector::new(vec![BigInt::one(), BigInt::from(m)]).unwrap();
            let p = ehrhart_from_delta(&dv);
            assert_eq!(p.coeffs(), &[rat(1, 1), rat(m + 1, 1)]);
        }
    }

    #[test]
    fn evaluations_match_integer_binomials() {
        for (m, d, k) in [(9u64, 15u32, 8u32), (2, 5, 3), (5, 4, 1), (7, 10, 5)] {
            let p = ehrhart_from_delta(&DeltaVector::theorem_shape(params(m, d, k)));
            assert_eq!(p.evaluate_int(0), BigRational::one(), "i(0) = 1");
            let lead = p.leading_coefficient().unwrap().clone();
            let mut d_fact = BigInt::one();
            for t in 2..=d as i64 {
                d_fact *= BigInt::from(t);
            }
            assert_eq!(lead, BigRational::new(BigInt::from(m + 1), d_fact));
            for n in 0..10 {
                let expect = int_binomial(n + d as i64, d)
                    + BigInt::from(m) * int_binomial(n + d as i64 - k as i64, d);
                assert_eq!(
                    p.evaluate_int(n),
                    BigRational::from_integer(expect),
                    "(m,d,k)=({m},{d},{k}), n={n}"
                );
            }
        }
    }

    #[test]
    fn g_closed_form_k1() {
        for (m, d) in [(1u64, 2u32), (9, 15), (4, 7)] {
            let g = g_polynomial(params(m, d, 1));
            assert_eq!(g.coeffs(), &[rat(d as i64, 1), rat(m as i64 + 1, 1)]);
        }
    }

    #[test]
    fn g_closed_form_k2() {
        for (m, d) in [(1u64, 3u32), (9, 15), (2, 4), (10, 20)] {
            let g = g_polynomial(params(m, d, 2));
            let (m, d) = (m as i64, d as i64);
            assert_eq!(
                g.coeffs(),
                &[rat(d * (d - 1), 1), rat(2 * d - m - 1, 1), rat(m + 1, 1)],
                "(m,d)=({m},{d})"
            );
        }
    }

    #[test]
    fn g_structure() {
        let g = g_polynomial(params(9, 15, 8));
        assert_eq!(g.degree(), Some(8));
        assert_eq!(g.leading_coefficient().unwrap(), &rat(10, 1));
        // Constant term Π_{j=d-k+1}^{d} j: the m-product vanishes at n = 0.
        let expect: i64 = (8..=15).product();
        assert_eq!(g.constant_term(), rat(expect, 1));
    }

    #[test]
    fn factorization_identity() {
        for (m, d, k) in [(9u64, 15u32, 8u32), (1, 2, 1), (7, 10, 5), (2, 37, 19)] {
            factor_check(params(m, d, k)).unwrap();
        }
    }

    #[test]
    fn generating_function_identity() {
        for (m, d, k, n) in [(1u64, 2u32, 1u32, 10usize), (9, 15, 8, 30), (3, 7, 4, 20)] {
            generating_function_check(params(m, d, k), n).unwrap();
        }
    }

    #[test]
    #[should_panic(expected = "n_terms")]
    fn generating_function_rejects_short_series() {
        let _ = generating_function_check(params(9, 15, 8), 10);
    }

    #[test]
    fn quadratic_discriminant_values() {
        // g_{1,2,2} = 2n² + 2n + 2 as a formula: (2·2-1-1)² - 4·2·2·1 = -12.
        assert_eq!(discriminant_quadratic(1, 2), rat(-12, 1));
        // g_{1,3,2} = 2n² + 4n + 6: 16 - 48 = -32, complex pair with Re = -1.
        assert_eq!(discriminant_quadratic(1, 3), rat(-32, 1));
        assert_eq!(k2_complex_real_part(1, 3), Some(rat(-1, 1)));
        // Large m at fixed d: discriminant positive, no complex pair.
        assert!(discriminant_quadratic(100, 3).is_positive());
        assert_eq!(k2_complex_real_part(100, 3), None);
    }

    #[test]
    fn m1_reflection_symmetry() {
        // g_{1,d,k}(-n - (d-k+1)) = (-1)^k g_{1,d,k}(n), exactly.
        for d in 2..=12u32 {
            for k in 1..=FamilyParams::max_k(d) {
                let g = g_polynomial(params(1, d, k));
                let s = rat((d - k + 1) as i64, 1);
                let reflected = g.compose_neg_shift(&s);
                let expect = if k % 2 == 1 { -&g } else { g.clone() };
                assert_eq!(reflected, expect, "(d,k)=({d},{k})");
            }
        }
    }
}
