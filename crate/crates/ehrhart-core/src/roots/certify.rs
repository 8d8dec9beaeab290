//! Exact certified bounds on the maximal real part of a polynomial's roots.
//!
//! Bisection over exact rational shifts `s`: the Routh–Hurwitz verdict of
//! `p(n + s)` tells whether every root lies strictly left of `s`. Boundary
//! verdicts are escaped by a deterministic perturbation schedule rather than
//! any epsilon convention, so both endpoint witnesses are exact.

use super::routh::{routh_hurwitz_strictly_stable, StabilityVerdict};
use super::RootError;
use crate::poly::{rational_to_string, RationalPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Exact rational interval `[lo, hi)` proven to contain the maximal real
/// part of the polynomial's roots, with the endpoint Routh verdicts.
#[derive(Debug, Clone)]
pub struct CertifiedBound {
    pub lo: BigRational,
    pub hi: BigRational,
    pub polynomial: RationalPolynomial,
    /// Verdict of `p(n + lo)`: never `AllNegative`, so `max Re ≥ lo`.
    pub lo_verdict: StabilityVerdict,
    /// Verdict of `p(n + hi)`: `AllNegative`, so `max Re < hi`.
    pub hi_verdict: StabilityVerdict,
}

impl CertifiedBound {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        x >= &self.lo && x < &self.hi
    }
}

impl Serialize for CertifiedBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CertifiedBound", 5)?;
        s.serialize_field("lo", &rational_to_string(&self.lo))?;
        s.serialize_field("hi", &rational_to_string(&self.hi))?;
        s.serialize_field("lo_verdict", &self.lo_verdict)?;
        s.serialize_field("hi_verdict", &self.hi_verdict)?;
        s.serialize_field("polynomial", &self.polynomial)?;
        s.end()
    }
}

/// Shift bound `1 + max |a_i / a_deg|`: every root satisfies `|Re| ≤ bound`.
fn cauchy_bound(p: &RationalPolynomial) -> BigRational {
    let lead = p
        .leading_coefficient()
        .expect("degree checked by callers")
        .clone();
    let mut max = BigRational::zero();
    let deg = p.degree().unwrap();
    for k in 0..deg {
        let ratio = (p.coeff(k) / &lead).abs();
        if ratio > max {
            max = ratio;
        }
    }
    max + BigRational::one()
}

/// Certifies `max Re(root) ∈ [lo, hi)` with `hi - lo ≤ width`.
///
/// Starts from the bracket `[-1 - B, 1 + B]` given by the Cauchy bound `B`
/// and bisects; the returned interval is refined somewhat below the
/// requested width. Persistent Boundary verdicts along the perturbation
/// schedule surface as [`RootError::CertificationStalled`].
pub fn certify_max_real_part(
    p: &RationalPolynomial,
    width: &BigRational,
) -> Result<CertifiedBound, RootError> {
    if p.degree().unwrap_or(0) < 1 {
        return Err(RootError::DegreeTooSmall);
    }
    if !width.is_positive() {
        return Err(RootError::InvalidWidth {
            width: width.to_string(),
        });
    }
    let bound = cauchy_bound(p);
    let one = BigRational::one();
    let mut lo = -&bound - &one;
    let mut hi = &bound + &one;

    let verdict_at = |s: &BigRational| -> Result<StabilityVerdict, RootError> {
        routh_hurwitz_strictly_stable(&p.shift(s))
    };

    // The bracket endpoints are strict by construction, but a fixed rational
    // shift can still hit a zero Routh pivot; nudge outward until decisive.
    let mut lo_verdict = verdict_at(&lo)?;
    let mut nudges = 0;
    while lo_verdict == StabilityVerdict::Boundary {
        nudges += 1;
        if nudges > 16 {
            return Err(RootError::CertificationStalled { retries: nudges });
        }
        lo -= &one;
        lo_verdict = verdict_at(&lo)?;
    }
    debug_assert_eq!(lo_verdict, StabilityVerdict::NotAllNegative);
    let mut hi_verdict = verdict_at(&hi)?;
    let mut nudges = 0;
    while hi_verdict == StabilityVerdict::Boundary {
        nudges += 1;
        if nudges > 16 {
            return Err(RootError::CertificationStalled { retries: nudges });
        }
        hi += &one;
        hi_verdict = verdict_at(&hi)?;
    }
    debug_assert_eq!(hi_verdict, StabilityVerdict::AllNegative);

    // Refine an extra factor so the reported interval sits strictly inside
    // any alignment of the requested width.
    let target = width / BigRational::from_integer(BigInt::from(8));
    let max_boundary_retries = 2 * p.degree().unwrap() as u32 + 24;

    while &hi - &lo > target {
        let mid = (&hi + &lo) / BigRational::from_integer(BigInt::from(2));
        let mut candidate = mid.clone();
        let mut verdict = verdict_at(&candidate)?;
        let mut retry = 0u32;
        while verdict == StabilityVerdict::Boundary {
            retry += 1;
            if retry > max_boundary_retries {
                return Err(RootError::CertificationStalled { retries: retry });
            }
            // Deterministic schedule: shrinking offsets of alternating sign,
            // always strictly inside the bracket.
            let scale = BigRational::new(BigInt::one(), BigInt::from(1u64 << (retry / 2 + 3).min(62)));
            let offset = (&hi - &lo) * scale;
            candidate = if retry % 2 == 1 {
                &mid + &offset
            } else {
                &mid - &offset
            };
            verdict = verdict_at(&candidate)?;
        }
        match verdict {
            StabilityVerdict::AllNegative => {
                hi = candidate;
                hi_verdict = verdict;
            }
            StabilityVerdict::NotAllNegative => {
                lo = candidate;
                lo_verdict = verdict;
            }
            StabilityVerdict::Boundary => unreachable!("loop above exits on decisive verdicts"),
        }
    }

    Ok(CertifiedBound {
        lo,
        hi,
        polynomial: p.clone(),
        lo_verdict,
        hi_verdict,
    })
}

/// Certifies `min Re(root) ∈ (lo, hi]` by reflecting the variable.
///
/// Returns the interval for the minimum; the reflected certificate itself
/// bounds `max Re` of `p(-n)`.
pub fn certify_min_real_part(
    p: &RationalPolynomial,
    width: &BigRational,
) -> Result<(BigRational, BigRational), RootError> {
    let reflected = certify_max_real_part(&p.negate_variable(), width)?;
    Ok((-reflected.hi, -reflected.lo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational_from_decimal;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn linear_root_is_bracketed() {
        // (m+1)n + d with m = 3, d = 7: root -7/4.
        let p = RationalPolynomial::from_integers(&[7, 4]);
        let b = certify_max_real_part(&p, &rat(1, 100)).unwrap();
        assert!(b.contains(&rat(-7, 4)));
        assert!(b.width() <= rat(1, 100));
        assert_eq!(b.lo_verdict, StabilityVerdict::NotAllNegative);
        assert_eq!(b.hi_verdict, StabilityVerdict::AllNegative);
    }

    #[test]
    fn quadratic_complex_pair() {
        // n² + 2n + 2: roots -1 ± i, max Re = -1.
        let p = RationalPolynomial::from_integers(&[2, 2, 1]);
        let b = certify_max_real_part(&p, &rat(1, 64)).unwrap();
        assert!(b.contains(&rat(-1, 1)));
    }

    #[test]
    fn exact_rational_max_survives_boundary_hits() {
        // (2n+1)(n+2): max Re = -1/2, a dyadic rational the bisection can
        // land on exactly; the perturbation schedule must recover.
        let p = RationalPolynomial::from_integers(&[2, 5, 2]);
        let b = certify_max_real_part(&p, &rat(1, 512)).unwrap();
        assert!(b.contains(&rat(-1, 2)));
    }

    #[test]
    fn halving_width_nests() {
        let p = RationalPolynomial::from_integers(&[-3, 1, 1, 2]);
        let w1 = rational_from_decimal("0.25").unwrap();
        let w2 = rational_from_decimal("0.125").unwrap();
        let b1 = certify_max_real_part(&p, &w1).unwrap();
        let b2 = certify_max_real_part(&p, &w2).unwrap();
        assert!(b2.lo >= b1.lo && b2.hi <= b1.hi, "refinement nests");
    }

    #[test]
    fn min_real_part_reflects() {
        // roots -5 and 2: min Re = -5, max Re = 2.
        let p = RationalPolynomial::from_integers(&[-10, 3, 1]);
        let (lo, hi) = certify_min_real_part(&p, &rat(1, 32)).unwrap();
        assert!(lo < rat(-5, 1) && rat(-5, 1) <= hi);
        let b = certify_max_real_part(&p, &rat(1, 32)).unwrap();
        assert!(b.contains(&rat(2, 1)));
    }

    #[test]
    fn rejects_bad_width() {
        let p = RationalPolynomial::from_integers(&[1, 1]);
        assert!(certify_max_real_part(&p, &rat(0, 1)).is_err());
        assert!(certify_max_real_part(&p, &rat(-1, 2)).is_err());
    }
}
