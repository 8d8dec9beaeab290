//! Exact Routh–Hurwitz stability verdicts over rational arithmetic.

use crate::poly::RationalPolynomial;
use crate::roots::RootError;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Outcome of the Routh–Hurwitz test on a real polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StabilityVerdict {
    /// Every root has strictly negative real part.
    AllNegative,
    /// Some root has strictly positive real part.
    NotAllNegative,
    /// A zero first-column entry or a vanishing row: the test is
    /// indeterminate (typically a root on the imaginary axis). No sign is
    /// guessed; callers perturb and retry.
    Boundary,
}

/// Builds the Routh table of `p` with exact rational arithmetic.
///
/// `AllNegative` requires every first-column entry to be nonzero and share
/// the leading coefficient's sign. Any zero pivot or vanishing row yields
/// [`StabilityVerdict::Boundary`]; the classical epsilon workaround is never
/// applied.
pub fn routh_hurwitz_strictly_stable(
    p: &RationalPolynomial,
) -> Result<StabilityVerdict, RootError> {
    let Some(degree) = p.degree() else {
        return Err(RootError::DegreeTooSmall);
    };
    if degree < 1 {
        return Err(RootError::DegreeTooSmall);
    }

    // Row 0: a_n, a_{n-2}, ...; row 1: a_{n-1}, a_{n-3}, ...
    let width = degree / 2 + 1;
    let coeff_desc = |t: usize| -> BigRational {
        match degree.checked_sub(t) {
            Some(k) => p.coeff(k),
            None => BigRational::zero(),
        }
    };
    let mut prev: Vec<BigRational> = (0..width).map(|j| coeff_desc(2 * j)).collect();
    let mut curr: Vec<BigRational> = (0..width).map(|j| coeff_desc(2 * j + 1)).collect();

    let lead_positive = prev[0].is_positive();
    let mut saw_sign_flip = false;

    // degree+1 table rows in total; rows 0 and 1 come from the coefficients.
    for row in 1..=degree {
        if curr.iter().all(Zero::is_zero) {
            return Ok(StabilityVerdict::Boundary);
        }
        let pivot = curr[0].clone();
        if pivot.is_zero() {
            return Ok(StabilityVerdict::Boundary);
        }
        if pivot.is_positive() != lead_positive {
            saw_sign_flip = true;
        }
        if row == degree {
            break;
        }
        let next: Vec<BigRational> = (0..width)
            .map(|j| {
                let a = prev.get(j + 1).cloned().unwrap_or_else(BigRational::zero);
                let b = curr.get(j + 1).cloned().unwrap_or_else(BigRational::zero);
                (&pivot * a - &prev[0] * b) / &pivot
            })
            .collect();
        prev = curr;
        curr = next;
    }

    if saw_sign_flip {
        Ok(StabilityVerdict::NotAllNegative)
    } else {
        Ok(StabilityVerdict::AllNegative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn poly(coeffs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integers(coeffs)
    }

    #[test]
    fn linear_cases() {
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[1, 1])).unwrap(),
            StabilityVerdict::AllNegative,
            "n + 1 has root -1"
        );
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[-1, 1])).unwrap(),
            StabilityVerdict::NotAllNegative,
            "n - 1 has root +1"
        );
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[0, 1])).unwrap(),
            StabilityVerdict::Boundary,
            "n has the root 0"
        );
    }

    #[test]
    fn imaginary_axis_is_boundary() {
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[1, 0, 1])).unwrap(),
            StabilityVerdict::Boundary,
            "n² + 1 has roots ±i"
        );
    }

    #[test]
    fn stable_quadratics_and_cubics() {
        // (n+1)(n+2) = n² + 3n + 2
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[2, 3, 1])).unwrap(),
            StabilityVerdict::AllNegative
        );
        // (n+1)(n²+n+1) = n³ + 2n² + 2n + 1 (complex pair at Re = -1/2)
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[1, 2, 2, 1])).unwrap(),
            StabilityVerdict::AllNegative
        );
        // (n-1)(n+2)(n+3) = n³ + 4n² + n - 6: one positive real root.
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[-6, 1, 4, 1])).unwrap(),
            StabilityVerdict::NotAllNegative
        );
        // n³ - 1 hits a zero pivot immediately (missing n² and n terms).
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[-1, 0, 0, 1])).unwrap(),
            StabilityVerdict::Boundary
        );
    }

    #[test]
    fn zero_pivot_without_axis_root_is_boundary() {
        // n⁴ + n³ + 2n² + 2n + 1: the third row starts with a zero pivot
        // (classical epsilon case); verdict must be Boundary, not a guess.
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[1, 2, 2, 1, 1])).unwrap(),
            StabilityVerdict::Boundary
        );
    }

    #[test]
    fn negative_leading_coefficient() {
        // -(n+1)(n+2): still all roots negative.
        assert_eq!(
            routh_hurwitz_strictly_stable(&poly(&[-2, -3, -1])).unwrap(),
            StabilityVerdict::AllNegative
        );
    }

    #[test]
    fn degree_zero_is_an_error() {
        let c = RationalPolynomial::constant(BigRational::from_integer(BigInt::from(3)));
        assert!(routh_hurwitz_strictly_stable(&c).is_err());
        assert!(routh_hurwitz_strictly_stable(&RationalPolynomial::zero()).is_err());
    }
}
