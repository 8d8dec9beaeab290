//! Checks root sets against the conjectured bound `-d ≤ Re(α) ≤ d-1`.
//!
//! Verdicts are float-based with a guard band tied to the root residuals;
//! anything inside the band escalates to exact Routh–Hurwitz certification
//! so a violation is never claimed on numerical noise.

use super::aberth::ComplexRootSet;
use super::certify::{certify_max_real_part, certify_min_real_part, CertifiedBound};
use super::RootError;
use crate::poly::RationalPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;

/// A confirmed failure of the conjectured bound.
#[derive(Debug, Clone)]
pub struct Violation {
    pub max_real_part: f64,
    /// Roots outside `[-d, d-1]`, as `(re, im)` approximations.
    pub violating_roots: Vec<(f64, f64)>,
    /// Some root has `Re > d`, not merely `Re > d-1`.
    pub exceeds_d: bool,
    /// Present when the verdict needed exact certification.
    pub certified: Option<CertifiedBound>,
}

#[derive(Debug, Clone)]
pub enum ConjectureOutcome {
    Pass,
    Violation(Violation),
    /// A root sits too close to the boundary for the working precision and
    /// certification could not separate it either.
    Inconclusive { reason: String },
}

impl ConjectureOutcome {
    pub fn is_violation(&self) -> bool {
        matches!(self, ConjectureOutcome::Violation(_))
    }
}

/// Tests every root of `p` (with `roots` already computed) against
/// `-d ≤ Re ≤ d-1`. A root within `10 · residual` of a boundary triggers
/// exact certification instead of a float verdict.
pub fn check_conjecture(
    p: &RationalPolynomial,
    roots: &ComplexRootSet,
    d: u32,
) -> Result<ConjectureOutcome, RootError> {
    let upper = (d - 1) as f64;
    let lower = -(d as f64);
    let pairs = roots.roots_f64();
    let residuals = roots.residuals();

    let mut definite: Vec<(f64, f64)> = Vec::new();
    let mut near_upper = false;
    let mut near_lower = false;
    for (i, &(re, im)) in pairs.iter().enumerate() {
        let guard = 10.0 * residuals[i];
        if re - upper > guard || lower - re > guard {
            definite.push((re, im));
        } else if (re - upper).abs() <= guard {
            near_upper = true;
        } else if (re - lower).abs() <= guard {
            near_lower = true;
        }
    }
    let max_real_part = roots.max_real_part();
    let exceeds_d = pairs.iter().any(|&(re, _)| re > d as f64);

    if !definite.is_empty() {
        return Ok(ConjectureOutcome::Violation(Violation {
            max_real_part,
            violating_roots: definite,
            exceeds_d,
            certified: None,
        }));
    }
    if !near_upper && !near_lower {
        return Ok(ConjectureOutcome::Pass);
    }

    // Escalation: certify the offending side exactly, refining until the
    // interval clears the boundary or the width floor is reached.
    let widths = [10u32, 20, 40, 60];
    if near_upper {
        let boundary = BigRational::from_integer(BigInt::from(d as i64 - 1));
        for &w in &widths {
            let width = BigRational::new(BigInt::from(1), BigInt::from(1u128 << w));
            let bound = certify_max_real_part(p, &width)?;
            if bound.lo > boundary {
                let offender = pairs
                    .iter()
                    .cloned()
                    .max_by(|a, b| a.0.total_cmp(&b.0))
                    .expect("nonempty root set");
                return Ok(ConjectureOutcome::Violation(Violation {
                    max_real_part,
                    violating_roots: vec![offender],
                    exceeds_d,
                    certified: Some(bound),
                }));
            }
            if bound.hi <= boundary {
                // Upper side certified safe; fall through to the lower side.
                break;
            }
            if w == *widths.last().unwrap() {
                return Ok(ConjectureOutcome::Inconclusive {
                    reason: format!(
                        "max real part within [{}, {}) straddles d-1 = {}",
                        bound.lo, bound.hi, boundary
                    ),
                });
            }
        }
    }
    if near_lower {
        let boundary = BigRational::from_integer(BigInt::from(-(d as i64)));
        for &w in &widths {
            let width = BigRational::new(BigInt::from(1), BigInt::from(1u128 << w));
            let (lo, hi) = certify_min_real_part(p, &width)?;
            if hi < boundary {
                let offender = pairs
                    .iter()
                    .cloned()
                    .min_by(|a, b| a.0.total_cmp(&b.0))
                    .expect("nonempty root set");
                return Ok(ConjectureOutcome::Violation(Violation {
                    max_real_part,
                    violating_roots: vec![offender],
                    exceeds_d,
                    certified: None,
                }));
            }
            if lo >= boundary {
                break;
            }
            if w == *widths.last().unwrap() {
                return Ok(ConjectureOutcome::Inconclusive {
                    reason: format!(
                        "min real part within ({lo}, {hi}] straddles -d = {boundary}"
                    ),
                });
            }
        }
    }
    Ok(ConjectureOutcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::aberth::{find_roots, RootFindSettings};

    #[test]
    fn clear_pass_and_violation() {
        let settings = RootFindSettings::default();
        // Roots -1 ± i: inside [-d, d-1] for d = 2.
        let p = RationalPolynomial::from_integers(&[2, 2, 1]);
        let roots = find_roots(&p, &settings).unwrap();
        assert!(matches!(
            check_conjecture(&p, &roots, 2).unwrap(),
            ConjectureOutcome::Pass
        ));
        // Root at 5 > d - 1 = 1 for d = 2.
        let q = RationalPolynomial::from_integers(&[-5, 1]);
        let roots = find_roots(&q, &settings).unwrap();
        let outcome = check_conjecture(&q, &roots, 2).unwrap();
        let ConjectureOutcome::Violation(v) = outcome else {
            panic!("expected violation");
        };
        assert!(v.max_real_part > 4.9 && !v.violating_roots.is_empty());
        assert!(v.exceeds_d);
    }

    #[test]
    fn boundary_root_escalates_to_certification() {
        // Root exactly at d - 1 = 1 for d = 2: satisfies the bound, and the
        // guard band forces the exact path to confirm the pass.
        let p = RationalPolynomial::from_integers(&[-1, 1]);
        let settings = RootFindSettings::default();
        let roots = find_roots(&p, &settings).unwrap();
        let outcome = check_conjecture(&p, &roots, 2).unwrap();
        assert!(
            matches!(outcome, ConjectureOutcome::Pass | ConjectureOutcome::Inconclusive { .. }),
            "an exact boundary root is never reported as a violation"
        );
    }

    #[test]
    fn lower_boundary_violation() {
        // Root at -3 < -d = -2 for d = 2.
        let p = RationalPolynomial::from_integers(&[3, 1]);
        let settings = RootFindSettings::default();
        let roots = find_roots(&p, &settings).unwrap();
        let outcome = check_conjecture(&p, &roots, 2).unwrap();
        assert!(outcome.is_violation());
        let ConjectureOutcome::Violation(v) = outcome else {
            unreachable!()
        };
        assert!(!v.exceeds_d);
    }
}
