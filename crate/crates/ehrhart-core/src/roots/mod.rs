//! Root analysis: arbitrary-precision numeric root finding, exact
//! Routh–Hurwitz certificates for real-part bounds, conjecture checking,
//! and the `(m, d, k)` scanner.

pub(crate) mod aberth;
mod bigfloat;
mod certify;
mod conjecture;
mod routh;
mod scan;

pub use aberth::{find_roots, ComplexRootSet, RootFindSettings};
pub use astro_float::BigFloat;
pub use bigfloat::{ratio_to_f64, to_f64, Cx, FloatCtx};
pub use certify::{certify_max_real_part, certify_min_real_part, CertifiedBound};
pub use conjecture::{check_conjecture, ConjectureOutcome, Violation};
pub use routh::{routh_hurwitz_strictly_stable, StabilityVerdict};
pub use scan::{
    rows_to_csv, scan, scan_with_mode, ExecMode, KPolicy, ScanCellFailure, ScanOutcome,
    ScanRequest, ScanRow, CSV_HEADER,
};

use crate::family::{FamilyParams, ParamError};
use crate::lattice::DeltaVector;
use crate::poly::{ehrhart_from_delta, g_polynomial};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum RootError {
    #[error("root finding needs a polynomial of degree at least 1")]
    DegreeTooSmall,
    #[error(
        "root iteration did not converge after {iterations} iterations \
         (worst relative residual {worst_residual:e})"
    )]
    NonConvergence {
        iterations: u32,
        worst_residual: f64,
        /// Best iterate found; callers may retry at higher precision.
        best: Box<ComplexRootSet>,
    },
    #[error("certification stalled on persistent boundary verdicts after {retries} retries")]
    CertificationStalled { retries: u32 },
    #[error("certification width must be positive, got {width}")]
    InvalidWidth { width: String },
    #[error(transparent)]
    Param(#[from] ParamError),
}

/// The complete root set of the family's degree-`d` Ehrhart polynomial:
/// the integers `-1, ..., -(d-k)` adjoined exactly to the numerically
/// computed roots of the degree-`k` factor `g_{m,d,k}`.
pub fn full_ehrhart_roots(
    params: FamilyParams,
    settings: &RootFindSettings,
) -> Result<ComplexRootSet, RootError> {
    let g = g_polynomial(params);
    let g_roots = find_roots(&g, settings)?;
    let ctx = FloatCtx::new(settings.precision_bits);

    // The adjoined integer roots are exact: the assembled Ehrhart polynomial
    // vanishes at each of them, which we verify in exact arithmetic.
    let full_poly = ehrhart_from_delta(&DeltaVector::theorem_shape(params));
    let mut items: Vec<(Cx, f64)> = Vec::with_capacity(params.d() as usize);
    for j in 1..=(params.d() - params.k()) as i64 {
        assert!(
            full_poly.evaluate_int(-j).is_zero(),
            "{j} must be an exact integer root"
        );
        items.push((ctx.c_real(ctx.from_bigint(&BigInt::from(-j))), 0.0));
    }
    for (z, &r) in g_roots.roots_big().iter().zip(g_roots.residuals()) {
        items.push((z.clone(), r));
    }
    Ok(ComplexRootSet::from_parts(items, settings.precision_bits))
}
