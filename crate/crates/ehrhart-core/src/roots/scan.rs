//! The `(m, d, k)` violation scanner.
//!
//! Each cell finds the roots of `g_{m,d,k}`, checks them against the
//! conjectured bound, and records extremal real parts. Cells are independent
//! and evaluate in parallel under the `parallel` feature; results merge in
//! `(m, d, k)` order either way, so output is deterministic.

use super::aberth::{find_roots, RootFindSettings};
use super::certify::certify_max_real_part;
use super::conjecture::{check_conjecture, ConjectureOutcome};
use crate::family::FamilyParams;
use crate::poly::{g_polynomial, rational_to_string};
use num_rational::BigRational;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt::Write as _;

/// Which `k` values a scan visits per dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KPolicy {
    /// A single `k`; dimensions where it violates the constraints are skipped.
    Fixed(u32),
    /// `k = ⌊(d+1)/2⌋`, the largest admissible value.
    Half,
    /// Every `k` from 1 to `⌊(d+1)/2⌋`.
    AllValid,
}

#[derive(Debug, Clone)]
pub struct ScanRequest {
    pub m_range: (u64, u64),
    pub d_range: (u32, u32),
    pub k_policy: KPolicy,
    pub settings: RootFindSettings,
    /// When set, every cell additionally gets an exact certified bound of
    /// this width on its maximal real part.
    pub certify_width: Option<BigRational>,
}

/// One scan cell: extremal real parts and the conjecture verdict.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub m: u64,
    pub d: u32,
    pub k: u32,
    pub max_real_part: f64,
    pub min_real_part: f64,
    pub violates_conjecture: bool,
    pub exceeds_d: bool,
    pub certified_lo: Option<BigRational>,
    pub certified_hi: Option<BigRational>,
}

impl Serialize for ScanRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ScanRow", 9)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("d", &self.d)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("max_real_part", &self.max_real_part)?;
        s.serialize_field("min_real_part", &self.min_real_part)?;
        s.serialize_field("violates_conjecture", &self.violates_conjecture)?;
        s.serialize_field("exceeds_d", &self.exceeds_d)?;
        s.serialize_field(
            "certified_lo",
            &self.certified_lo.as_ref().map(rational_to_string),
        )?;
        s.serialize_field(
            "certified_hi",
            &self.certified_hi.as_ref().map(rational_to_string),
        )?;
        s.end()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanCellFailure {
    pub m: u64,
    pub d: u32,
    pub k: u32,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct ScanOutcome {
    /// Successful cells in `(m, d, k)` order.
    pub rows: Vec<ScanRow>,
    /// Cells that failed or came back inconclusive; the scan continues past
    /// them.
    pub failures: Vec<ScanCellFailure>,
}

/// Execution strategy for cell evaluation; results are identical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        ExecMode::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        ExecMode::Sequential
    }
}

pub fn scan(req: &ScanRequest) -> ScanOutcome {
    scan_with_mode(req, ExecMode::default())
}

pub fn scan_with_mode(req: &ScanRequest, mode: ExecMode) -> ScanOutcome {
    let cells = enumerate_cells(req);
    let eval = |params: &FamilyParams| eval_cell(*params, &req.settings, req.certify_width.as_ref());
    let results: Vec<Result<ScanRow, ScanCellFailure>> = match mode {
        ExecMode::Sequential => cells.iter().map(eval).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => cells.par_iter().map(eval).collect(),
    };
    let mut rows = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(row) => rows.push(row),
            Err(f) => failures.push(f),
        }
    }
    ScanOutcome { rows, failures }
}

fn enumerate_cells(req: &ScanRequest) -> Vec<FamilyParams> {
    let mut cells = Vec::new();
    for m in req.m_range.0..=req.m_range.1 {
        for d in req.d_range.0..=req.d_range.1 {
            match req.k_policy {
                KPolicy::Fixed(k) => {
                    if let Ok(p) = FamilyParams::new(m, d, k) {
                        cells.push(p);
                    }
                }
                KPolicy::Half => {
                    if let Ok(p) = FamilyParams::new(m, d, FamilyParams::max_k(d)) {
                        cells.push(p);
                    }
                }
                KPolicy::AllValid => {
                    for k in 1..=FamilyParams::max_k(d) {
                        if let Ok(p) = FamilyParams::new(m, d, k) {
                            cells.push(p);
                        }
                    }
                }
            }
        }
    }
    cells
}

fn eval_cell(
    params: FamilyParams,
    settings: &RootFindSettings,
    certify_width: Option<&BigRational>,
) -> Result<ScanRow, ScanCellFailure> {
    let fail = |message: String| ScanCellFailure {
        m: params.m(),
        d: params.d(),
        k: params.k(),
        message,
    };
    let g = g_polynomial(params);
    let roots = find_roots(&g, settings).map_err(|e| fail(e.to_string()))?;
    let outcome = check_conjecture(&g, &roots, params.d()).map_err(|e| fail(e.to_string()))?;

    let (violates, exceeds_d, mut certified) = match outcome {
        ConjectureOutcome::Pass => (false, false, None),
        ConjectureOutcome::Violation(v) => (true, v.exceeds_d, v.certified),
        ConjectureOutcome::Inconclusive { reason } => return Err(fail(reason)),
    };
    if let Some(width) = certify_width {
        certified = Some(certify_max_real_part(&g, width).map_err(|e| fail(e.to_string()))?);
    }
    let (certified_lo, certified_hi) = match certified {
        Some(b) => (Some(b.lo), Some(b.hi)),
        None => (None, None),
    };
    Ok(ScanRow {
        m: params.m(),
        d: params.d(),
        k: params.k(),
        max_real_part: roots.max_real_part(),
        min_real_part: roots.min_real_part(),
        violates_conjecture: violates,
        exceeds_d,
        certified_lo,
        certified_hi,
    })
}

pub const CSV_HEADER: &str =
    "m,d,k,max_real_part,violates_conjecture,exceeds_d,certified_lo,certified_hi";

/// Renders rows in the fixed CSV schema (extremal minima stay in the JSON
/// representation only).
pub fn rows_to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let lo = r.certified_lo.as_ref().map(rational_to_string).unwrap_or_default();
        let hi = r.certified_hi.as_ref().map(rational_to_string).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.m, r.d, r.k, r.max_real_part, r.violates_conjecture, r.exceeds_d, lo, hi
        )
        .expect("writing to a String cannot fail");
    }
    out
}
