//! Validated `(m, d, k)` parameter triples for the simplex family whose
//! Ehrhart polynomial is `binom(d+n, d) + m·binom(d+n-k, d)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Violation of one of the family constraints
/// `m ≥ 1`, `d ≥ 2`, `1 ≤ k ≤ ⌊(d+1)/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("m = {m} violates m >= 1")]
    MTooSmall { m: u64 },
    #[error("d = {d} violates d >= 2")]
    DTooSmall { d: u32 },
    #[error("k = {k} violates k >= 1")]
    KTooSmall { k: u32 },
    #[error("k = {k} violates k <= floor((d+1)/2) = {max} for d = {d}")]
    KTooLarge { k: u32, d: u32, max: u32 },
}

/// A parameter triple satisfying `m ≥ 1`, `d ≥ 2`, `1 ≤ k ≤ ⌊(d+1)/2⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    m: u64,
    d: u32,
    k: u32,
}

impl FamilyParams {
    pub fn new(m: u64, d: u32, k: u32) -> Result<Self, ParamError> {
        if m < 1 {
            return Err(ParamError::MTooSmall { m });
        }
        if d < 2 {
            return Err(ParamError::DTooSmall { d });
        }
        if k < 1 {
            return Err(ParamError::KTooSmall { k });
        }
        let max = Self::max_k(d);
        if k > max {
            return Err(ParamError::KTooLarge { k, d, max });
        }
        Ok(FamilyParams { m, d, k })
    }

    /// Largest admissible `k` for a given dimension: `⌊(d+1)/2⌋`.
    pub fn max_k(d: u32) -> u32 {
        (d + 1) / 2
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

impl std::fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(m={}, d={}, k={})", self.m, self.d, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_paper_triples() {
        for (m, d, k) in [(9, 15, 8), (2, 37, 19), (1, 2, 1), (9, 100, 50)] {
            assert!(FamilyParams::new(m, d, k).is_ok(), "({m},{d},{k})");
        }
    }

    #[test]
    fn names_the_violated_inequality() {
        assert_eq!(
            FamilyParams::new(0, 5, 1),
            Err(ParamError::MTooSmall { m: 0 })
        );
        assert_eq!(
            FamilyParams::new(1, 1, 1),
            Err(ParamError::DTooSmall { d: 1 })
        );
        assert_eq!(
            FamilyParams::new(1, 5, 0),
            Err(ParamError::KTooSmall { k: 0 })
        );
        assert_eq!(
            FamilyParams::new(1, 4, 3),
            Err(ParamError::KTooLarge { k: 3, d: 4, max: 2 })
        );
        // d = 15 admits k = 8 but not k = 9.
        assert!(FamilyParams::new(9, 15, 8).is_ok());
        assert!(FamilyParams::new(9, 15, 9).is_err());
    }
}
