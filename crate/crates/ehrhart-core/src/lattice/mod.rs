//! Integral simplices, their δ-vectors, and lattice-point counting.
//!
//! A [`LatticeSimplex`] is an immutable list of integer vertices. The
//! δ-vector is computed exactly by enumerating the lattice points of the
//! half-open fundamental parallelepiped of the homogenized vertex cone,
//! graded by last coordinate; the enumeration walks the quotient group
//! `Z^{d+1} / L` through the Smith normal form of the homogenized vertex
//! matrix, so its cost is `O(vol · poly(d))`.

mod counting;
mod enumerate;
pub(crate) mod mat;
mod snf;

use crate::family::FamilyParams;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Cap on fundamental-parallelepiped points enumerated by default.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1_000_000;

/// Cap on bounding-box points scanned by the brute-force dilate counters.
pub const DEFAULT_BOX_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a simplex needs at least 2 vertices")]
    TooFewVertices,
    #[error("vertex {index} has {got} coordinates, expected {expected}")]
    RaggedVertex {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("{vertices} vertices cannot be affinely independent in ambient dimension {ambient}")]
    TooManyVertices { vertices: usize, ambient: usize },
    #[error("degenerate simplex: vertices are affinely dependent")]
    Degenerate,
    #[error(
        "simplex of dimension {dim} given in ambient dimension {ambient}; \
         this operation needs full-dimensional (square) coordinates"
    )]
    AmbientNotFull { dim: usize, ambient: usize },
    #[error("budget exceeded: {needed} points needed, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("invalid argument: {0}")]
    InvalidParameter(String),
}

/// A full-rank integral `d`-simplex: `d + 1` integer vertices in `R^N`,
/// `N ≥ d`, affinely independent over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSimplex {
    vertices: Vec<Vec<BigInt>>,
    dim: usize,
    ambient: usize,
}

/// Lattice point of the half-open fundamental parallelepiped
/// `{Σ r_i (v_i, 1) : 0 ≤ r_i < 1}`, graded by its last coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelepipedPoint {
    coords: Vec<BigInt>,
    degree: usize,
    barycentric: Vec<BigRational>,
}

impl ParallelepipedPoint {
    /// Integer coordinates in `Z^{N+1}`; the last entry is the degree.
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The exact coefficients `r_i ∈ [0, 1)` with `Σ r_i (v_i, 1) = coords`.
    pub fn barycentric(&self) -> &[BigRational] {
        &self.barycentric
    }
}

/// The δ-vector `(δ_0, ..., δ_d)` of a `d`-dimensional integral polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector {
    entries: Vec<BigInt>,
}

impl DeltaVector {
    /// Validates `δ_0 = 1`, nonnegativity, and `δ_1 ≥ δ_d`.
    pub fn new(entries: Vec<BigInt>) -> Result<Self, LatticeError> {
        if entries.len() < 2 {
            return Err(LatticeError::InvalidParameter(
                "a delta vector needs at least two entries".into(),
            ));
        }
        if !entries[0].is_one() {
            return Err(LatticeError::InvalidParameter(format!(
                "delta_0 must be 1, got {}",
                entries[0]
            )));
        }
        if let Some(bad) = entries.iter().position(|e| e.is_negative()) {
            return Err(LatticeError::InvalidParameter(format!(
                "delta_{bad} = {} is negative",
                entries[bad]
            )));
        }
        let d = entries.len() - 1;
        if entries[1] < entries[d] {
            return Err(LatticeError::InvalidParameter(format!(
                "delta_1 = {} < delta_d = {}",
                entries[1], entries[d]
            )));
        }
        Ok(DeltaVector { entries })
    }

    /// The family δ-vector: `δ_0 = 1`, `δ_k = m`, all other entries zero.
    pub fn theorem_shape(params: FamilyParams) -> Self {
        let mut entries = vec![BigInt::zero(); params.d() as usize + 1];
        entries[0] = BigInt::one();
        entries[params.k() as usize] = BigInt::from(params.m());
        DeltaVector { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `Σ δ_i`, the normalized volume.
    pub fn normalized_volume(&self) -> BigInt {
        self.entries.iter().sum()
    }

    /// The δ-vector `(δ_0, ..., δ_d, 0)` of a lattice pyramid over the body.
    pub fn append_zero(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.push(BigInt::zero());
        DeltaVector { entries }
    }
}

impl std::fmt::Display for DeltaVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl LatticeSimplex {
    /// Builds a simplex from integer vertices, validating shape and full rank.
    pub fn new(vertices: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        if vertices.len() < 2 {
            return Err(LatticeError::TooFewVertices);
        }
        let ambient = vertices[0].len();
        for (index, v) in vertices.iter().enumerate() {
            if v.len() != ambient {
                return Err(LatticeError::RaggedVertex {
                    index,
                    got: v.len(),
                    expected: ambient,
                });
            }
        }
        let dim = vertices.len() - 1;
        if dim > ambient {
            return Err(LatticeError::TooManyVertices {
                vertices: vertices.len(),
                ambient,
            });
        }
        let diffs: mat::Mat = vertices[1..]
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&vertices[0])
                    .map(|(a, b)| a - b)
                    .collect::<Vec<_>>()
            })
            .collect();
        if mat::rank(diffs) != dim {
            return Err(LatticeError::Degenerate);
        }
        Ok(LatticeSimplex {
            vertices,
            dim,
            ambient,
        })
    }

    pub fn from_ints(rows: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        Self::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    /// The unimodular simplex `conv(0, e_1, ..., e_d)`.
    pub fn standard(d: usize) -> Self {
        let mut vertices = vec![vec![BigInt::zero(); d]];
        for i in 0..d {
            let mut v = vec![BigInt::zero(); d];
            v[i] = BigInt::one();
            vertices.push(v);
        }
        LatticeSimplex {
            vertices,
            dim: d,
            ambient: d,
        }
    }

    /// The segment `[a, b]` in dimension 1.
    pub fn segment(a: i64, b: i64) -> Result<Self, LatticeError> {
        if a == b {
            return Err(LatticeError::Degenerate);
        }
        Ok(LatticeSimplex {
            vertices: vec![vec![BigInt::from(a)], vec![BigInt::from(b)]],
            dim: 1,
            ambient: 1,
        })
    }

    /// The family simplex in dimension `d` (odd, `≥ 3`): the origin together
    /// with the rows of the lower-triangular matrix whose first `d - 1` rows
    /// are unit vectors and whose last row is
    /// `(1, ..., 1, m, ..., m, m+1)` with `c = (d-1)/2` ones and `c` `m`s.
    pub fn family(m: u64, d: u32) -> Result<Self, LatticeError> {
        if m < 1 {
            return Err(LatticeError::InvalidParameter(format!(
                "family simplex needs m >= 1, got {m}"
            )));
        }
        if d < 3 || d % 2 == 0 {
            return Err(LatticeError::InvalidParameter(format!(
                "family simplex needs odd d >= 3, got {d}"
            )));
        }
        let d = d as usize;
        let c = (d - 1) / 2;
        let mut vertices = vec![vec![BigInt::zero(); d]];
        for i in 0..d - 1 {
            let mut v = vec![BigInt::zero(); d];
            v[i] = BigInt::one();
            vertices.push(v);
        }
        let mut last = Vec::with_capacity(d);
        last.extend(std::iter::repeat_n(BigInt::one(), c));
        last.extend(std::iter::repeat_n(BigInt::from(m), c));
        last.push(BigInt::from(m + 1));
        vertices.push(last);
        Ok(LatticeSimplex {
            vertices,
            dim: d,
            ambient: d,
        })
    }

    /// The `d`-simplex realizing the δ-vector `(1, 0, ..., m at k, ..., 0)`:
    /// for `k = 1` the segment `[0, m+1]` lifted `d - 1` times, otherwise the
    /// family simplex in dimension `2k - 1` lifted `d - (2k-1)` times.
    pub fn theorem(params: FamilyParams) -> Self {
        let (m, d, k) = (params.m(), params.d(), params.k());
        let (mut s, base_dim) = if k == 1 {
            (
                Self::segment(0, m as i64 + 1).expect("m >= 1 makes the segment proper"),
                1,
            )
        } else {
            let base = 2 * k - 1;
            (
                Self::family(m, base).expect("2k-1 is odd and >= 3 for k >= 2"),
                base,
            )
        };
        for _ in base_dim..d {
            s = s.pyramid_lift();
        }
        s
    }

    /// The lattice pyramid: vertices embedded at height 0 plus an apex at
    /// unit height over the origin. Its δ-vector is the body's with one
    /// appended zero.
    pub fn pyramid_lift(&self) -> Self {
        let mut vertices: Vec<Vec<BigInt>> = self
            .vertices
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.push(BigInt::zero());
                w
            })
            .collect();
        let mut apex = vec![BigInt::zero(); self.ambient];
        apex.push(BigInt::one());
        vertices.push(apex);
        LatticeSimplex {
            vertices,
            dim: self.dim + 1,
            ambient: self.ambient + 1,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Vec<BigInt>] {
        &self.vertices
    }

    /// Reorders the vertices; the simplex it names is unchanged.
    pub fn permuted(&self, order: &[usize]) -> Result<Self, LatticeError> {
        if order.len() != self.vertices.len() {
            return Err(LatticeError::InvalidParameter(
                "permutation length mismatch".into(),
            ));
        }
        let mut seen = vec![false; order.len()];
        for &i in order {
            if i >= order.len() || seen[i] {
                return Err(LatticeError::InvalidParameter(
                    "not a permutation".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(LatticeSimplex {
            vertices: order.iter().map(|&i| self.vertices[i].clone()).collect(),
            dim: self.dim,
            ambient: self.ambient,
        })
    }

    /// The `(d+1) × (d+1)` matrix with rows `(v_i, 1)`; requires `N = d`.
    fn homogenized_rows(&self) -> Result<mat::Mat, LatticeError> {
        if self.ambient != self.dim {
            return Err(LatticeError::AmbientNotFull {
                dim: self.dim,
                ambient: self.ambient,
            });
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| {
                let mut row = v.clone();
                row.push(BigInt::one());
                row
            })
            .collect())
    }

    /// `|det|` of the homogenized vertex matrix; equals `Σ δ_i`.
    pub fn normalized_volume(&self) -> Result<BigInt, LatticeError> {
        let det = mat::det_bareiss(self.homogenized_rows()?);
        if det.is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(det.abs())
    }

    pub fn delta_vector(&self) -> Result<DeltaVector, LatticeError> {
        self.delta_vector_budgeted(DEFAULT_ENUMERATION_BUDGET)
    }

    /// δ-vector by parallelepiped enumeration, refusing to enumerate more
    /// than `budget` points.
    pub fn delta_vector_budgeted(&self, budget: u64) -> Result<DeltaVector, LatticeError> {
        enumerate::delta_vector(self, budget)
    }

    pub fn enumerate_parallelepiped(&self) -> Result<Vec<ParallelepipedPoint>, LatticeError> {
        self.enumerate_parallelepiped_budgeted(DEFAULT_ENUMERATION_BUDGET)
    }

    /// All lattice points of the fundamental parallelepiped, sorted by
    /// degree and then lexicographically by coordinates.
    pub fn enumerate_parallelepiped_budgeted(
        &self,
        budget: u64,
    ) -> Result<Vec<ParallelepipedPoint>, LatticeError> {
        enumerate::enumerate(self, budget)
    }

    /// `|nP ∩ Z^N|` by budgeted brute force over the bounding box of `nP`.
    ///
    /// This is the independent oracle for Ehrhart evaluations, not a fast
    /// path: every box point is tested for membership with exact arithmetic.
    pub fn count_dilate_points(&self, n: u64) -> Result<u64, LatticeError> {
        counting::count_dilates(self, n, false, DEFAULT_BOX_BUDGET)
    }

    pub fn count_dilate_points_budgeted(
        &self,
        n: u64,
        box_budget: u64,
    ) -> Result<u64, LatticeError> {
        counting::count_dilates(self, n, false, box_budget)
    }

    /// `|n(P ∖ ∂P) ∩ Z^N|`: as [`Self::count_dilate_points`] but requiring
    /// every barycentric coordinate strictly positive.
    pub fn count_interior_dilate_points(&self, n: u64) -> Result<u64, LatticeError> {
        counting::count_dilates(self, n, true, DEFAULT_BOX_BUDGET)
    }

    pub fn count_interior_dilate_points_budgeted(
        &self,
        n: u64,
        box_budget: u64,
    ) -> Result<u64, LatticeError> {
        counting::count_dilates(self, n, true, box_budget)
    }
}

impl Serialize for LatticeSimplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            vertices: Vec<Vec<serde_json::Number>>,
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| {
                        serde_json::Number::from_string_unchecked(x.to_string())
                    })
                    .collect()
            })
            .collect();
        Repr { vertices }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticeSimplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            vertices: Vec<Vec<serde_json::Number>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let vertices = repr
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| {
                        x.as_str()
                            .parse::<BigInt>()
                            .map_err(|_| D::Error::custom(format!("non-integer coordinate {x}")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        LatticeSimplex::new(vertices).map_err(D::Error::custom)
    }
}

impl Serialize for DeltaVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            dim: usize,
            entries: Vec<String>,
        }
        Repr {
            dim: self.dim(),
            entries: self.entries.iter().map(|e| e.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DeltaVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            #[serde(default)]
            dim: Option<usize>,
            entries: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let entries = repr
            .entries
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad delta entry {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(dim) = repr.dim {
            if dim + 1 != entries.len() {
                return Err(D::Error::custom("dim does not match entry count"));
            }
        }
        DeltaVector::new(entries).map_err(D::Error::custom)
    }
}
