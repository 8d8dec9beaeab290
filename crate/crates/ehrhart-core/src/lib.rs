//! Exact δ-vectors and Ehrhart polynomials of integral simplices, together
//! with numeric root finding and exact certification of root real parts.
//!
//! The crate is organized in three layers:
//!
//! * [`lattice`] — integral simplices, Smith-normal-form enumeration of the
//!   fundamental parallelepiped, δ-vectors, and brute-force dilate counting.
//! * [`poly`] — exact rational polynomial arithmetic, Ehrhart polynomial
//!   assembly from δ-vectors, and the `g_{m,d,k}` factor family.
//! * [`roots`] — arbitrary-precision Aberth–Ehrlich root finding, exact
//!   Routh–Hurwitz stability verdicts, certified real-part bounds, conjecture
//!   checking, and the `(m, d, k)` scanner.
//!
//! All types are immutable values and all operations are pure functions.
//! With the default `parallel` feature the scanner, parallelepiped
//! enumeration, and dilate counting distribute work with rayon; results are
//! identical to the sequential fallback.

pub mod family;
pub mod lattice;
pub mod poly;
pub mod roots;

pub use family::{FamilyParams, ParamError};
