//! Exact censuses of p-elements in small finite groups, together with the
//! closed-form proportion bounds they are measured against.
//!
//! The crate has four layers:
//!
//! * [`exact`] — arbitrary-precision positive reals of the shape
//!   `c · b1^(e1) · b2^(e2) · …` with rational exponents, compared exactly
//!   (never through floats).
//! * [`gf`] and [`group`] — arithmetic in GF(p^f) and an enumeration engine
//!   for permutation and matrix groups given by generators, including
//!   conjugacy classes, quotients, composition factors and automorphism
//!   coset representatives.
//! * [`census`], [`mp`] and [`bounds`] — the quantities of interest: exact
//!   p-element counts, the centralizer-minimisation invariant `M_p`, and
//!   every closed-form bound function and combinatorial inequality checker.
//! * [`construct`] and [`verify`] — builders for the extremal group families
//!   (wreath towers, semilinear groups, normalizer-derived groups) and the
//!   verification suites run by the CLI and the acceptance tests.

pub mod arith;
pub mod bounds;
pub mod census;
pub mod construct;
pub mod error;
pub mod exact;
pub mod gf;
pub mod group;
pub mod mp;
pub mod verify;

pub use error::{Error, Result};
