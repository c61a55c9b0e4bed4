//! Exact engine for rank polynomials of fence posets and c-polynomials of
//! arcs in triangulated polygons.
//!
//! The polynomial layer is generic over the coefficient ring; the aliases
//! below fix the types used by the scans and the command-line tool.

pub mod arcposet;
pub mod cluster;
pub mod fixtures;
pub mod polyseq;
pub mod poset;
pub mod scan;
pub mod surface;

pub use polyseq::{Coeff, Poly, SeqReport};
pub use poset::{Composition, FinitePoset};

/// Polynomial with unbounded integer coefficients.
pub type IntPoly = Poly<num_bigint::BigInt>;

/// Polynomial with 64-bit coefficients, for small experiments.
pub type SmallPoly = Poly<i64>;
