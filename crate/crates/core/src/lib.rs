//! Exact classification of lattice tetrahedra in Z³.
//!
//! A lattice tetrahedron is *empty* when its only lattice points are its
//! vertices and *clean* when its boundary has no other lattice points.
//! Every empty tetrahedron is affinely unimodularly equivalent to some
//! `T_{a,b,c} = conv{0, e₁, e₂, (a, b, c)}` with `0 <= a, b < c`, and
//! `T_{a,b,c}` is empty exactly when `gcd(a,c) = gcd(b,c) = gcd(d,c) = 1`
//! and one of `a, b, c, d` equals 1, where `d = (1 − a − b) mod c`.
//!
//! The crate computes all of this in checked 64-bit integer arithmetic:
//!
//! - [`intlin`]: determinants, cross products, gcds, basis completion, affine unimodular maps
//! - [`geometry`]: exact point location and the brute-force lattice-point oracle
//! - [`whitefn`]: fractional parts, the equation systems, `f_n`, and the fast criteria
//! - [`normalize`]: explicit reduction to `T_{a,b,c}` and canonical representatives
//! - [`harness`]: exhaustive cross-validation suites
//!
//! ```
//! use emptytet::{geometry::Tetrahedron, normalize::canonical_form, whitefn::white_empty};
//!
//! let t = Tetrahedron::standard(1, 1, 5).unwrap();
//! let form = canonical_form(&t).unwrap();
//! assert!(white_empty(&form));
//! ```

pub mod error;
pub mod geometry;
pub mod harness;
pub mod input;
pub mod intlin;
pub mod normalize;
pub mod report;
pub mod whitefn;

pub use error::{Error, Result};
pub use geometry::{PointLocation, Tetrahedron};
pub use intlin::{AffineUnimodularMap, IntMatrix3, IntVec3, LatticePoint};
pub use normalize::NormalizationResult;
pub use whitefn::CanonicalForm;
