//! Four incarnations of the 3-term relation `AB + CD = EF`.
//!
//! Given four circles internally tangent to the unit circle, the chords
//! between tangency points (Ptolemy), the exterior bitangents (Casey), the
//! lambda lengths of the corresponding horocycles (Penner) and the 2×2 minors
//! of the half-angle matrix (Plücker) all satisfy
//!
//! ```text
//! a12·a34 + a14·a23 = a13·a24
//! ```
//!
//! and any two of these 6-tuples differ by a torus rescaling
//! `a_ij ↦ q_i·q_j·a_ij`. This crate computes all four families, the
//! rescalings between them, and a solver that recovers `q` from two tuples
//! whenever their cross-ratios agree.
//!
//! Module map:
//!
//! | module | contents |
//! |--------|----------|
//! | [`geometry`] | Minkowski 3-space, hyperboloid / disk / upper half plane, Cayley transforms, distances |
//! | [`horocycle`] | horocycles as light-cone vectors, Euclidean circle view, lambda lengths |
//! | [`measurements`] | four-circle configurations and the `d`, `t`, `λ`, `P` tables |
//! | [`relations`] | six-tuples, residual, torus action, cross-ratios, rescaling solver |
//! | [`grassmann`] | 2×4 matrices, Plücker minors, reconstruction from a point of the quadric |

pub mod error;
pub mod geometry;
pub mod grassmann;
pub mod horocycle;
pub mod measurements;
pub mod relations;
pub mod scalar;

pub use error::{Error, Result};
pub use geometry::{
    BoundaryPoint, ClosedDiskPoint, DiskPoint, ExtendedReal, Geodesic, GeodesicArc,
    HyperboloidPoint, LightConePoint, MinkowskiVec, UhpPoint,
};
pub use grassmann::{Matrix2x4, PluckerVector};
pub use horocycle::{EuclideanCircle, Horocycle, LambdaLength};
pub use measurements::{ConcyclicConfig, MeasurementTable};
pub use num_complex::Complex64;
pub use relations::{RatioTuple, SixTuple, TorusElement, PAIRS};
pub use scalar::Scalar;

/// Default relative tolerance for relation checks.
pub const DEFAULT_TOL: f64 = 1e-10;
