//! Minkowski 3-space and three models of the hyperbolic plane: the upper
//! sheet of the hyperboloid, the Poincaré disk and the upper half plane.

mod geodesic;
mod minkowski;
mod models;

pub use geodesic::{
    geodesic_ideal_endpoints, hyp_distance_crossratio, hyp_distance_hyperboloid, ExtendedReal,
    Geodesic, GeodesicArc,
};
pub use minkowski::{mink_pair, HyperboloidPoint, LightConePoint, MinkowskiVec};
pub use models::{
    cayley_disk_to_uhp, cayley_uhp_to_disk, disk_to_hyperboloid, hyperboloid_to_disk,
    lightcone_to_boundary, BoundaryPoint, ClosedDiskPoint, DiskPoint, UhpPoint,
};

/// Absolute tolerance on `⟨v,v⟩` after dividing by the largest squared component.
pub const MEMBERSHIP_TOL: f64 = 1e-9;
