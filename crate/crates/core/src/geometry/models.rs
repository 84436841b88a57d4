use std::f64::consts::TAU;

use num_complex::Complex64;

use super::minkowski::{HyperboloidPoint, LightConePoint, MinkowskiVec};
use crate::error::{Error, Result};

/// A point of the open Poincaré disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    x: f64,
    y: f64,
}

impl DiskPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(Error::Domain(format!("non-finite disk point ({x}, {y})")));
        }
        if x * x + y * y >= 1.0 {
            return Err(Error::Domain(format!(
                "({x}, {y}) is not inside the open unit disk"
            )));
        }
        Ok(Self { x, y })
    }

    pub const fn origin() -> Self {
        Self { x: 0.0, y: 0.0 }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn to_hyperboloid(&self) -> HyperboloidPoint {
        disk_to_hyperboloid(self)
    }
}

/// An ideal point `(cos θ, sin θ)` of the disk, `θ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BoundaryPoint {
    theta: f64,
}

impl BoundaryPoint {
    pub fn new(theta: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::Domain(format!("non-finite boundary angle {theta}")));
        }
        let mut t = theta.rem_euclid(TAU);
        // rem_euclid of a tiny negative angle rounds up to exactly 2π
        if t >= TAU {
            t = 0.0;
        }
        Ok(Self { theta: t })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn to_xy(&self) -> (f64, f64) {
        let (s, c) = self.theta.sin_cos();
        (c, s)
    }
}

/// A point of the closed disk `𝔻 ∪ 𝐒`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedDiskPoint {
    Interior(DiskPoint),
    Boundary(BoundaryPoint),
}

/// A point of the closed upper half plane, including the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UhpPoint {
    Interior {
        re: f64,
        im: f64,
    },
    /// Ideal point on the real axis.
    Real(f64),
    Infinity,
}

impl UhpPoint {
    pub fn interior(re: f64, im: f64) -> Result<Self> {
        if !(re.is_finite() && im.is_finite()) {
            return Err(Error::Domain(format!("non-finite point {re} + {im}i")));
        }
        if im <= 0.0 {
            return Err(Error::Domain(format!(
                "{re} + {im}i is not in the open upper half plane"
            )));
        }
        Ok(Self::Interior { re, im })
    }

    pub fn real(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("non-finite ideal point {x}")));
        }
        Ok(Self::Real(x))
    }

    pub fn is_ideal(&self) -> bool {
        !matches!(self, Self::Interior { .. })
    }

    /// Projective column `(w, 1)`, or `(1, 0)` for the point at infinity.
    pub fn projective(&self) -> [Complex64; 2] {
        let one = Complex64::new(1.0, 0.0);
        match *self {
            Self::Interior { re, im } => [Complex64::new(re, im), one],
            Self::Real(x) => [Complex64::new(x, 0.0), one],
            Self::Infinity => [one, Complex64::new(0.0, 0.0)],
        }
    }

    /// Lift an interior point to the hyperboloid through the disk.
    pub fn to_hyperboloid(&self) -> Result<HyperboloidPoint> {
        match cayley_uhp_to_disk(self)? {
            ClosedDiskPoint::Interior(p) => Ok(disk_to_hyperboloid(&p)),
            ClosedDiskPoint::Boundary(_) => Err(Error::Domain(format!(
                "ideal point {self:?} has no hyperboloid lift"
            ))),
        }
    }
}

/// `(x, y) ↦ (2x, 2y, 1 + x² + y²) / (1 − x² − y²)`.
pub fn disk_to_hyperboloid(p: &DiskPoint) -> HyperboloidPoint {
    let r2 = p.x * p.x + p.y * p.y;
    let s = 1.0 / (1.0 - r2);
    let v = MinkowskiVec::new(2.0 * p.x * s, 2.0 * p.y * s, (1.0 + r2) * s);
    HyperboloidPoint::new(v).expect("disk lift lands on the hyperboloid")
}

/// Central projection from `(0, 0, −1)`: `(x, y, z) ↦ (x, y) / (1 + z)`.
pub fn hyperboloid_to_disk(v: &HyperboloidPoint) -> DiskPoint {
    let v = v.vec();
    let s = 1.0 / (1.0 + v.z);
    let (x, y) = (v.x * s, v.y * s);
    // |(x,y)|² = (z − 1)/(z + 1) < 1 for every point of the sheet
    DiskPoint { x, y }
}

/// The angle of `(x, y)/√(x² + y²)` on the boundary circle.
pub fn lightcone_to_boundary(u: &LightConePoint) -> BoundaryPoint {
    let u = u.vec();
    BoundaryPoint::new(u.y.atan2(u.x)).expect("finite light-cone vector")
}

/// `z ↦ (z − i)/(z + i)`, ideal points go to the boundary circle.
pub fn cayley_uhp_to_disk(w: &UhpPoint) -> Result<ClosedDiskPoint> {
    match *w {
        UhpPoint::Interior { re, im } => {
            let z = Complex64::new(re, im);
            let i = Complex64::i();
            let p = (z - i) / (z + i);
            DiskPoint::new(p.re, p.im)
                .map(ClosedDiskPoint::Interior)
                .map_err(|_| {
                    Error::Domain(format!(
                        "{re} + {im}i is too close to the ideal boundary to represent in the disk"
                    ))
                })
        }
        // arg((x − i)/(x + i)) = 2·arg(−x + i)
        UhpPoint::Real(x) => Ok(ClosedDiskPoint::Boundary(BoundaryPoint::new(
            2.0 * 1f64.atan2(-x),
        )?)),
        UhpPoint::Infinity => Ok(ClosedDiskPoint::Boundary(BoundaryPoint::new(0.0)?)),
    }
}

/// `w ↦ i(1 + w)/(1 − w)`; the boundary point `1` goes to infinity.
pub fn cayley_disk_to_uhp(p: &ClosedDiskPoint) -> UhpPoint {
    match *p {
        ClosedDiskPoint::Interior(d) => {
            let w = d.to_complex();
            let one = Complex64::new(1.0, 0.0);
            let z = Complex64::i() * (one + w) / (one - w);
            // Im z = (1 − |w|²)/|1 − w|² > 0
            UhpPoint::Interior {
                re: z.re,
                im: z.im.max(f64::MIN_POSITIVE),
            }
        }
        ClosedDiskPoint::Boundary(b) => {
            if b.theta() == 0.0 {
                UhpPoint::Infinity
            } else {
                let half = 0.5 * b.theta();
                UhpPoint::Real(-half.cos() / half.sin())
            }
        }
    }
}
