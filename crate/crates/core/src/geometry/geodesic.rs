use num_complex::Complex64;

use super::minkowski::HyperboloidPoint;
use super::models::{BoundaryPoint, UhpPoint};
use crate::error::{Error, Result};

/// A point of `ℝ ∪ {∞}`, the ideal boundary of the upper half plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal {
    Finite(f64),
    Infinity,
}

impl ExtendedReal {
    pub fn projective(&self) -> [Complex64; 2] {
        match *self {
            Self::Finite(x) => [Complex64::new(x, 0.0), Complex64::new(1.0, 0.0)],
            Self::Infinity => [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        }
    }
}

/// A geodesic given by its two distinct ideal endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geodesic {
    Disk(BoundaryPoint, BoundaryPoint),
    Uhp(ExtendedReal, ExtendedReal),
}

/// Euclidean picture of a disk geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeodesicArc {
    /// Arc of the circle through both endpoints orthogonal to the unit circle.
    Circle { center: (f64, f64), radius: f64 },
    /// Endpoints are antipodal; the geodesic is a diameter.
    Diameter,
}

impl Geodesic {
    pub fn in_disk(a: BoundaryPoint, b: BoundaryPoint) -> Result<Self> {
        if a == b {
            return Err(Error::Domain(format!(
                "geodesic endpoints coincide at θ = {}",
                a.theta()
            )));
        }
        Ok(Self::Disk(a, b))
    }

    pub fn in_uhp(a: ExtendedReal, b: ExtendedReal) -> Result<Self> {
        if a == b {
            return Err(Error::Domain(format!(
                "geodesic endpoints coincide at {a:?}"
            )));
        }
        Ok(Self::Uhp(a, b))
    }

    /// The circle orthogonal to `𝐒` through both endpoints, for disk geodesics.
    pub fn disk_arc(&self) -> Option<GeodesicArc> {
        let Self::Disk(a, b) = self else {
            return None;
        };
        let (ax, ay) = a.to_xy();
        let (bx, by) = b.to_xy();
        let denom = 1.0 + ax * bx + ay * by;
        if denom.abs() < 1e-12 {
            return Some(GeodesicArc::Diameter);
        }
        let center = ((ax + bx) / denom, (ay + by) / denom);
        let radius = (center.0 - ax).hypot(center.1 - ay);
        Some(GeodesicArc::Circle { center, radius })
    }
}

fn interior(w: &UhpPoint) -> Result<Complex64> {
    match *w {
        UhpPoint::Interior { re, im } => Ok(Complex64::new(re, im)),
        _ => Err(Error::Domain(format!("{w:?} is an ideal point"))),
    }
}

/// Ideal endpoints `(W₁′, W₂′)` of the geodesic through `w1` and `w2`,
/// ordered so the geodesic runs `W₁′, W₁, W₂, W₂′`.
pub fn geodesic_ideal_endpoints(
    w1: &UhpPoint,
    w2: &UhpPoint,
) -> Result<(ExtendedReal, ExtendedReal)> {
    let (z1, z2) = (interior(w1)?, interior(w2)?);
    if z1 == z2 {
        return Err(Error::Domain(format!("coincident points {z1}")));
    }
    let dx = z2.re - z1.re;
    let vertical = |lower_first: bool| {
        let foot = ExtendedReal::Finite(z1.re);
        if lower_first {
            (foot, ExtendedReal::Infinity)
        } else {
            (ExtendedReal::Infinity, foot)
        }
    };
    if dx == 0.0 {
        return Ok(vertical(z1.im < z2.im));
    }
    // center on the real axis equidistant from both points
    let num = dx * (z2.re + z1.re) + (z2.im - z1.im) * (z2.im + z1.im);
    let c = num / (2.0 * dx);
    if !c.is_finite() {
        return Ok(vertical(z1.im < z2.im));
    }
    let radius = (z1.re - c).hypot(z1.im);
    // c ± R with the small root recovered from the product (c−R)(c+R) = 2c·x₁ − |z₁|²
    let big = c + radius.copysign(c);
    let small = (2.0 * c * z1.re - z1.norm_sqr()) / big;
    let (left, right) = if big > 0.0 {
        (small, big)
    } else {
        (big, small)
    };
    let (left, right) = (ExtendedReal::Finite(left), ExtendedReal::Finite(right));
    Ok(if dx > 0.0 {
        (left, right)
    } else {
        (right, left)
    })
}

fn det(a: [Complex64; 2], b: [Complex64; 2]) -> Complex64 {
    a[0] * b[1] - b[0] * a[1]
}

/// Hyperbolic distance as `|log |[W₁, W₁′, W₂, W₂′]||`.
pub fn hyp_distance_crossratio(w1: &UhpPoint, w2: &UhpPoint) -> Result<f64> {
    let (e1, e2) = geodesic_ideal_endpoints(w1, w2)?;
    let x = [
        w1.projective(),
        e1.projective(),
        w2.projective(),
        e2.projective(),
    ];
    let cr = det(x[0], x[1]) * det(x[2], x[3]) / (det(x[1], x[2]) * det(x[0], x[3]));
    Ok(cr.norm().ln().abs())
}

/// `arccosh(−⟨v₁, v₂⟩)`.
pub fn hyp_distance_hyperboloid(v1: &HyperboloidPoint, v2: &HyperboloidPoint) -> Result<f64> {
    let (a, b) = (v1.vec(), v2.vec());
    let k = -a.pair(&b);
    let slack = 1e-9 * (a.z * b.z).max(1.0);
    if k < 1.0 - slack {
        return Err(Error::Domain(format!("−⟨v₁,v₂⟩ = {k} is below 1")));
    }
    Ok(k.max(1.0).acosh())
}
