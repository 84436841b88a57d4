//! Horocycles stored as light-cone vectors.
//!
//! `u ∈ L⁺` corresponds to the horocycle `{v ∈ ℍ : ⟨u,v⟩ = −1/√2}`. In the
//! disk its image is a Euclidean circle of radius `1/(1 + z√2)` internally
//! tangent to `𝐒` at the projection of `u`. The lambda length between two
//! horocycles is `√(−⟨u₁,u₂⟩)`.

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::geometry::{lightcone_to_boundary, BoundaryPoint, LightConePoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Horocycle {
    u: LightConePoint,
}

/// A circle in the unit-disk picture.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanCircle {
    pub center: (f64, f64),
    pub radius: f64,
}

/// `value = exp(delta / 2)`; `delta > 0` exactly when the horocycles are disjoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaLength {
    pub value: f64,
    pub delta: f64,
}

impl Horocycle {
    pub fn new(u: LightConePoint) -> Self {
        Self { u }
    }

    pub fn light_cone(&self) -> LightConePoint {
        self.u
    }

    /// Tangency point on `𝐒`.
    pub fn center(&self) -> BoundaryPoint {
        lightcone_to_boundary(&self.u)
    }

    /// Euclidean radius `1/(1 + z√2)`.
    pub fn euclidean_radius(&self) -> f64 {
        1.0 / (1.0 + self.u.vec().z * SQRT_2)
    }

    pub fn to_circle(&self) -> EuclideanCircle {
        horocycle_to_circle(self)
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        Ok(Self::new(self.u.scaled(s)?))
    }
}

pub fn horocycle_to_circle(h: &Horocycle) -> EuclideanCircle {
    let r = h.euclidean_radius();
    let (c, s) = h.center().to_xy();
    EuclideanCircle {
        center: ((1.0 - r) * c, (1.0 - r) * s),
        radius: r,
    }
}

/// The horocycle tangent to `𝐒` at `theta` with Euclidean radius `r`.
pub fn horocycle_from_tangency(theta: BoundaryPoint, r: f64) -> Result<Horocycle> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!(
            "horocycle radius must lie in (0, 1), got {r}"
        )));
    }
    let z = (1.0 / r - 1.0) / SQRT_2;
    Ok(Horocycle::new(LightConePoint::from_polar(
        theta.theta(),
        z,
    )?))
}

pub fn lambda_length(h1: &Horocycle, h2: &Horocycle) -> Result<LambdaLength> {
    let (u1, u2) = (h1.u.vec(), h2.u.vec());
    let neg = -u1.pair(&u2);
    if neg <= 1e-12 * u1.z * u2.z {
        return Err(Error::DegeneratePair(format!("{u1:?} and {u2:?}")));
    }
    let value = neg.sqrt();
    Ok(LambdaLength {
        value,
        delta: 2.0 * value.ln(),
    })
}
