use std::ops::{Add, Mul, Sub};

use super::MEMBERSHIP_TOL;
use crate::error::{Error, Result};

/// A vector `(x, y, z)` of Minkowski 3-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiVec {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl MinkowskiVec {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// The indefinite pairing `x·x′ + y·y′ − z·z′`.
    #[inline]
    pub fn pair(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y - self.z * other.z
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    fn max_abs(&self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    /// `⟨v,v⟩` divided by the largest squared component, so membership tests
    /// do not depend on the overall scale of the vector.
    fn normalized_square(&self) -> f64 {
        let m = self.max_abs();
        if m == 0.0 {
            0.0
        } else {
            let s = *self * (1.0 / m);
            s.pair(&s)
        }
    }
}

/// Free-function form of [`MinkowskiVec::pair`].
pub fn mink_pair(u: &MinkowskiVec, v: &MinkowskiVec) -> f64 {
    u.pair(v)
}

impl Add for MinkowskiVec {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for MinkowskiVec {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for MinkowskiVec {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

/// A point of the upper sheet `⟨v,v⟩ = −1, z > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperboloidPoint(MinkowskiVec);

impl HyperboloidPoint {
    /// Validates and renormalizes `v` onto the sheet.
    pub fn new(v: MinkowskiVec) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::Domain(format!(
                "non-finite hyperboloid vector {v:?}"
            )));
        }
        if v.z <= 0.0 {
            return Err(Error::Domain(format!(
                "hyperboloid point needs z > 0, got {v:?}"
            )));
        }
        let q = v.normalized_square();
        let m2 = v.max_abs().powi(2);
        if (q + 1.0 / m2).abs() > MEMBERSHIP_TOL {
            return Err(Error::Domain(format!(
                "⟨v,v⟩ = {} is not −1 for {v:?}",
                v.pair(&v)
            )));
        }
        Ok(Self(v * (1.0 / (-v.pair(&v)).sqrt())))
    }

    /// The apex `(0, 0, 1)`.
    pub const fn apex() -> Self {
        Self(MinkowskiVec::new(0.0, 0.0, 1.0))
    }

    pub fn vec(&self) -> MinkowskiVec {
        self.0
    }
}

/// A point of the open positive light cone `⟨u,u⟩ = 0, z > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightConePoint(MinkowskiVec);

impl LightConePoint {
    /// Validates `u` and snaps `z` to `√(x² + y²)`.
    pub fn new(u: MinkowskiVec) -> Result<Self> {
        if !u.is_finite() {
            return Err(Error::Domain(format!("non-finite light-cone vector {u:?}")));
        }
        if u.z <= 0.0 {
            return Err(Error::Domain(format!(
                "light-cone point needs z > 0, got {u:?}"
            )));
        }
        if u.normalized_square().abs() > MEMBERSHIP_TOL {
            return Err(Error::Domain(format!(
                "⟨u,u⟩ = {} is not 0 for {u:?}",
                u.pair(&u)
            )));
        }
        let z = u.x.hypot(u.y);
        if z == 0.0 {
            return Err(Error::Domain(format!("light-cone point {u:?} underflows")));
        }
        Ok(Self(MinkowskiVec::new(u.x, u.y, z)))
    }

    /// `z·(cos θ, sin θ, 1)`.
    pub fn from_polar(theta: f64, z: f64) -> Result<Self> {
        if !(z > 0.0 && z.is_finite() && theta.is_finite()) {
            return Err(Error::Domain(format!(
                "light-cone polar form needs finite θ and z > 0, got θ={theta}, z={z}"
            )));
        }
        let (s, c) = theta.sin_cos();
        Ok(Self(MinkowskiVec::new(z * c, z * s, z)))
    }

    pub fn vec(&self) -> MinkowskiVec {
        self.0
    }

    /// Positive rescaling stays on the cone.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::Domain(format!(
                "light-cone scale must be positive, got {s}"
            )));
        }
        Self::new(self.0 * s)
    }
}
