//! Four circles `H₁ … H₄` internally tangent to the unit circle `𝐒` at
//! `A_i = (cos 2α_i, sin 2α_i)`, and the four measurement families they
//! produce:
//!
//! * `d_ij`, chord between `A_i` and `A_j`,
//! * `t_ij`, exterior bitangent of `H_i` and `H_j`,
//! * `λ_ij`, lambda length of the horocycles `H_i`, `H_j`,
//! * `P_ij`, minors of the unit columns `(cos α_i, sin α_i)`.
//!
//! They are linked entrywise by `t = √(1−r_i)√(1−r_j)·d`,
//! `t = λ·√(2r_i)√(2r_j)` and `d = 2P`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::BoundaryPoint;
use crate::horocycle::{horocycle_from_tangency, lambda_length, Horocycle};
use crate::relations::{pair_slot, SixTuple};

/// Margin added to `r_i + r_j` in the disjointness check.
pub const DISJOINT_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcyclicConfig {
    alpha: [f64; 4],
    r: [f64; 4],
}

impl ConcyclicConfig {
    pub fn new(alpha: [f64; 4], r: [f64; 4]) -> Result<Self> {
        if alpha.iter().chain(&r).any(|v| !v.is_finite()) {
            return Err(Error::Config("angles and radii must be finite".into()));
        }
        if alpha[0] < 0.0 || alpha[3] > PI {
            return Err(Error::Config(format!(
                "half-angles must lie in [0, π], got {alpha:?}"
            )));
        }
        for k in 0..3 {
            if alpha[k] >= alpha[k + 1] {
                return Err(Error::Config(format!(
                    "half-angles must be strictly increasing: α{} = {} ≥ α{} = {}",
                    k + 1,
                    alpha[k],
                    k + 2,
                    alpha[k + 1]
                )));
            }
        }
        for (k, &ri) in r.iter().enumerate() {
            if !(ri > 0.0 && ri < 1.0) {
                return Err(Error::Config(format!(
                    "radius r{} = {ri} is outside (0, 1)",
                    k + 1
                )));
            }
        }
        let cfg = Self { alpha, r };
        for i in 1..=4 {
            for j in i + 1..=4 {
                let (ci, cj) = (cfg.center(i), cfg.center(j));
                let distance = (ci.0 - cj.0).hypot(ci.1 - cj.1);
                let radii_sum = r[i - 1] + r[j - 1];
                if distance <= radii_sum + DISJOINT_MARGIN {
                    return Err(Error::Overlap {
                        i,
                        j,
                        distance,
                        radii_sum,
                    });
                }
            }
        }
        Ok(cfg)
    }

    /// Configuration whose circles are the given horocycles; tangency points
    /// must already run counterclockwise from angle 0.
    pub fn from_horocycles(h: &[Horocycle; 4]) -> Result<Self> {
        let alpha = h.map(|h| 0.5 * h.center().theta());
        let r = h.map(|h| h.euclidean_radius());
        Self::new(alpha, r)
    }

    pub fn alpha(&self) -> [f64; 4] {
        self.alpha
    }

    pub fn radii(&self) -> [f64; 4] {
        self.r
    }

    fn check(i: usize, j: usize) -> Result<()> {
        pair_slot(i, j).map(|_| ())
    }

    fn idx(i: usize) -> Result<usize> {
        if (1..=4).contains(&i) {
            Ok(i - 1)
        } else {
            Err(Error::Index { i, j: i })
        }
    }

    /// `A_i` on the unit circle.
    pub fn tangency_point(&self, i: usize) -> Result<(f64, f64)> {
        let (s, c) = (2.0 * self.alpha[Self::idx(i)?]).sin_cos();
        Ok((c, s))
    }

    fn center(&self, i: usize) -> (f64, f64) {
        let k = i - 1;
        let (s, c) = (2.0 * self.alpha[k]).sin_cos();
        ((1.0 - self.r[k]) * c, (1.0 - self.r[k]) * s)
    }

    /// Center of `H_i`, at distance `1 − r_i` from the origin along `A_i`.
    pub fn euclidean_center(&self, i: usize) -> Result<(f64, f64)> {
        Self::idx(i)?;
        Ok(self.center(i))
    }

    pub fn radius(&self, i: usize) -> Result<f64> {
        Ok(self.r[Self::idx(i)?])
    }

    /// `H_i` as a horocycle in the light cone.
    pub fn horocycle(&self, i: usize) -> Result<Horocycle> {
        let k = Self::idx(i)?;
        horocycle_from_tangency(BoundaryPoint::new(2.0 * self.alpha[k])?, self.r[k])
    }

    /// `d_ij = 2 sin(α_j − α_i)`, symmetric in `i, j`.
    pub fn chord(&self, i: usize, j: usize) -> Result<f64> {
        Self::check(i, j)?;
        Ok(2.0 * (self.alpha[j - 1] - self.alpha[i - 1]).abs().sin())
    }

    /// `t_ij = √(1 − r_i)·√(1 − r_j)·d_ij`.
    pub fn bitangent(&self, i: usize, j: usize) -> Result<f64> {
        let d = self.chord(i, j)?;
        Ok((1.0 - self.r[i - 1]).sqrt() * (1.0 - self.r[j - 1]).sqrt() * d)
    }

    /// `λ_ij = t_ij / (√(2r_i)·√(2r_j))`.
    pub fn lambda_measure(&self, i: usize, j: usize) -> Result<f64> {
        let t = self.bitangent(i, j)?;
        Ok(t / ((2.0 * self.r[i - 1]).sqrt() * (2.0 * self.r[j - 1]).sqrt()))
    }

    /// `λ_ij = √(−⟨u_i, u_j⟩)` from the light-cone vectors of `H_i`, `H_j`.
    pub fn lambda_pairing(&self, i: usize, j: usize) -> Result<f64> {
        Self::check(i, j)?;
        Ok(lambda_length(&self.horocycle(i)?, &self.horocycle(j)?)?.value)
    }

    /// `P_ij = cos α_i·sin α_j − cos α_j·sin α_i`; antisymmetric.
    pub fn plucker_measure(&self, i: usize, j: usize) -> Result<f64> {
        Self::check(i, j)?;
        let (si, ci) = self.alpha[i - 1].sin_cos();
        let (sj, cj) = self.alpha[j - 1].sin_cos();
        Ok(ci * sj - cj * si)
    }

    pub fn measure_all(&self) -> MeasurementTable {
        let table = |f: &dyn Fn(usize, usize) -> Result<f64>| {
            SixTuple::from_fn(|i, j| f(i, j).expect("valid pair of a validated configuration"))
        };
        MeasurementTable {
            d: table(&|i, j| self.chord(i, j)),
            t: table(&|i, j| self.bitangent(i, j)),
            lambda: table(&|i, j| self.lambda_pairing(i, j)),
            p: table(&|i, j| self.plucker_measure(i, j)),
        }
    }
}

/// Length of the exterior common tangent of two disjoint circles,
/// `√(c² − (r₁ − r₂)²)` with `c` the center distance.
pub fn exterior_tangent_length(c1: (f64, f64), r1: f64, c2: (f64, f64), r2: f64) -> f64 {
    let c = (c1.0 - c2.0).hypot(c1.1 - c2.1);
    ((c - (r1 - r2)) * (c + (r1 - r2))).max(0.0).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementTable {
    pub d: SixTuple<f64>,
    pub t: SixTuple<f64>,
    /// Lambda lengths through the Minkowski pairing.
    pub lambda: SixTuple<f64>,
    pub p: SixTuple<f64>,
}

/// Largest entrywise relative deviation of each rescaling identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityDeviations {
    /// `t` against the exterior tangent length of the drawn circles.
    pub chord_bitangent: f64,
    /// `t` against `λ·√(2r_i)√(2r_j)`.
    pub bitangent_lambda: f64,
    /// `d` against `2P`.
    pub chord_plucker: f64,
}

impl MeasurementTable {
    /// Relative residuals of `d`, `t`, `λ`, `P` in that order.
    pub fn relative_residuals(&self) -> [f64; 4] {
        [self.d, self.t, self.lambda, self.p].map(|t| t.relative_residual())
    }

    pub fn identity_deviations(&self, cfg: &ConcyclicConfig) -> IdentityDeviations {
        let r = cfg.radii();
        let rel = |x: f64, y: f64| (x - y).abs() / x.abs().max(y.abs());
        let mut dev = IdentityDeviations {
            chord_bitangent: 0.0,
            bitangent_lambda: 0.0,
            chord_plucker: 0.0,
        };
        for (k, &(i, j)) in crate::PAIRS.iter().enumerate() {
            let t = self.t.to_array()[k];
            let direct = exterior_tangent_length(cfg.center(i), r[i - 1], cfg.center(j), r[j - 1]);
            let via_lambda =
                self.lambda.to_array()[k] * (2.0 * r[i - 1]).sqrt() * (2.0 * r[j - 1]).sqrt();
            dev.chord_bitangent = dev.chord_bitangent.max(rel(t, direct));
            dev.bitangent_lambda = dev.bitangent_lambda.max(rel(t, via_lambda));
            dev.chord_plucker = dev
                .chord_plucker
                .max(rel(self.d.to_array()[k], 2.0 * self.p.to_array()[k]));
        }
        dev
    }
}
