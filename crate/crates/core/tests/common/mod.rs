#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use threeterm::{Complex64, ConcyclicConfig, Matrix2x4};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sorted uniform half-angles in (0, π), radii uniform in (0.01, 0.3),
/// resampled until the circles are disjoint.
pub fn random_config(rng: &mut impl Rng) -> ConcyclicConfig {
    loop {
        let mut alpha: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..PI));
        alpha.sort_by(f64::total_cmp);
        let r: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.01..0.3));
        if let Ok(cfg) = ConcyclicConfig::new(alpha, r) {
            return cfg;
        }
    }
}

pub fn random_real_matrix(rng: &mut impl Rng) -> Matrix2x4<f64> {
    Matrix2x4::new(std::array::from_fn(|_| {
        std::array::from_fn(|_| rng.gen_range(-1.0..1.0))
    }))
    .unwrap()
}

pub fn random_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_complex_matrix(rng: &mut impl Rng) -> Matrix2x4<Complex64> {
    Matrix2x4::new(std::array::from_fn(|_| {
        std::array::from_fn(|_| random_complex(rng))
    }))
    .unwrap()
}

/// Magnitude in [0.5, 2], random sign.
pub fn random_real_q(rng: &mut impl Rng) -> [f64; 4] {
    std::array::from_fn(|_| {
        let m = rng.gen_range(0.5..2.0);
        if rng.gen_bool(0.5) {
            m
        } else {
            -m
        }
    })
}

/// Modulus in [0.5, 2], uniform argument.
pub fn random_complex_q(rng: &mut impl Rng) -> [Complex64; 4] {
    std::array::from_fn(|_| Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(-PI..PI)))
}

/// Independent exterior-tangent oracle: the tangent segment, the two radii
/// and the center line form a right trapezoid, so the segment length is
/// the leg opposite the radius difference.
pub fn tangent_length_oracle(c1: (f64, f64), r1: f64, c2: (f64, f64), r2: f64) -> f64 {
    let dx = c2.0 - c1.0;
    let dy = c2.1 - c1.1;
    (dx * dx + dy * dy - (r1 - r2) * (r1 - r2)).sqrt()
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}
