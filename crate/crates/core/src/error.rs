use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A point or parameter lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Index outside `1..=4`, or a pair with `i == j`.
    #[error("invalid index pair ({i}, {j})")]
    Index { i: usize, j: usize },

    /// Two horocycles whose light-cone vectors lie on a common ray.
    #[error("horocycles {0} share a common ray in the light cone")]
    DegeneratePair(String),

    /// A four-circle configuration violating ordering, radius or disjointness.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Circles `i` and `j` (1-based) intersect.
    #[error("circles H{i} and H{j} overlap (center distance {distance}, radii sum {radii_sum})")]
    Overlap {
        i: usize,
        j: usize,
        distance: f64,
        radii_sum: f64,
    },

    /// A six-tuple or point set whose required entries vanish.
    #[error("degenerate tuple: {0}")]
    Degenerate(String),

    /// A six-tuple that does not satisfy the 3-term relation within tolerance.
    #[error(
        "tuple is off the quadric (relative residual {relative_residual:e}, tolerance {tol:e})"
    )]
    OffQuadric { relative_residual: f64, tol: f64 },

    /// The two tuples lie on the quadric but in different torus orbits.
    #[error("tuples lie in different torus orbits (cross-ratio invariants {invariant_a} vs {invariant_b})")]
    NotSameOrbit {
        invariant_a: String,
        invariant_b: String,
    },

    /// Real tuples in the same complex orbit whose rescaling needs imaginary `q`.
    #[error("no real rescaling exists: q1² = {0} is negative")]
    NoRealRoot(f64),

    /// A computed rescaling failed its own verification.
    #[error("rescaling verification failed: max relative error {max_error:e} exceeds {tol:e}")]
    Verification { max_error: f64, tol: f64 },

    #[error("invalid permutation {0:?}")]
    Permutation([usize; 4]),
}
