//! The quadric `Σ = {a12·a34 + a14·a23 = a13·a24}`, the torus action
//! `a_ij ↦ q_i·q_j·a_ij` on it, and the cross-ratio that separates its orbits.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Index pairs in storage and file order.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Position of the pair `{i, j}` in [`PAIRS`], with the sign of the
/// antisymmetric extension `a_ji = −a_ij`.
pub(crate) fn pair_slot(i: usize, j: usize) -> Result<(usize, bool)> {
    let (lo, hi, flipped) = if i < j { (i, j, false) } else { (j, i, true) };
    PAIRS
        .iter()
        .position(|&p| p == (lo, hi))
        .map(|k| (k, flipped))
        .ok_or(Error::Index { i, j })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SixTuple<S> {
    pub a12: S,
    pub a13: S,
    pub a14: S,
    pub a23: S,
    pub a24: S,
    pub a34: S,
}

impl<S: Scalar> SixTuple<S> {
    /// Entries in the order 12, 13, 14, 23, 24, 34.
    pub fn from_array(a: [S; 6]) -> Self {
        Self {
            a12: a[0],
            a13: a[1],
            a14: a[2],
            a23: a[3],
            a24: a[4],
            a34: a[5],
        }
    }

    pub fn to_array(&self) -> [S; 6] {
        [self.a12, self.a13, self.a14, self.a23, self.a24, self.a34]
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut a = [S::zero(); 6];
        for (slot, &(i, j)) in a.iter_mut().zip(PAIRS.iter()) {
            *slot = f(i, j);
        }
        Self::from_array(a)
    }

    /// Entry `a_ij` for `i < j`.
    pub fn get(&self, i: usize, j: usize) -> Result<S> {
        match pair_slot(i, j)? {
            (k, false) => Ok(self.to_array()[k]),
            (_, true) => Err(Error::Index { i, j }),
        }
    }

    /// Antisymmetric extension: `a_ji = −a_ij`.
    pub fn signed(&self, i: usize, j: usize) -> Result<S> {
        let (k, flipped) = pair_slot(i, j)?;
        let v = self.to_array()[k];
        Ok(if flipped { -v } else { v })
    }

    pub fn map(&self, f: impl Fn(S) -> S) -> Self {
        Self::from_array(self.to_array().map(f))
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }

    pub fn has_zero_entry(&self) -> bool {
        self.to_array().iter().any(|v| v.is_zero())
    }

    /// `(a12·a34, a14·a23, a13·a24)`.
    pub fn monomials(&self) -> [S; 3] {
        [
            self.a12 * self.a34,
            self.a14 * self.a23,
            self.a13 * self.a24,
        ]
    }

    /// `a12·a34 + a14·a23 − a13·a24`.
    pub fn residual(&self) -> S {
        let [m1, m2, m3] = self.monomials();
        m1 + m2 - m3
    }

    fn monomial_scale(&self) -> f64 {
        self.monomials()
            .iter()
            .map(|m| m.modulus())
            .fold(0.0, f64::max)
    }

    /// `|residual|` divided by the largest monomial; zero for the zero tuple.
    pub fn relative_residual(&self) -> f64 {
        let scale = self.monomial_scale();
        if scale == 0.0 {
            0.0
        } else {
            self.residual().modulus() / scale
        }
    }

    /// Membership in `Σ`, relative to the largest monomial floored at 1.
    pub fn is_on_quadric(&self, tol: f64) -> bool {
        self.residual().modulus() <= tol * self.monomial_scale().max(1.0)
    }

    pub fn torus_apply(&self, q: &TorusElement<S>) -> Self {
        let q = q.values();
        Self::from_fn(|i, j| q[i - 1] * q[j - 1] * self.to_array()[pair_slot(i, j).unwrap().0])
    }

    /// `a12·a34 / (a23·a14)`, constant on torus orbits.
    pub fn cross_ratio_invariant(&self) -> Result<S> {
        let den = self.a23 * self.a14;
        if den.is_zero() {
            return Err(Error::Degenerate(format!(
                "cross-ratio invariant needs a23·a14 ≠ 0 in {self:?}"
            )));
        }
        Ok(self.a12 * self.a34 / den)
    }
}

impl SixTuple<f64> {
    pub fn to_complex(&self) -> SixTuple<num_complex::Complex64> {
        SixTuple::from_array(self.to_array().map(|v| num_complex::Complex64::new(v, 0.0)))
    }
}

pub fn residual<S: Scalar>(t: &SixTuple<S>) -> S {
    t.residual()
}

pub fn is_on_quadric<S: Scalar>(t: &SixTuple<S>, tol: f64) -> bool {
    t.is_on_quadric(tol)
}

pub fn torus_apply<S: Scalar>(q: &TorusElement<S>, t: &SixTuple<S>) -> SixTuple<S> {
    t.torus_apply(q)
}

pub fn cross_ratio_invariant<S: Scalar>(t: &SixTuple<S>) -> Result<S> {
    t.cross_ratio_invariant()
}

/// Four nonzero scalars acting by `a_ij ↦ q_i·q_j·a_ij`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusElement<S> {
    q: [S; 4],
}

impl<S: Scalar> TorusElement<S> {
    pub fn new(q: [S; 4]) -> Result<Self> {
        if q.iter().any(|v| v.is_zero() || !v.is_finite()) {
            return Err(Error::Domain(format!(
                "torus element needs finite nonzero entries, got {q:?}"
            )));
        }
        Ok(Self { q })
    }

    pub fn identity() -> Self {
        Self { q: [S::one(); 4] }
    }

    pub fn values(&self) -> [S; 4] {
        self.q
    }

    /// Group product, entrywise.
    pub fn compose(&self, other: &Self) -> Self {
        let mut q = self.q;
        for (a, b) in q.iter_mut().zip(other.q) {
            *a = *a * b;
        }
        Self { q }
    }

    pub fn negated(&self) -> Self {
        Self {
            q: self.q.map(|v| -v),
        }
    }

    /// The products `q_i·q_j` as a six-tuple.
    pub fn pair_products(&self) -> SixTuple<S> {
        SixTuple::from_fn(|i, j| self.q[i - 1] * self.q[j - 1])
    }
}

/// Entrywise ratios `c_ij = b_ij / a_ij` of two tuples with nonzero entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioTuple<S> {
    c: SixTuple<S>,
}

impl<S: Scalar> RatioTuple<S> {
    pub fn between(a: &SixTuple<S>, b: &SixTuple<S>) -> Result<Self> {
        for (name, t) in [("a", a), ("b", b)] {
            if t.has_zero_entry() {
                return Err(Error::Degenerate(format!(
                    "tuple {name} has a zero entry: {t:?}"
                )));
            }
            if !t.is_finite() {
                return Err(Error::Degenerate(format!(
                    "tuple {name} has a non-finite entry: {t:?}"
                )));
            }
        }
        let (a, b) = (a.to_array(), b.to_array());
        let mut c = [S::zero(); 6];
        for k in 0..6 {
            c[k] = b[k] / a[k];
        }
        Ok(Self {
            c: SixTuple::from_array(c),
        })
    }

    pub fn tuple(&self) -> &SixTuple<S> {
        &self.c
    }

    /// Scale-aware defects of `c12·c34 = c23·c14` and `c23·c14 = c13·c24`;
    /// both vanish whenever the two tuples share an orbit.
    pub fn orbit_defects(&self) -> (f64, f64) {
        let c = &self.c;
        let rel = |x: S, y: S| {
            let s = x.modulus().max(y.modulus());
            if s == 0.0 {
                0.0
            } else {
                (x - y).modulus() / s
            }
        };
        let mid = c.a23 * c.a14;
        (rel(c.a12 * c.a34, mid), rel(mid, c.a13 * c.a24))
    }
}

/// Finds `q` with `b_ij = q_i·q_j·a_ij`.
///
/// `q` is unique up to a global sign; the returned representative takes the
/// principal square root for `q₁² = c12·c13/c23`. Over the reals a negative
/// radicand yields [`Error::NoRealRoot`].
pub fn rescaling_solve<S: Scalar>(
    a: &SixTuple<S>,
    b: &SixTuple<S>,
    tol: f64,
) -> Result<TorusElement<S>> {
    let ratios = RatioTuple::between(a, b)?;
    for t in [a, b] {
        if !t.is_on_quadric(tol) {
            return Err(Error::OffQuadric {
                relative_residual: t.relative_residual(),
                tol,
            });
        }
    }
    let (ka, kb) = (a.cross_ratio_invariant()?, b.cross_ratio_invariant()?);
    let scale = ka.modulus().max(kb.modulus()).max(1.0);
    if (ka - kb).modulus() > tol * scale {
        return Err(Error::NotSameOrbit {
            invariant_a: ka.to_string(),
            invariant_b: kb.to_string(),
        });
    }

    let c = ratios.tuple();
    let q1_sq = c.a12 * c.a13 / c.a23;
    let q1 = q1_sq
        .principal_sqrt()
        .ok_or(Error::NoRealRoot(q1_sq.real_part()))?;
    let q = TorusElement::new([q1, c.a12 / q1, c.a13 / q1, c.a14 / q1])?;

    let max_error = max_relative_mismatch(&q, a, b);
    if max_error.is_nan() || max_error > tol {
        return Err(Error::Verification { max_error, tol });
    }
    Ok(q)
}

/// `max_ij |q_i·q_j·a_ij − b_ij| / |b_ij|`.
pub fn max_relative_mismatch<S: Scalar>(
    q: &TorusElement<S>,
    a: &SixTuple<S>,
    b: &SixTuple<S>,
) -> f64 {
    let qa = a.torus_apply(q).to_array();
    qa.iter()
        .zip(b.to_array())
        .map(|(&x, y)| (x - y).modulus() / y.modulus())
        .fold(0.0, f64::max)
}

/// `[X₁, X₂, X₃, X₄] = P12·P34 / (P23·P14)` for projective columns `(x, y)`.
pub fn cross_ratio_points<S: Scalar>(x: &[[S; 2]; 4]) -> Result<S> {
    let p = |i: usize, j: usize| x[i][0] * x[j][1] - x[j][0] * x[i][1];
    let den = p(1, 2) * p(0, 3);
    if den.is_zero() || !den.is_finite() {
        return Err(Error::Degenerate(format!(
            "cross-ratio denominator P23·P14 vanishes for {x:?}"
        )));
    }
    Ok(p(0, 1) * p(2, 3) / den)
}
