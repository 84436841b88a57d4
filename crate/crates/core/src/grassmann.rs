//! Plücker coordinates of 2×4 matrices.
//!
//! The six 2×2 minors of any 2×4 matrix lie on the quadric `Σ`, and every
//! point of `Σ` arises this way: [`reconstruct`] builds a preimage by
//! pivoting on the largest minor.

use crate::error::{Error, Result};
use crate::relations::{cross_ratio_points, pair_slot, SixTuple, TorusElement, PAIRS};
use crate::scalar::Scalar;

/// Rows `(x₁ … x₄)` and `(y₁ … y₄)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2x4<S> {
    pub rows: [[S; 4]; 2],
}

/// Six minors `P12 … P34` in [`PAIRS`] order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PluckerVector<S>(pub SixTuple<S>);

impl<S: Scalar> PluckerVector<S> {
    pub fn tuple(&self) -> &SixTuple<S> {
        &self.0
    }

    /// Antisymmetric minor `P_ij`, with `P_ji = −P_ij`.
    pub fn signed(&self, i: usize, j: usize) -> Result<S> {
        self.0.signed(i, j)
    }
}

impl<S: Scalar> Matrix2x4<S> {
    pub fn new(rows: [[S; 4]; 2]) -> Result<Self> {
        if rows.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Domain(format!(
                "matrix has non-finite entries: {rows:?}"
            )));
        }
        Ok(Self { rows })
    }

    pub fn zero() -> Self {
        Self {
            rows: [[S::zero(); 4]; 2],
        }
    }

    pub fn from_columns(cols: [[S; 2]; 4]) -> Self {
        Self {
            rows: [cols.map(|c| c[0]), cols.map(|c| c[1])],
        }
    }

    pub fn columns(&self) -> [[S; 2]; 4] {
        std::array::from_fn(|k| [self.rows[0][k], self.rows[1][k]])
    }

    /// `P_ij = x_i·y_j − x_j·y_i` for 1-based columns.
    pub fn minor(&self, i: usize, j: usize) -> Result<S> {
        pair_slot(i, j)?;
        let [x, y] = &self.rows;
        Ok(x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1])
    }

    pub fn minors(&self) -> PluckerVector<S> {
        let [x, y] = &self.rows;
        PluckerVector(SixTuple::from_fn(|i, j| {
            x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
        }))
    }

    /// Multiplies column `k` by `s[k]`; minors pick up `s_i·s_j`.
    pub fn column_rescale(&self, s: [S; 4]) -> Self {
        let mut rows = self.rows;
        for row in rows.iter_mut() {
            for (v, f) in row.iter_mut().zip(s) {
                *v = *v * f;
            }
        }
        Self { rows }
    }

    /// Column `k` of the result is column `sigma[k]` of `self` (1-based).
    pub fn column_permute(&self, sigma: [usize; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &s in &sigma {
            if !(1..=4).contains(&s) || seen[s - 1] {
                return Err(Error::Permutation(sigma));
            }
            seen[s - 1] = true;
        }
        let cols = self.columns();
        Ok(Self::from_columns(sigma.map(|s| cols[s - 1])))
    }

    /// Cross-ratio of the four columns as points of the projective line.
    pub fn column_cross_ratio(&self) -> Result<S> {
        cross_ratio_points(&self.columns())
    }
}

pub fn minors<S: Scalar>(m: &Matrix2x4<S>) -> PluckerVector<S> {
    m.minors()
}

pub fn column_rescale<S: Scalar>(m: &Matrix2x4<S>, s: [S; 4]) -> Matrix2x4<S> {
    m.column_rescale(s)
}

pub fn column_permute<S: Scalar>(m: &Matrix2x4<S>, sigma: [usize; 4]) -> Result<Matrix2x4<S>> {
    m.column_permute(sigma)
}

/// Minors of the permuted matrix expressed through the original minors:
/// `P′_ij = P_{σ(i)σ(j)}` with the antisymmetric sign.
pub fn permuted_minors<S: Scalar>(
    p: &PluckerVector<S>,
    sigma: [usize; 4],
) -> Result<PluckerVector<S>> {
    let mut out = [S::zero(); 6];
    for (slot, &(i, j)) in out.iter_mut().zip(PAIRS.iter()) {
        let (a, b) = (sigma[i - 1], sigma[j - 1]);
        *slot = p.signed(a, b).map_err(|_| Error::Permutation(sigma))?;
    }
    Ok(PluckerVector(SixTuple::from_array(out)))
}

/// Torus action on Plücker vectors, matching [`Matrix2x4::column_rescale`].
pub fn rescale_minors<S: Scalar>(p: &PluckerVector<S>, q: &TorusElement<S>) -> PluckerVector<S> {
    PluckerVector(p.0.torus_apply(q))
}

/// A 2×4 matrix whose minors are `p`.
///
/// With pivot `(i, j)` maximizing `|P_ij|`, set column `i = (1, 0)`, column
/// `j = (0, P_ij)` and every other column `m = (−P_jm / P_ij, P_im)`. The
/// minors involving `i` or `j` then match by construction and the remaining
/// one matches because `p` lies on the quadric.
pub fn reconstruct<S: Scalar>(p: &PluckerVector<S>, tol: f64) -> Result<Matrix2x4<S>> {
    let t = p.tuple();
    if !t.is_finite() {
        return Err(Error::Domain(format!("non-finite Plücker vector {t:?}")));
    }
    if !t.is_on_quadric(tol) {
        return Err(Error::OffQuadric {
            relative_residual: t.relative_residual(),
            tol,
        });
    }
    let entries = t.to_array();
    let mut pivot = 0;
    for (k, v) in entries.iter().enumerate() {
        // strict comparison keeps the first index on ties
        if v.modulus() > entries[pivot].modulus() {
            pivot = k;
        }
    }
    let p_piv = entries[pivot];
    if p_piv.is_zero() {
        return Ok(Matrix2x4::zero());
    }
    let (i, j) = PAIRS[pivot];
    let mut cols = [[S::zero(); 2]; 4];
    cols[i - 1] = [S::one(), S::zero()];
    cols[j - 1] = [S::zero(), p_piv];
    for m in (1..=4).filter(|&m| m != i && m != j) {
        cols[m - 1] = [-p.signed(j, m)? / p_piv, p.signed(i, m)?];
    }
    Ok(Matrix2x4::from_columns(cols))
}
