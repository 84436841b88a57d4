//! Scalar field abstraction shared by [`relations`](crate::relations) and
//! [`grassmann`](crate::grassmann): real geometry runs over `f64`, the
//! general 3-term relation over `Complex64`.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

pub trait Scalar:
    Copy
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    /// Absolute value for reals, modulus for complex numbers.
    fn modulus(self) -> f64;
    fn is_finite(self) -> bool;
    /// Principal square root, `None` when it does not exist in the field.
    fn principal_sqrt(self) -> Option<Self>;
    /// Real part for complex numbers, the value itself for reals.
    fn real_part(self) -> f64;

    fn is_zero(self) -> bool {
        self == Self::zero()
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn principal_sqrt(self) -> Option<Self> {
        (self >= 0.0).then(|| self.sqrt())
    }
    fn real_part(self) -> f64 {
        self
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn is_finite(self) -> bool {
        Complex64::is_finite(self)
    }
    fn principal_sqrt(self) -> Option<Self> {
        Some(self.sqrt())
    }
    fn real_part(self) -> f64 {
        self.re
    }
}
