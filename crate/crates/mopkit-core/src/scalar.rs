//! Scalar field abstraction with two realizations: exact rationals with
//! arbitrary-precision integers, and complex double floats.
//!
//! Every algorithm in this crate is generic over [`Scalar`]. The exact
//! field is the primary one; the float field exists for quadrature-based
//! weights and for cross-checking exact results after demotion.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar (normalized fraction over big integers).
pub type Rat = BigRational;

/// Complex double-precision scalar.
pub type Cf64 = Complex64;

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Exact fields compare with `==` and pivot on the first nonzero
    /// entry; inexact fields pivot on the largest magnitude.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    /// `num / den`, with `den != 0`.
    fn from_fraction(num: i64, den: i64) -> Self;

    /// Modulus used for pivot selection and error measurement.
    fn magnitude(&self) -> f64;

    /// Equality up to `tol`: exact fields ignore `tol`, the float field
    /// uses `|a - b| <= tol * max(1, |a|, |b|)`.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;

    /// `e^self`, when the field supports it.
    fn try_exp(&self) -> Option<Self>;

    /// Complex embedding, used to demote exact data to the float field.
    fn to_complex(&self) -> Cf64;

    /// Value rendering for reports: `a/b` for rationals, decimal with 17
    /// significant digits for floats.
    fn render(&self) -> String;

    fn powi(&self, mut k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            k >>= 1;
        }
        acc
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn try_exp(&self) -> Option<Self> {
        None
    }

    fn to_complex(&self) -> Cf64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn render(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl Scalar for Cf64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let scale = 1f64.max(self.norm()).max(other.norm());
        (self - other).norm() <= tol * scale
    }

    fn try_exp(&self) -> Option<Self> {
        Some(self.exp())
    }

    fn to_complex(&self) -> Cf64 {
        *self
    }

    fn render(&self) -> String {
        if self.im == 0.0 {
            format!("{:.16e}", self.re)
        } else {
            format!("{:.16e}{:+.16e}i", self.re, self.im)
        }
    }
}

/// Signed abs for rationals, handy in tests.
pub fn rat_abs(v: &Rat) -> Rat {
    v.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_normalized() {
        let v = Rat::from_fraction(6, -4);
        assert_eq!(v.render(), "-3/2");
        assert!(v.denom() > &BigInt::from(0));
    }

    #[test]
    fn rational_equality_is_exact() {
        let a = Rat::from_fraction(1, 3);
        let b = Rat::from_fraction(2, 6);
        assert!(a.approx_eq(&b, 0.0));
        assert!(!a.approx_eq(&Rat::from_fraction(1, 4), 1.0));
    }

    #[test]
    fn float_relative_tolerance() {
        let a = Cf64::new(1.0e6, 0.0);
        let b = Cf64::new(1.0e6 + 1.0e-5, 0.0);
        assert!(a.approx_eq(&b, 1e-10));
        assert!(!a.approx_eq(&b, 1e-12));
    }

    #[test]
    fn float_rendering_keeps_seventeen_significant_digits() {
        let v = Cf64::new(std::f64::consts::PI, 0.0);
        assert_eq!(v.render(), "3.1415926535897931e0");
        let v = Cf64::new(0.5, -0.25);
        assert_eq!(v.render(), "5.0000000000000000e-1-2.5000000000000000e-1i");
    }

    #[test]
    fn power_by_squaring() {
        let v = Rat::from_fraction(2, 3);
        assert_eq!(v.powi(3), Rat::from_fraction(8, 27));
        assert_eq!(v.powi(0), Rat::one());
    }
}
