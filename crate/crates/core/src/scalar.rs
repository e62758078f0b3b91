//! The two arithmetic modes.
//!
//! Every grid function is generic over a [`Scalar`]: either [`Rat`]
//! (exact rational arithmetic; kernels, Walsh values, Lebesgue
//! constants) or `f64` (norm computations). The mode is part of the
//! type, so mixing modes is a compile-time error rather than a runtime
//! one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar. All dyadic-grid integrals of rational step
/// functions stay inside this type.
pub type Rat = BigRational;

/// Build a rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Common interface of the two arithmetic modes.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Whether arithmetic in this mode is exact. Checks on exact
    /// scalars use `==`; float checks use a relative tolerance.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Division by 2^k, exact in both modes.
    fn div_pow2(&self, k: u32) -> Self;
    /// Exact division; the divisor must be nonzero.
    fn div(&self, rhs: &Self) -> Self;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;

    /// Mode-appropriate equality: exact for [`Rat`], relative `tol`
    /// for floats.
    fn close_to(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            let a = self.to_f64();
            let b = other.to_f64();
            (a - b).abs() <= tol * 1.0f64.max(a.abs()).max(b.abs())
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn div_pow2(&self, k: u32) -> Self {
        self / (1u64 << k) as f64
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn div_pow2(&self, k: u32) -> Self {
        self / BigRational::from_integer(BigInt::from(1u8) << k)
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}
