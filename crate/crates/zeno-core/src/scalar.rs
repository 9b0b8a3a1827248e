//! Floating-point scalar abstraction.
//!
//! Every numeric routine in this crate is generic over [`Scalar`], so the same
//! code runs in `f32` or `f64`. Concrete type aliases for the common `f64`
//! instantiation live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Rescale an `f64`-calibrated tolerance to this type's precision.
    ///
    /// For `f64` this returns the value unchanged; for `f32` it is widened by
    /// the ratio of the machine epsilons so that relative checks keep the same
    /// meaning.
    fn tol(base_f64: f64) -> Self {
        let ratio = Self::epsilon().to_f64().unwrap_or(f64::EPSILON) / f64::EPSILON;
        Self::from_f64(base_f64 * ratio).expect("tolerance must be representable")
    }

    fn from_f64_lossy(value: f64) -> Self {
        Self::from_f64(value).expect("value must be representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// `base^n` for an unsigned exponent, without truncating large `n` to `i32`.
pub fn pow_u64<T: Scalar>(base: T, n: u64) -> T {
    if n <= i32::MAX as u64 {
        base.powi(n as i32)
    } else {
        base.powf(T::from_f64_lossy(n as f64))
    }
}
