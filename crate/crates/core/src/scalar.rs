//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real floating point scalar: `f32` or `f64`.
///
/// The associated tolerances are the precision-dependent thresholds used by
/// validation, eigen-solvers, and series truncation. They are chosen for the
/// working precision so that the same generic code is usable with both types.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Tolerance for Hermiticity / unit-trace / affine-component checks.
    fn validation_tol() -> Self;
    /// Off-diagonal Frobenius norm at which cyclic Jacobi stops.
    fn jacobi_tol() -> Self;
    /// Taylor term norm below which a series is truncated.
    fn series_tol() -> Self;

    /// Lossless-enough conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    #[inline]
    fn sqrt2() -> Self {
        Self::SQRT_2()
    }
}

impl Real for f64 {
    fn validation_tol() -> Self {
        1e-12
    }
    fn jacobi_tol() -> Self {
        1e-13
    }
    fn series_tol() -> Self {
        1e-16
    }
}

impl Real for f32 {
    fn validation_tol() -> Self {
        1e-5
    }
    fn jacobi_tol() -> Self {
        1e-6
    }
    fn series_tol() -> Self {
        1e-8
    }
}
