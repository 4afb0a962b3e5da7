//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point type the simulator can run on: `f32` or `f64`.
///
/// Each implementation carries the tolerances used when validating states and
/// operators, since a bound such as `1e-12` is meaningless in single precision.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Tolerance for algebraic identities (unitarity, trace, Hermiticity, norm).
    const ALGEBRAIC_TOL: f64;
    /// Lower bound accepted for density-matrix eigenvalues.
    const EIGEN_TOL: f64;

    /// Converts an `f64` literal into this scalar.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    fn algebraic_tol() -> Self {
        Self::lit(Self::ALGEBRAIC_TOL)
    }

    fn eigen_tol() -> Self {
        Self::lit(Self::EIGEN_TOL)
    }

    fn half() -> Self {
        Self::lit(0.5)
    }

    fn two() -> Self {
        Self::lit(2.0)
    }
}

impl Scalar for f64 {
    const ALGEBRAIC_TOL: f64 = 1e-12;
    const EIGEN_TOL: f64 = 1e-10;
}

impl Scalar for f32 {
    const ALGEBRAIC_TOL: f64 = 1e-5;
    const EIGEN_TOL: f64 = 1e-5;
}
