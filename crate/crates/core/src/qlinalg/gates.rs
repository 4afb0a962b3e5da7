//! Standard single-qubit operators, all using the `exp(-i theta sigma / 2)`
//! rotation convention.

use num_complex::Complex;

use super::ComplexMatrix;
use crate::Scalar;

fn re<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

pub fn identity<T: Scalar>() -> ComplexMatrix<T> {
    ComplexMatrix::from_rows2([[re(T::one()), re(T::zero())], [re(T::zero()), re(T::one())]])
}

pub fn pauli_x<T: Scalar>() -> ComplexMatrix<T> {
    ComplexMatrix::from_rows2([[re(T::zero()), re(T::one())], [re(T::one()), re(T::zero())]])
}

pub fn pauli_y<T: Scalar>() -> ComplexMatrix<T> {
    let i = Complex::new(T::zero(), T::one());
    ComplexMatrix::from_rows2([[re(T::zero()), -i], [i, re(T::zero())]])
}

pub fn pauli_z<T: Scalar>() -> ComplexMatrix<T> {
    ComplexMatrix::from_rows2([[re(T::one()), re(T::zero())], [re(T::zero()), re(-T::one())]])
}

/// Rotation by `angle` about the equatorial axis `(cos azimuth, sin azimuth, 0)`.
pub fn rotation_equatorial<T: Scalar>(azimuth: T, angle: T) -> ComplexMatrix<T> {
    let half = angle * T::half();
    let (s, c) = half.sin_cos();
    let minus_i = Complex::new(T::zero(), -T::one());
    let lower = minus_i * Complex::from_polar(s, azimuth);
    let upper = minus_i * Complex::from_polar(s, -azimuth);
    ComplexMatrix::from_rows2([[re(c), upper], [lower, re(c)]])
}

pub fn rotation_x<T: Scalar>(angle: T) -> ComplexMatrix<T> {
    rotation_equatorial(T::zero(), angle)
}

/// `exp(-i angle sigma_y / 2) = [[cos, -sin], [sin, cos]]` of the half angle.
pub fn rotation_y<T: Scalar>(angle: T) -> ComplexMatrix<T> {
    let (s, c) = (angle * T::half()).sin_cos();
    ComplexMatrix::from_rows2([[re(c), re(-s)], [re(s), re(c)]])
}

pub fn rotation_z<T: Scalar>(angle: T) -> ComplexMatrix<T> {
    let half = angle * T::half();
    ComplexMatrix::from_rows2([
        [Complex::from_polar(T::one(), -half), re(T::zero())],
        [re(T::zero()), Complex::from_polar(T::one(), half)],
    ])
}
