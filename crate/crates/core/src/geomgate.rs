//! Single-qubit geometric-phase gates.
//!
//! A pair of orthogonal cyclic states `|psi+>`, `|psi->` at polar angle `chi`
//! and azimuth on the Bloch sphere picks up phases `e^{+i gamma}` and
//! `e^{-i gamma}` over one closed loop. The resulting propagator depends only
//! on `(gamma, chi, azimuth)`.

use num_complex::Complex;

use crate::cloner::{check_alpha, normalize_angle};
use crate::error::{invalid, Result};
use crate::qlinalg::{ComplexMatrix, StateVector};
use crate::Scalar;

/// Parameters of a cyclic evolution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeomGateParams<T> {
    gamma: T,
    chi: T,
    azimuth: T,
}

impl<T: Scalar> GeomGateParams<T> {
    /// `chi` must lie in `[0, pi]`; `azimuth` is wrapped into `[0, 2 pi)`.
    pub fn new(gamma: T, chi: T, azimuth: T) -> Result<Self> {
        if !gamma.is_finite() || !azimuth.is_finite() {
            return Err(invalid("geometric gate angles must be finite"));
        }
        check_chi(chi)?;
        Ok(Self { gamma, chi, azimuth: normalize_angle(azimuth) })
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn chi(&self) -> T {
        self.chi
    }

    pub fn azimuth(&self) -> T {
        self.azimuth
    }
}

fn check_chi<T: Scalar>(chi: T) -> Result<()> {
    if chi >= T::zero() && chi <= T::PI() {
        Ok(())
    } else {
        Err(invalid(format!("chi must lie in [0, pi], got {chi}")))
    }
}

/// `|psi+> = cos(chi/2)|0> + e^{i az} sin(chi/2)|1>` and
/// `|psi-> = sin(chi/2)|0> - e^{i az} cos(chi/2)|1>`.
pub fn cyclic_states<T: Scalar>(chi: T, azimuth: T) -> Result<(StateVector<T>, StateVector<T>)> {
    check_chi(chi)?;
    let (s, c) = (chi * T::half()).sin_cos();
    let zero = T::zero();
    let plus = StateVector::new(vec![Complex::new(c, zero), Complex::from_polar(s, azimuth)])?;
    let minus = StateVector::new(vec![Complex::new(s, zero), -Complex::from_polar(c, azimuth)])?;
    Ok((plus, minus))
}

/// Propagator `e^{i gamma}|psi+><psi+| + e^{-i gamma}|psi-><psi-|` in closed form.
pub fn geometric_unitary<T: Scalar>(params: &GeomGateParams<T>) -> ComplexMatrix<T> {
    let (s, c) = (params.chi * T::half()).sin_cos();
    let (s2, c2) = (s * s, c * c);
    let forward = Complex::from_polar(T::one(), params.gamma);
    let backward = forward.conj();
    let i = Complex::new(T::zero(), T::one());
    let off = params.gamma.sin() * params.chi.sin();
    ComplexMatrix::from_rows2([
        [forward * c2 + backward * s2, i * Complex::from_polar(off, -params.azimuth)],
        [i * Complex::from_polar(off, params.azimuth), forward * s2 + backward * c2],
    ])
}

/// Polar angle of the cyclic states used by the geodesic loop.
pub fn loop_chi<T: Scalar>() -> T {
    T::FRAC_PI_2()
}

/// Azimuth of the cyclic states used by the geodesic loop: `|psi+-> = (|0> +- i|1>)/sqrt(2)`.
pub fn loop_azimuth<T: Scalar>() -> T {
    T::FRAC_PI_2()
}

/// Phase `gamma` of the geodesic loop whose enclosed solid angle is `alpha`.
///
/// Returns `+alpha/2`, the sign under which the loop propagator is
/// `[[cos(alpha/2), sin(alpha/2)], [-sin(alpha/2), cos(alpha/2)]]`.
/// Traversing the loop the other way round gives `-alpha/2`; see
/// [`cloning_rotation`].
pub fn loop_phase<T: Scalar>(alpha: T) -> Result<T> {
    check_alpha(alpha)?;
    Ok(alpha * T::half())
}

/// Net propagator of the geodesic loop with solid angle `alpha`.
pub fn loop_propagator<T: Scalar>(alpha: T) -> Result<ComplexMatrix<T>> {
    let params = GeomGateParams::new(loop_phase(alpha)?, loop_chi(), loop_azimuth())?;
    Ok(geometric_unitary(&params))
}

/// The loop traversed with phase `-alpha/2`, equal to `R_y(alpha)`.
///
/// This is the orientation realized by the controlled pulse sequence and the
/// rotation the cloning circuit applies to the copy qubit.
pub fn cloning_rotation<T: Scalar>(alpha: T) -> Result<ComplexMatrix<T>> {
    let params = GeomGateParams::new(-loop_phase(alpha)?, loop_chi(), loop_azimuth())?;
    Ok(geometric_unitary(&params))
}
