use super::{Axis, PulseEvent, PulseSequence, RotatingFrame, SpinSystem};
use crate::cloner::check_alpha;
use crate::error::{invalid, Result};
use crate::geomgate::cloning_rotation;
use crate::qlinalg::{gates, ComplexMatrix, Qubit};
use crate::Scalar;

use PulseEvent::{Delay, Gradient};

fn pulse<T: Scalar>(qubit: Qubit, axis: Axis<T>, angle: T) -> PulseEvent<T> {
    PulseEvent::pulse(qubit, axis, angle)
}

/// Controlled geometric loop on qubit `b`, conditioned on qubit `a` being `|1>`.
///
/// Two J-evolution blocks conjugated by `y` pulses turn the conditional
/// z-precession into conditional x-rotations that tilt the path onto and
/// off the loop; the middle delay `alpha / (2 pi J)` sweeps the loop itself.
/// Written in the frame whose qubit-`b` reference is shifted by `+J/2`.
pub fn sequence_u1<T: Scalar>(system: &SpinSystem<T>, alpha: T) -> Result<PulseSequence<T>> {
    check_alpha(alpha)?;
    let j = system.j_coupling();
    let half_pi = T::FRAC_PI_2();
    let quarter = T::one() / (T::lit(4.0) * j);
    let b = Qubit::B;
    PulseSequence::new(
        vec![
            pulse(b, Axis::Y, half_pi),
            PulseEvent::delay(quarter),
            pulse(b, Axis::Y, -half_pi),
            pulse(b, Axis::X, -half_pi),
            PulseEvent::delay(alpha / (T::TAU() * j)),
            pulse(b, Axis::X, half_pi),
            pulse(b, Axis::Y, -alpha - half_pi),
            PulseEvent::delay(quarter),
            pulse(b, Axis::Y, alpha + half_pi),
        ],
        RotatingFrame::controlled(b, system),
    )
}

/// Controlled `R_y(-pi)` on qubit `a`, conditioned on qubit `b` being `|1>`,
/// in the frame whose qubit-`a` reference is shifted by `+J/2`.
pub fn sequence_u2<T: Scalar>(system: &SpinSystem<T>) -> Result<PulseSequence<T>> {
    let j = system.j_coupling();
    let half_pi = T::FRAC_PI_2();
    let quarter = T::one() / (T::lit(4.0) * j);
    let a = Qubit::A;
    PulseSequence::new(
        vec![
            pulse(a, Axis::Y, half_pi),
            PulseEvent::delay(quarter),
            pulse(a, Axis::Y, -half_pi),
            pulse(a, Axis::X, half_pi),
            PulseEvent::delay(T::one() / (T::two() * j)),
            pulse(a, Axis::X, -half_pi),
            pulse(a, Axis::Y, half_pi),
            PulseEvent::delay(quarter),
            pulse(a, Axis::Y, -half_pi),
        ],
        RotatingFrame::controlled(a, system),
    )
}

/// Spatial-averaging preparation of the pseudopure `|00>` state.
///
/// `R_x^b(pi/3) - G_z - R_x^b(pi/4) - 1/(2J) - R_{-y}^b(pi/4) - G_z`, with
/// both frames on resonance. Starting from the thermal state with
/// [`CALIBRATED_THERMAL_RATIO`](super::CALIBRATED_THERMAL_RATIO) the three
/// populations other than `|00>` come out equal.
pub fn pseudopure_prep<T: Scalar>(system: &SpinSystem<T>) -> Result<PulseSequence<T>> {
    let pi = T::PI();
    let b = Qubit::B;
    PulseSequence::new(
        vec![
            pulse(b, Axis::X, pi / T::lit(3.0)),
            Gradient,
            pulse(b, Axis::X, pi / T::lit(4.0)),
            Delay { duration: T::one() / (T::two() * system.j_coupling()) },
            pulse(b, Axis::MinusY, pi / T::lit(4.0)),
            Gradient,
        ],
        RotatingFrame::on_resonance(),
    )
}

/// Rotates qubit `a` from `|0>` onto the equator at azimuth `phi`.
///
/// A single `pi/2` pulse about the axis at azimuth `phi + pi/2` maps the
/// Bloch vector `(0, 0, 1)` to `(cos phi, sin phi, 0)`.
pub fn input_state_prep<T: Scalar>(phi: T) -> Result<PulseSequence<T>> {
    if !phi.is_finite() {
        return Err(invalid("input phase must be finite"));
    }
    PulseSequence::new(
        vec![pulse(Qubit::A, Axis::Phase(phi + T::FRAC_PI_2()), T::FRAC_PI_2())],
        RotatingFrame::on_resonance(),
    )
}

/// Gate realized by [`sequence_u1`]: identity while `a` is `|0>`, the
/// geometric loop `R_y(alpha)` on `b` while `a` is `|1>`.
pub fn u1_target<T: Scalar>(alpha: T) -> Result<ComplexMatrix<T>> {
    ComplexMatrix::controlled(Qubit::A, &cloning_rotation(alpha)?)
}

/// Gate realized by [`sequence_u2`]: controlled `R_y(-pi)` from `b` onto `a`.
pub fn u2_target<T: Scalar>() -> Result<ComplexMatrix<T>> {
    ComplexMatrix::controlled(Qubit::B, &gates::rotation_y(-T::PI()))
}

/// Distance between a propagator and a controlled-gate target, allowing an
/// independent global phase on each control subspace.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockwiseDistance<T> {
    /// Phase-invariant distance on the control-`|0>` block.
    pub block0: T,
    /// Phase-invariant distance on the control-`|1>` block.
    pub block1: T,
    /// Largest entry coupling the two control subspaces.
    pub leakage: T,
}

impl<T: Scalar> BlockwiseDistance<T> {
    pub fn max(&self) -> T {
        self.block0.max(self.block1).max(self.leakage)
    }
}

pub fn blockwise_distance<T: Scalar>(
    propagator: &ComplexMatrix<T>,
    target: &ComplexMatrix<T>,
    control: Qubit,
) -> Result<BlockwiseDistance<T>> {
    if propagator.dim() != 4 || target.dim() != 4 {
        return Err(invalid("blockwise distance needs two-qubit operators"));
    }
    let block = |value: usize| -> Result<T> {
        let u = propagator.control_block(control, value)?;
        let v = target.control_block(control, value)?;
        let overlap = u.adjoint().matmul(&v)?.trace().norm();
        Ok((T::one() - overlap * T::half()).max(T::zero()))
    };
    Ok(BlockwiseDistance {
        block0: block(0)?,
        block1: block(1)?,
        leakage: propagator.off_control_leakage(control).max(target.off_control_leakage(control)),
    })
}
