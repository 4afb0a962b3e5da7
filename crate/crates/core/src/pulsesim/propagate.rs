use num_complex::Complex;
use num_traits::Zero;

use super::{Axis, PulseEvent, PulseSequence, RotatingFrame, SpinSystem};
use crate::error::{invalid, Result};
use crate::qlinalg::{gates, ComplexMatrix, DensityMatrix, Qubit};
use crate::Scalar;

/// Free-evolution propagator `exp(-i H t)` in the given rotating frame.
///
/// In the frame the Hamiltonian is diagonal,
/// `H = -2 pi (off_a I_z^a + off_b I_z^b) + 2 pi J I_z^a I_z^b`,
/// so the propagator is a diagonal of phases.
pub fn free_propagator<T: Scalar>(system: &SpinSystem<T>, frame: &RotatingFrame<T>, t: T) -> Result<ComplexMatrix<T>> {
    if !(t.is_finite() && t >= T::zero()) {
        return Err(invalid(format!("evolution time must be non-negative, got {t}")));
    }
    let two_pi = T::TAU();
    let spin = |bit: usize| if bit == 0 { T::half() } else { -T::half() };
    let energies: Vec<T> = (0..4)
        .map(|k| {
            let (ma, mb) = (spin(k >> 1), spin(k & 1));
            two_pi * (system.j_coupling() * ma * mb - frame.offset_a * ma - frame.offset_b * mb)
        })
        .collect();
    Ok(ComplexMatrix::from_fn(4, |i, j| {
        if i == j {
            Complex::from_polar(T::one(), -energies[i] * t)
        } else {
            Complex::zero()
        }
    }))
}

/// Ideal pulse `exp(-i angle sigma_axis / 2)` on `qubit`, identity on the other.
pub fn pulse_propagator<T: Scalar>(qubit: Qubit, axis: Axis<T>, angle: T) -> ComplexMatrix<T> {
    ComplexMatrix::on_qubit(qubit, &gates::rotation_equatorial(axis.azimuth(), angle))
        .expect("2x2 rotation embeds in two-qubit space")
}

/// Field-gradient crush: removes every off-diagonal element.
pub fn gradient_crush<T: Scalar>(rho: &DensityMatrix<T>) -> DensityMatrix<T> {
    rho.dephased()
}

fn check_error<T: Scalar>(error: T) -> Result<()> {
    if error.is_finite() && error > -T::one() && error < T::one() {
        Ok(())
    } else {
        Err(invalid(format!("pulse-angle error must lie in (-1, 1), got {error}")))
    }
}

fn event_propagator<T: Scalar>(
    system: &SpinSystem<T>,
    frame: &RotatingFrame<T>,
    event: &PulseEvent<T>,
    error: T,
) -> Result<Option<ComplexMatrix<T>>> {
    Ok(match *event {
        PulseEvent::Pulse { qubit, axis, angle } => Some(pulse_propagator(qubit, axis, angle * (T::one() + error))),
        PulseEvent::Delay { duration } => Some(free_propagator(system, frame, duration)?),
        PulseEvent::Gradient => None,
    })
}

/// Applies `seq` to `rho0`, scaling every pulse angle by `1 + error`.
pub fn run_sequence<T: Scalar>(
    system: &SpinSystem<T>,
    seq: &PulseSequence<T>,
    rho0: &DensityMatrix<T>,
    error: T,
) -> Result<DensityMatrix<T>> {
    check_error(error)?;
    if rho0.dim() != 4 {
        return Err(invalid("pulse sequences act on two-qubit states"));
    }
    let frame = seq.frame();
    seq.events().iter().try_fold(rho0.clone(), |rho, event| match event_propagator(system, &frame, event, error)? {
        Some(u) => rho.evolve(&u),
        None => Ok(gradient_crush(&rho)),
    })
}

/// Total unitary of a gradient-free sequence, first event applied first.
pub fn sequence_propagator<T: Scalar>(
    system: &SpinSystem<T>,
    seq: &PulseSequence<T>,
    error: T,
) -> Result<ComplexMatrix<T>> {
    check_error(error)?;
    let frame = seq.frame();
    seq.events().iter().try_fold(ComplexMatrix::identity(4)?, |total, event| {
        match event_propagator(system, &frame, event, error)? {
            Some(u) => u.matmul(&total),
            None => Err(invalid("a sequence containing a gradient has no unitary propagator")),
        }
    })
}
