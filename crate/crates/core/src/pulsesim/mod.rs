//! NMR pulse-level simulation of a J-coupled two-spin register.
//!
//! Free evolution follows the weak-coupling Hamiltonian
//! `H = w_a I_z^a + w_b I_z^b + 2 pi J I_z^a I_z^b`, expressed in per-qubit
//! rotating frames so that only the coupling and the frame offsets remain.
//! Pulses are ideal, instantaneous and selective; field gradients are modelled
//! as complete dephasing in the computational basis.

mod propagate;
mod sequences;
mod thermal;

pub use propagate::{free_propagator, gradient_crush, pulse_propagator, run_sequence, sequence_propagator};
pub use sequences::{
    blockwise_distance, input_state_prep, pseudopure_prep, sequence_u1, sequence_u2, u1_target, u2_target,
    BlockwiseDistance,
};
pub use thermal::{
    calibrate_thermal_ratio, pseudopure_polarization, thermal_state, thermal_state_with_scale, CALIBRATED_THERMAL_RATIO,
};

use crate::error::{invalid, Result};
use crate::qlinalg::Qubit;
use crate::Scalar;

/// Scalar coupling of the spin pair, in Hz.
pub const DEFAULT_J_HZ: f64 = 214.5;

/// Coupling constant and thermal polarization ratio of the spin pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinSystem<T> {
    j_coupling: T,
    thermal_ratio: T,
}

impl<T: Scalar> SpinSystem<T> {
    /// `thermal_ratio` is the equilibrium polarization of qubit `b` relative to qubit `a`.
    pub fn new(j_coupling: T, thermal_ratio: T) -> Result<Self> {
        if !(j_coupling.is_finite() && j_coupling > T::zero()) {
            return Err(invalid(format!("J coupling must be positive, got {j_coupling}")));
        }
        if !(thermal_ratio.is_finite() && thermal_ratio > T::zero()) {
            return Err(invalid(format!("thermal ratio must be positive, got {thermal_ratio}")));
        }
        Ok(Self { j_coupling, thermal_ratio })
    }

    pub fn j_coupling(&self) -> T {
        self.j_coupling
    }

    pub fn thermal_ratio(&self) -> T {
        self.thermal_ratio
    }
}

impl<T: Scalar> Default for SpinSystem<T> {
    fn default() -> Self {
        Self { j_coupling: T::lit(DEFAULT_J_HZ), thermal_ratio: T::lit(CALIBRATED_THERMAL_RATIO) }
    }
}

/// Reference frequencies of the two rotating frames, as offsets in Hz from
/// each qubit's Larmor frequency.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotatingFrame<T> {
    pub offset_a: T,
    pub offset_b: T,
}

impl<T: Scalar> RotatingFrame<T> {
    pub fn new(offset_a: T, offset_b: T) -> Result<Self> {
        if !(offset_a.is_finite() && offset_b.is_finite()) {
            return Err(invalid("frame offsets must be finite"));
        }
        Ok(Self { offset_a, offset_b })
    }

    /// Both frames on resonance: only the coupling evolves.
    pub fn on_resonance() -> Self {
        Self { offset_a: T::zero(), offset_b: T::zero() }
    }

    /// Frame of `target` shifted by `+J/2`, so that `target` is static while
    /// the other qubit is `|0>` and precesses at `-2 pi J I_z` while it is `|1>`.
    pub fn controlled(target: Qubit, system: &SpinSystem<T>) -> Self {
        let shift = system.j_coupling * T::half();
        match target {
            Qubit::A => Self { offset_a: shift, offset_b: T::zero() },
            Qubit::B => Self { offset_a: T::zero(), offset_b: shift },
        }
    }
}

/// Phase of an rf pulse, i.e. the equatorial rotation axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Axis<T> {
    X,
    Y,
    MinusX,
    MinusY,
    /// Axis `(cos az, sin az, 0)`.
    Phase(T),
}

impl<T: Scalar> Axis<T> {
    pub fn azimuth(&self) -> T {
        match *self {
            Axis::X => T::zero(),
            Axis::Y => T::FRAC_PI_2(),
            Axis::MinusX => T::PI(),
            Axis::MinusY => T::lit(1.5) * T::PI(),
            Axis::Phase(az) => az,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PulseEvent<T> {
    /// Hard pulse rotating `qubit` by `angle` about `axis`.
    Pulse { qubit: Qubit, axis: Axis<T>, angle: T },
    /// Free evolution for `duration` seconds.
    Delay { duration: T },
    /// Pulsed field gradient.
    Gradient,
}

impl<T: Scalar> PulseEvent<T> {
    pub fn pulse(qubit: Qubit, axis: Axis<T>, angle: T) -> Self {
        PulseEvent::Pulse { qubit, axis, angle }
    }

    pub fn delay(duration: T) -> Self {
        PulseEvent::Delay { duration }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            PulseEvent::Pulse { axis, angle, .. } => {
                if !angle.is_finite() || !axis.azimuth().is_finite() {
                    return Err(invalid("pulse angle and phase must be finite"));
                }
            }
            PulseEvent::Delay { duration } => {
                if !(duration.is_finite() && duration >= T::zero()) {
                    return Err(invalid(format!("delay must be non-negative, got {duration}")));
                }
            }
            PulseEvent::Gradient => {}
        }
        Ok(())
    }
}

/// Time-ordered events together with the rotating frame they are written in.
#[derive(Clone, Debug, PartialEq)]
pub struct PulseSequence<T> {
    events: Vec<PulseEvent<T>>,
    frame: RotatingFrame<T>,
}

impl<T: Scalar> PulseSequence<T> {
    pub fn new(events: Vec<PulseEvent<T>>, frame: RotatingFrame<T>) -> Result<Self> {
        for event in &events {
            event.validate()?;
        }
        Ok(Self { events, frame })
    }

    pub fn events(&self) -> &[PulseEvent<T>] {
        &self.events
    }

    pub fn frame(&self) -> RotatingFrame<T> {
        self.frame
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn pulse_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, PulseEvent::Pulse { .. })).count()
    }

    pub fn delay_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, PulseEvent::Delay { .. })).count()
    }

    pub fn gradient_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, PulseEvent::Gradient)).count()
    }

    /// Total free-evolution time in seconds.
    pub fn total_delay(&self) -> T {
        self.events.iter().fold(T::zero(), |acc, e| match e {
            PulseEvent::Delay { duration } => acc + *duration,
            _ => acc,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_validation() {
        assert!(SpinSystem::new(0.0f64, 1.0).is_err());
        assert!(SpinSystem::new(200.0f64, -1.0).is_err());
        assert!(SpinSystem::new(f64::NAN, 1.0).is_err());
        let s = SpinSystem::<f64>::default();
        assert_eq!(s.j_coupling(), 214.5);
        assert_eq!(s.thermal_ratio(), CALIBRATED_THERMAL_RATIO);
    }

    #[test]
    fn sequence_rejects_bad_events() {
        let frame = RotatingFrame::<f64>::on_resonance();
        assert!(PulseSequence::new(vec![PulseEvent::delay(-1e-3)], frame).is_err());
        assert!(PulseSequence::new(vec![PulseEvent::pulse(Qubit::A, Axis::X, f64::NAN)], frame).is_err());
        assert!(PulseSequence::new(vec![PulseEvent::pulse(Qubit::A, Axis::Phase(f64::INFINITY), 1.0)], frame).is_err());
        assert!(RotatingFrame::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn controlled_frame_offsets() {
        let s = SpinSystem::new(100.0f64, 1.0).unwrap();
        assert_eq!(RotatingFrame::controlled(Qubit::B, &s), RotatingFrame { offset_a: 0.0, offset_b: 50.0 });
        assert_eq!(RotatingFrame::controlled(Qubit::A, &s), RotatingFrame { offset_a: 50.0, offset_b: 0.0 });
    }
}
