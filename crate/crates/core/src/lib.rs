//! Two-qubit simulator for the optimal asymmetric 1 -> 2 phase-covariant
//! cloning machine.
//!
//! The machine is modelled at three levels that cross-check one another:
//!
//! * [`cloner`]: the ideal cloning unitary, its two-gate circuit, reduced
//!   output states and closed-form fidelities;
//! * [`geomgate`]: the single-qubit geometric-phase gate built from cyclic
//!   states on the Bloch sphere;
//! * [`pulsesim`]: an NMR pulse-sequence interpreter for a J-coupled spin
//!   pair, including pseudopure preparation and the controlled-gate sequences.
//!
//! [`harness`] drives parameter sweeps, trade-off reports and CSV output.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`); the
//! `*64` aliases below are the double-precision instantiations used by the
//! harness and CLI.

pub mod cloner;
mod error;
pub mod geomgate;
pub mod harness;
pub mod pulsesim;
pub mod qlinalg;
mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type ComplexMatrix64 = qlinalg::ComplexMatrix<f64>;
pub type StateVector64 = qlinalg::StateVector<f64>;
pub type DensityMatrix64 = qlinalg::DensityMatrix<f64>;
pub type BlochVector64 = qlinalg::BlochVector<f64>;
pub type CloneParams64 = cloner::CloneParams<f64>;
pub type FidelityPair64 = cloner::FidelityPair<f64>;
pub type GeomGateParams64 = geomgate::GeomGateParams<f64>;
pub type SpinSystem64 = pulsesim::SpinSystem<f64>;
pub type PulseSequence64 = pulsesim::PulseSequence<f64>;
pub type SweepRecord64 = harness::SweepRecord<f64>;
pub type SweepConfig64 = harness::SweepConfig<f64>;

pub type ComplexMatrix32 = qlinalg::ComplexMatrix<f32>;
pub type DensityMatrix32 = qlinalg::DensityMatrix<f32>;
pub type FidelityPair32 = cloner::FidelityPair<f32>;
