//! Sweeps over the asymmetry angle, input phase and pulse error, trade-off
//! reporting, CSV output and the self-verification suite.

mod csv_io;
mod report;
mod verify;

pub use csv_io::{format_sig, read_csv, read_records, write_csv, write_records, write_tradeoff, CSV_HEADER};
pub use report::{tradeoff_report, FrontierStatus, TradeoffReport, TradeoffRow, FRONTIER_TOL};
pub use verify::{run_verification, Check, VerificationReport};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::cloner::{self, check_alpha, CloneParams, FidelityPair};
use crate::error::{invalid, Error, Result};
use crate::pulsesim::{self, SpinSystem, CALIBRATED_THERMAL_RATIO, DEFAULT_J_HZ};
use crate::qlinalg::{BlochVector, DensityMatrix, Qubit};
use crate::Scalar;

/// Overlap with the equatorial input read off transverse Bloch components:
/// `(1 + cos(phi) x + sin(phi) y) / 2`.
pub fn fidelity_from_bloch<T: Scalar>(phi: T, x: T, y: T) -> T {
    let (s, c) = phi.sin_cos();
    (T::one() + c * x + s * y) * T::half()
}

/// Which simulator produced a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    Ideal,
    Pulse,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Ideal => "ideal",
            Source::Pulse => "pulse",
        })
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ideal" => Ok(Source::Ideal),
            "pulse" => Ok(Source::Pulse),
            other => Err(invalid(format!("unknown record source {other:?}"))),
        }
    }
}

/// One `(alpha, phi, source, epsilon)` point with its measured outputs.
///
/// Fidelities are stored unclamped, as computed from the transverse Bloch
/// components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRecord<T> {
    pub alpha: T,
    pub phi: T,
    pub source: Source,
    pub epsilon: T,
    pub x_a: T,
    pub y_a: T,
    pub x_b: T,
    pub y_b: T,
    pub f_a: T,
    pub f_b: T,
}

impl<T: Scalar> SweepRecord<T> {
    fn from_bloch(alpha: T, phi: T, source: Source, epsilon: T, a: BlochVector<T>, b: BlochVector<T>) -> Self {
        Self {
            alpha,
            phi,
            source,
            epsilon,
            x_a: a.x,
            y_a: a.y,
            x_b: b.x,
            y_b: b.y,
            f_a: fidelity_from_bloch(phi, a.x, a.y),
            f_b: fidelity_from_bloch(phi, b.x, b.y),
        }
    }

    pub fn fidelities(&self) -> FidelityPair<T> {
        FidelityPair::new(self.f_a, self.f_b)
    }
}

/// Grid and physical parameters of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig<T> {
    pub alpha_grid: Vec<T>,
    pub phi_set: Vec<T>,
    pub epsilon: T,
    pub j_coupling: T,
    pub thermal_ratio: T,
}

pub const DEFAULT_ALPHA_POINTS: usize = 17;

/// `n` uniformly spaced angles covering `[0, pi]` inclusive.
pub fn uniform_alphas<T: Scalar>(n: usize) -> Result<Vec<T>> {
    match n {
        0 => Err(invalid("alpha grid needs at least one point")),
        1 => Ok(vec![T::zero()]),
        _ => {
            let last = T::from_usize(n - 1).expect("grid size fits scalar");
            Ok((0..n)
                .map(|k| {
                    // pin the final point to pi exactly
                    if k == n - 1 {
                        T::PI()
                    } else {
                        T::PI() * T::from_usize(k).expect("grid index fits scalar") / last
                    }
                })
                .collect())
        }
    }
}

/// The four input phases `n pi / 2`, `n = 0..3`.
pub fn default_phis<T: Scalar>() -> Vec<T> {
    (0..4).map(|n| T::FRAC_PI_2() * T::from_usize(n).expect("small")).collect()
}

impl<T: Scalar> Default for SweepConfig<T> {
    fn default() -> Self {
        Self {
            alpha_grid: uniform_alphas(DEFAULT_ALPHA_POINTS).expect("non-empty grid"),
            phi_set: default_phis(),
            epsilon: T::zero(),
            j_coupling: T::lit(DEFAULT_J_HZ),
            thermal_ratio: T::lit(CALIBRATED_THERMAL_RATIO),
        }
    }
}

impl<T: Scalar> SweepConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if self.alpha_grid.is_empty() || self.phi_set.is_empty() {
            return Err(invalid("alpha grid and phi set must be non-empty"));
        }
        for &alpha in &self.alpha_grid {
            check_alpha(alpha)?;
        }
        if self.phi_set.iter().any(|phi| !phi.is_finite()) {
            return Err(invalid("phases must be finite"));
        }
        if !(self.epsilon.is_finite() && self.epsilon > -T::one() && self.epsilon < T::one()) {
            return Err(invalid(format!("epsilon must lie in (-1, 1), got {}", self.epsilon)));
        }
        SpinSystem::new(self.j_coupling, self.thermal_ratio)?;
        Ok(())
    }

    fn points(&self) -> Vec<(T, T)> {
        self.alpha_grid.iter().flat_map(|&alpha| self.phi_set.iter().map(move |&phi| (alpha, phi))).collect()
    }
}

/// Gate-level sweep: exact cloning unitary, exact partial traces.
pub fn sweep_ideal<T: Scalar>(config: &SweepConfig<T>) -> Result<Vec<SweepRecord<T>>> {
    config.validate()?;
    config
        .points()
        .into_par_iter()
        .map(|(alpha, phi)| {
            let out = cloner::clone_state(&CloneParams::new(alpha, phi)?)?;
            Ok(SweepRecord::from_bloch(
                alpha,
                phi,
                Source::Ideal,
                T::zero(),
                out.rho_a.bloch_vector()?,
                out.rho_b.bloch_vector()?,
            ))
        })
        .collect()
}

/// Pulse-level sweep reproducing the NMR protocol.
///
/// Pseudopure preparation, rotation of qubit `a` onto the equator at `phi`,
/// then the two controlled-gate sequences with every pulse angle scaled by
/// `1 + epsilon`. Transverse components are divided by the transverse
/// magnitude of qubit `a` right after the input rotation, the reference
/// signal of the pseudopure input.
pub fn sweep_pulse<T: Scalar>(config: &SweepConfig<T>) -> Result<Vec<SweepRecord<T>>> {
    config.validate()?;
    let system = SpinSystem::new(config.j_coupling, config.thermal_ratio)?;
    let pseudopure = pulsesim::run_sequence(
        &system,
        &pulsesim::pseudopure_prep(&system)?,
        &pulsesim::thermal_state(&system),
        T::zero(),
    )?;
    let u2 = pulsesim::sequence_u2(&system)?;
    config
        .points()
        .into_par_iter()
        .map(|(alpha, phi)| {
            let input = pulsesim::run_sequence(&system, &pulsesim::input_state_prep(phi)?, &pseudopure, T::zero())?;
            let reference = input.partial_trace(Qubit::A)?.bloch_vector()?;
            let scale = (reference.x * reference.x + reference.y * reference.y).sqrt();
            if scale <= T::algebraic_tol() {
                return Err(invalid("prepared input carries no transverse signal"));
            }
            let after_u1 =
                pulsesim::run_sequence(&system, &pulsesim::sequence_u1(&system, alpha)?, &input, config.epsilon)?;
            let output = pulsesim::run_sequence(&system, &u2, &after_u1, config.epsilon)?;
            let readout = |rho: &DensityMatrix<T>, qubit| -> Result<BlochVector<T>> {
                let r = rho.partial_trace(qubit)?.bloch_vector()?;
                Ok(BlochVector { x: r.x / scale, y: r.y / scale, z: r.z / scale })
            };
            Ok(SweepRecord::from_bloch(
                alpha,
                phi,
                Source::Pulse,
                config.epsilon,
                readout(&output, Qubit::A)?,
                readout(&output, Qubit::B)?,
            ))
        })
        .collect()
}
