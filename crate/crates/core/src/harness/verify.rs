use std::f64::consts::{FRAC_PI_2, PI};

use super::{sweep_ideal, sweep_pulse, tradeoff_report, uniform_alphas, FrontierStatus, SweepConfig};
use crate::cloner::{circuit_unitary, cloning_unitary, theoretical_fidelities, universal_pair};
use crate::error::Result;
use crate::geomgate::{cyclic_states, geometric_unitary, loop_propagator, GeomGateParams};
use crate::pulsesim::{
    blockwise_distance, pseudopure_polarization, pseudopure_prep, run_sequence, sequence_propagator, sequence_u1,
    sequence_u2, thermal_state, u1_target, u2_target, SpinSystem,
};
use crate::qlinalg::{ComplexMatrix, Qubit};

/// Outcome of one self-check.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn bounded(name: &'static str, worst: f64, limit: f64) -> Check {
    Check { name, passed: worst <= limit, detail: format!("max error {worst:.3e} (limit {limit:.0e})") }
}

fn max_over<I: IntoIterator<Item = Result<f64>>>(values: I) -> Result<f64> {
    values.into_iter().try_fold(0.0f64, |acc, v| Ok(acc.max(v?)))
}

/// Runs the invariant suite with the default spin system and sweep grid.
pub fn run_verification() -> Result<VerificationReport> {
    let system = SpinSystem::<f64>::default();
    let dense = uniform_alphas::<f64>(101)?;
    let grid20 = uniform_alphas::<f64>(20)?;
    let mut checks = Vec::new();

    let worst = max_over(dense.iter().map(|&a| Ok(circuit_unitary(a)?.max_abs_diff(&cloning_unitary(a)?))))?;
    checks.push(bounded("circuit equals cloning unitary", worst, 1e-12));

    let worst = max_over(grid20.iter().map(|&a| {
        let (s, c) = (a / 2.0).sin_cos();
        let printed = ComplexMatrix::from_real_rows4([[c, s, 0.0, 0.0], [-s, c, 0.0, 0.0], [0.0; 4], [0.0; 4]])
            .control_block(Qubit::A, 0)?;
        Ok(loop_propagator(a)?.max_abs_diff(&printed))
    }))?;
    checks.push(bounded("geometric loop propagator", worst, 1e-12));

    let worst = max_over((0..25).map(|k| {
        let k = k as f64;
        let params = GeomGateParams::new(0.37 * k - 4.0, PI * (k / 24.0), 0.91 * k)?;
        let u = geometric_unitary(&params);
        let (plus, minus) = cyclic_states(params.chi(), params.azimuth())?;
        let e_plus = plus.scale_phase(params.gamma());
        let e_minus = minus.scale_phase(-params.gamma());
        Ok(u.apply(&plus)?.max_abs_diff(&e_plus).max(u.apply(&minus)?.max_abs_diff(&e_minus)))
    }))?;
    checks.push(bounded("cyclic-state eigenrelation", worst, 1e-12));

    let worst = max_over(grid20.iter().map(|&a| {
        let u = sequence_propagator(&system, &sequence_u1(&system, a)?, 0.0)?;
        Ok(blockwise_distance(&u, &u1_target(a)?, Qubit::A)?.max())
    }))?;
    checks.push(bounded("U1 pulse sequence equals controlled loop", worst, 1e-10));

    let u2 = sequence_propagator(&system, &sequence_u2(&system)?, 0.0)?;
    let worst = blockwise_distance(&u2, &u2_target()?, Qubit::B)?.max();
    checks.push(bounded("U2 pulse sequence equals controlled R_y(-pi)", worst, 1e-10));

    let pp = run_sequence(&system, &pseudopure_prep(&system)?, &thermal_state(&system), 0.0)?;
    let p = pp.populations();
    let spread = p[1..].iter().fold(0.0f64, |m, &x| m.max((x - p[1]).abs()));
    checks.push(Check {
        name: "pseudopure preparation",
        passed: spread <= 1e-9 && pp.max_coherence() == 0.0 && pseudopure_polarization(&pp) > 0.0,
        detail: format!("populations {p:?}, spread {spread:.3e}"),
    });

    let config = SweepConfig::<f64>::default();
    let ideal = sweep_ideal(&config)?;
    let pulse = sweep_pulse(&config)?;
    let worst =
        ideal.iter().zip(&pulse).map(|(i, p)| (i.f_a - p.f_a).abs().max((i.f_b - p.f_b).abs())).fold(0.0, f64::max);
    checks.push(bounded("pulse pipeline reproduces ideal fidelities", worst, 1e-9));

    let worst = max_over(ideal.iter().map(|r| {
        let t = theoretical_fidelities(r.alpha)?;
        Ok((t.f_a - r.f_a).abs().max((t.f_b - r.f_b).abs()))
    }))?;
    checks.push(bounded("ideal sweep matches closed-form fidelities", worst, 1e-12));

    let report = tradeoff_report(&ideal)?;
    checks.push(bounded("trade-off circle", report.max_abs_residual, 1e-12));

    let symmetric = universal_pair(1.0 / 3f64.sqrt())?;
    let optimum = theoretical_fidelities(FRAC_PI_2)?;
    let frontier_ok = ideal.iter().zip(&report.rows).all(|(r, row)| {
        let endpoint = r.alpha == 0.0 || r.alpha == PI;
        row.frontier == if endpoint { FrontierStatus::Touching } else { FrontierStatus::Outside }
    });
    checks.push(Check {
        name: "universal frontier domination",
        passed: (symmetric.f_a - 5.0 / 6.0).abs() <= 1e-12 && optimum.f_a > symmetric.f_a && frontier_ok,
        detail: format!("universal symmetric {:.6}, phase-covariant symmetric {:.6}", symmetric.f_a, optimum.f_a),
    });

    Ok(VerificationReport { checks })
}
