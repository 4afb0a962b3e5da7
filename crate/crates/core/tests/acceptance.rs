//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p phasecov --test acceptance -- --nocapture`.

use std::f64::consts::{FRAC_PI_2, PI};

use phasecov::cloner::{
    circuit_unitary, cloning_unitary, simulated_fidelities, theoretical_fidelities, universal_pair, CloneParams,
};
use phasecov::geomgate::{cyclic_states, geometric_unitary, loop_azimuth, loop_chi, loop_phase, GeomGateParams};
use phasecov::harness::{
    fidelity_from_bloch, sweep_ideal, sweep_pulse, tradeoff_report, uniform_alphas, FrontierStatus, SweepConfig,
};
use phasecov::pulsesim::{
    blockwise_distance, pseudopure_prep, run_sequence, sequence_propagator, sequence_u1, sequence_u2, thermal_state,
    u1_target, u2_target, SpinSystem,
};
use phasecov::qlinalg::{ComplexMatrix, Qubit};
use phasecov::Result;

/// splitmix64, enough for reproducible sample points
struct Rng(u64);

impl Rng {
    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^= z >> 31;
        lo + (hi - lo) * ((z >> 11) as f64 / (1u64 << 53) as f64)
    }
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn within(worst: f64, tol: f64) -> Outcome {
    Outcome { passed: worst <= tol, detail: format!("max deviation {worst:.3e} (tol {tol:.0e})") }
}

fn symmetric_optimum() -> Result<Outcome> {
    let f = theoretical_fidelities(FRAC_PI_2)?;
    let expect = 0.5 + 2f64.sqrt() / 4.0;
    let worst = (f.f_a - expect).abs().max((f.f_b - expect).abs()).max((f.f_a - 0.853553).abs());
    Ok(within(worst, 5e-6))
}

fn asymmetric_spots() -> Result<Outcome> {
    let f = theoretical_fidelities(2.0 * PI / 3.0)?;
    let spot = (f.f_a - 0.750).abs().max((f.f_b - 0.933).abs());
    let (lo, hi) = (theoretical_fidelities(0.0)?, theoretical_fidelities(PI)?);
    let ends = [(lo.f_a, 1.0), (lo.f_b, 0.5), (hi.f_a, 0.5), (hi.f_b, 1.0)]
        .iter()
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    Ok(Outcome {
        passed: spot <= 5e-4 && ends <= 1e-12,
        detail: format!("2pi/3 -> ({:.4}, {:.4}), spot {spot:.2e}, endpoints {ends:.2e}", f.f_a, f.f_b),
    })
}

fn circuit_identity() -> Result<Outcome> {
    let mut rng = Rng(0x5eed);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let a = rng.uniform(0.0, PI);
        worst = worst.max(circuit_unitary(a)?.max_abs_diff(&cloning_unitary(a)?));
    }
    Ok(within(worst, 1e-12))
}

fn geometric_gate() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for a in uniform_alphas::<f64>(20)? {
        let (s, c) = (a / 2.0).sin_cos();
        let printed = ComplexMatrix::from_rows2([[c.into(), s.into()], [(-s).into(), c.into()]]);
        let u = geometric_unitary(&GeomGateParams::new(loop_phase(a)?, loop_chi(), loop_azimuth())?);
        worst = worst.max(u.max_abs_diff(&printed));
    }
    let mut rng = Rng(0xfeed);
    for _ in 0..100 {
        let params =
            GeomGateParams::new(rng.uniform(-2.0 * PI, 2.0 * PI), rng.uniform(0.0, PI), rng.uniform(0.0, 2.0 * PI))?;
        let u = geometric_unitary(&params);
        let (plus, minus) = cyclic_states(params.chi(), params.azimuth())?;
        worst = worst.max(u.apply(&plus)?.max_abs_diff(&plus.scale_phase(params.gamma())));
        worst = worst.max(u.apply(&minus)?.max_abs_diff(&minus.scale_phase(-params.gamma())));
    }
    Ok(within(worst, 1e-12))
}

fn pulse_gate_equivalence() -> Result<Outcome> {
    let system = SpinSystem::<f64>::default();
    let mut worst = 0.0f64;
    for a in uniform_alphas::<f64>(20)? {
        let u = sequence_propagator(&system, &sequence_u1(&system, a)?, 0.0)?;
        worst = worst.max(blockwise_distance(&u, &u1_target(a)?, Qubit::A)?.max());
    }
    let u = sequence_propagator(&system, &sequence_u2(&system)?, 0.0)?;
    worst = worst.max(blockwise_distance(&u, &u2_target()?, Qubit::B)?.max());
    Ok(within(worst, 1e-10))
}

fn end_to_end() -> Result<Outcome> {
    let records = sweep_pulse(&SweepConfig::<f64>::default())?;
    let mut worst = 0.0f64;
    for r in &records {
        let t = theoretical_fidelities(r.alpha)?;
        worst = worst.max((t.f_a - r.f_a).abs()).max((t.f_b - r.f_b).abs());
    }
    let mut out = within(worst, 1e-9);
    out.detail = format!("{} records, {}", records.len(), out.detail);
    Ok(out)
}

fn tradeoff_circle() -> Result<Outcome> {
    let records = sweep_ideal(&SweepConfig::<f64>::default())?;
    let worst =
        records.iter().map(|r| ((r.f_a - 0.5).powi(2) + (r.f_b - 0.5).powi(2) - 0.25).abs()).fold(0.0, f64::max);
    Ok(within(worst, 1e-12))
}

fn universal_domination() -> Result<Outcome> {
    // frontier points must satisfy a^2 + b^2 + ab = 1 with F_a = 1 - b^2/2, F_b = 1 - a^2/2
    let mut param_err = 0.0f64;
    for k in 0..=100 {
        let a = k as f64 / 100.0;
        let p = universal_pair(a)?;
        let b = (2.0 * (1.0 - p.f_a)).sqrt();
        param_err = param_err.max((a * a + b * b + a * b - 1.0).abs()).max((p.f_b - (1.0 - a * a / 2.0)).abs());
    }
    let sym = universal_pair(1.0 / 3f64.sqrt())?;
    let optimum = theoretical_fidelities(FRAC_PI_2)?;
    let records = sweep_ideal(&SweepConfig::<f64>::default())?;
    let report = tradeoff_report(&records)?;
    let misplaced = records
        .iter()
        .zip(&report.rows)
        .filter(|(r, row)| {
            let endpoint = r.alpha == 0.0 || r.alpha == PI;
            row.frontier != if endpoint { FrontierStatus::Touching } else { FrontierStatus::Outside }
        })
        .count();
    Ok(Outcome {
        passed: param_err <= 1e-12 && (sym.f_a - 5.0 / 6.0).abs() <= 1e-12 && optimum.f_a > sym.f_a && misplaced == 0,
        detail: format!(
            "universal symmetric {:.6} < {:.6}, parametrization err {param_err:.1e}, misplaced points {misplaced}",
            sym.f_a, optimum.f_a
        ),
    })
}

fn phase_covariance() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for a in uniform_alphas::<f64>(17)? {
        let pairs = (0..32)
            .map(|k| simulated_fidelities(&CloneParams::new(a, 2.0 * PI * k as f64 / 32.0)?))
            .collect::<Result<Vec<_>>>()?;
        let spread = |f: fn(&phasecov::cloner::FidelityPair<f64>) -> f64| {
            let (lo, hi) = pairs.iter().map(f).fold((f64::MAX, f64::MIN), |(l, h), x| (l.min(x), h.max(x)));
            hi - lo
        };
        worst = worst.max(spread(|p| p.f_a)).max(spread(|p| p.f_b));
    }
    Ok(within(worst, 1e-12))
}

fn pseudopure() -> Result<Outcome> {
    let system = SpinSystem::<f64>::default();
    let rho = run_sequence(&system, &pseudopure_prep(&system)?, &thermal_state(&system), 0.0)?;
    let p = rho.populations();
    let spread = p[1..].iter().fold(0.0f64, |m, &x| m.max((x - p[1]).abs()));
    Ok(Outcome {
        passed: rho.max_coherence() <= 1e-12 && spread <= 1e-9 && p[1..].iter().all(|&x| x < p[0]),
        detail: format!("populations {:.6?}, spread {spread:.2e}", p),
    })
}

fn experimental_regression() -> Result<Outcome> {
    let (f1, f2) = (fidelity_from_bloch(0.0f64, 0.667, 0.0), fidelity_from_bloch::<f64>(0.0, 0.682, 0.0));
    let worst = (f1 - 0.8335).abs().max((f2 - 0.841).abs());
    let mut out = within(worst, 5e-4);
    out.detail = format!("{f1:.4}, {f2:.4}; {}", out.detail);
    Ok(out)
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("symmetric optimum", symmetric_optimum),
        ("asymmetric spot checks", asymmetric_spots),
        ("circuit identity", circuit_identity),
        ("geometric gate", geometric_gate),
        ("pulse/gate equivalence", pulse_gate_equivalence),
        ("end-to-end pulse pipeline", end_to_end),
        ("trade-off circle", tradeoff_circle),
        ("universal-bound domination", universal_domination),
        ("phase covariance", phase_covariance),
        ("pseudopure populations", pseudopure),
        ("experimental-value regression", experimental_regression),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run().unwrap_or_else(|e| Outcome { passed: false, detail: format!("error: {e}") });
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2}. {name}: {}", i + 1, outcome.detail);
        if !outcome.passed {
            failed.push(*name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
