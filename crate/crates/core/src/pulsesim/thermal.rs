use num_complex::Complex;
use num_traits::Zero;

use super::{pseudopure_prep, run_sequence, SpinSystem};
use crate::error::{invalid, Result};
use crate::qlinalg::{ComplexMatrix, DensityMatrix};
use crate::Scalar;

/// Polarization ratio of qubit `b` to qubit `a` for which the pseudopure
/// preparation equalizes the three populations other than `|00>`.
///
/// Found by [`calibrate_thermal_ratio`]; it coincides with the gyromagnetic
/// ratio of a 1H / 13C pair.
pub const CALIBRATED_THERMAL_RATIO: f64 = 4.0;

/// High-temperature equilibrium `I/4 + kappa (I_z^a + r I_z^b)` with
/// `kappa = 0.1 / (1 + r)`.
pub fn thermal_state<T: Scalar>(system: &SpinSystem<T>) -> DensityMatrix<T> {
    let kappa = T::lit(0.1) / (T::one() + system.thermal_ratio());
    thermal_state_with_scale(system, kappa).expect("default scale keeps the state positive")
}

/// Thermal deviation state with an explicit scale `kappa`.
pub fn thermal_state_with_scale<T: Scalar>(system: &SpinSystem<T>, kappa: T) -> Result<DensityMatrix<T>> {
    let spin = |bit: usize| if bit == 0 { T::half() } else { -T::half() };
    let quarter = T::lit(0.25);
    let ratio = system.thermal_ratio();
    let populations: Vec<T> = (0..4).map(|k| quarter + kappa * (spin(k >> 1) + ratio * spin(k & 1))).collect();
    let matrix =
        ComplexMatrix::from_fn(
            4,
            |i, j| {
                if i == j {
                    Complex::new(populations[i], T::zero())
                } else {
                    Complex::zero()
                }
            },
        );
    DensityMatrix::new(matrix)
}

/// Excess population of `|00>` over the mean of the other three.
pub fn pseudopure_polarization<T: Scalar>(rho: &DensityMatrix<T>) -> T {
    let p = rho.populations();
    p[0] - (p[1] + p[2] + p[3]) / T::lit(3.0)
}

fn population_imbalance<T: Scalar>(j_coupling: T, ratio: T) -> Result<T> {
    let system = SpinSystem::new(j_coupling, ratio)?;
    let out = run_sequence(&system, &pseudopure_prep(&system)?, &thermal_state(&system), T::zero())?;
    let p = out.populations();
    Ok(p[1] - p[2])
}

const SCAN_POINTS: usize = 200;
const BISECTION_STEPS: usize = 200;

/// Polarization ratios in `[lo, hi]` for which the pseudopure preparation
/// yields equal `|01>` and `|10>` populations.
///
/// Scans a log-spaced grid for sign changes and bisects each bracket; the
/// `|10>` and `|11>` populations are equal for every ratio, so each root
/// equalizes all three.
pub fn calibrate_thermal_ratio<T: Scalar>(j_coupling: T, lo: T, hi: T) -> Result<Vec<T>> {
    if !(lo > T::zero() && hi > lo && hi.is_finite()) {
        return Err(invalid("calibration bracket must satisfy 0 < lo < hi"));
    }
    let step = (hi / lo).ln() / T::from_usize(SCAN_POINTS).expect("small count");
    let grid: Vec<T> = (0..=SCAN_POINTS).map(|k| lo * (step * T::from_usize(k).expect("small count")).exp()).collect();
    let values = grid.iter().map(|&r| population_imbalance(j_coupling, r)).collect::<Result<Vec<T>>>()?;

    let mut roots = Vec::new();
    for k in 0..SCAN_POINTS {
        let (mut a, mut b) = (grid[k], grid[k + 1]);
        let (mut fa, fb) = (values[k], values[k + 1]);
        if fa == T::zero() {
            roots.push(a);
            continue;
        }
        if fa.signum() == fb.signum() {
            continue;
        }
        for _ in 0..BISECTION_STEPS {
            let mid = (a + b) * T::half();
            let fm = population_imbalance(j_coupling, mid)?;
            if fm == T::zero() || (b - a) <= T::epsilon() * mid {
                a = mid;
                b = mid;
                break;
            }
            if fm.signum() == fa.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        roots.push((a + b) * T::half());
    }
    Ok(roots)
}
