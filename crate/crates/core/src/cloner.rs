//! Gate-level asymmetric phase-covariant cloning machine.
//!
//! Qubit `a` carries the equatorial input `(|0> + e^{i phi}|1>)/sqrt(2)` and
//! qubit `b` starts blank in `|0>`. A single angle `alpha` in `[0, pi]` sets
//! how the phase information is split between the two outputs.

use num_complex::Complex;

use crate::error::{invalid, Result};
use crate::qlinalg::{gates, overlap_fidelity, ComplexMatrix, DensityMatrix, Qubit, StateVector, Tensor};
use crate::Scalar;

/// Asymmetry angle and input phase of one cloning run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CloneParams<T> {
    alpha: T,
    phi: T,
}

impl<T: Scalar> CloneParams<T> {
    /// Rejects `alpha` outside `[0, pi]`; wraps `phi` into `[0, 2 pi)`.
    pub fn new(alpha: T, phi: T) -> Result<Self> {
        check_alpha(alpha)?;
        if !phi.is_finite() {
            return Err(invalid("phi must be finite"));
        }
        Ok(Self { alpha, phi: normalize_angle(phi) })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn phi(&self) -> T {
        self.phi
    }
}

pub(crate) fn check_alpha<T: Scalar>(alpha: T) -> Result<()> {
    if alpha.is_finite() && alpha >= T::zero() && alpha <= T::PI() {
        Ok(())
    } else {
        Err(invalid(format!("alpha must lie in [0, pi], got {alpha}")))
    }
}

/// Wraps an angle into `[0, 2 pi)`.
pub fn normalize_angle<T: Scalar>(angle: T) -> T {
    let two_pi = T::TAU();
    let wrapped = angle % two_pi;
    let wrapped = if wrapped < T::zero() { wrapped + two_pi } else { wrapped };
    // `x % 2pi + 2pi` can round up to exactly 2pi
    if wrapped >= two_pi {
        T::zero()
    } else {
        wrapped
    }
}

/// Fidelities of the original (`f_a`) and the copy (`f_b`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FidelityPair<T> {
    pub f_a: T,
    pub f_b: T,
}

impl<T: Scalar> FidelityPair<T> {
    pub fn new(f_a: T, f_b: T) -> Self {
        Self { f_a, f_b }
    }
}

/// Equatorial input state `(|0> + e^{i phi}|1>)/sqrt(2)`.
pub fn input_state<T: Scalar>(phi: T) -> StateVector<T> {
    let h = T::FRAC_1_SQRT_2();
    StateVector::new(vec![Complex::new(h, T::zero()), Complex::from_polar(h, phi)])
        .expect("equatorial state is normalized")
}

/// The cloning unitary in the basis `|00>, |01>, |10>, |11>`.
///
/// `|00> -> |00>` and `|10> -> cos(alpha/2)|10> + sin(alpha/2)|01>`; the
/// remaining columns complete it to a real orthogonal matrix with
/// `|01> -> -|11>`.
pub fn cloning_unitary<T: Scalar>(alpha: T) -> Result<ComplexMatrix<T>> {
    check_alpha(alpha)?;
    let (s, c) = (alpha * T::half()).sin_cos();
    let o = T::zero();
    let l = T::one();
    Ok(ComplexMatrix::from_real_rows4([[l, o, o, o], [o, o, s, c], [o, o, c, -s], [o, -l, o, o]]))
}

/// Two-gate circuit: controlled-`R_y(alpha)` from `a` onto `b`, then
/// controlled-`R_y(-pi)` from `b` onto `a`.
pub fn circuit_unitary<T: Scalar>(alpha: T) -> Result<ComplexMatrix<T>> {
    check_alpha(alpha)?;
    let first = ComplexMatrix::controlled(Qubit::A, &gates::rotation_y(alpha))?;
    let second = ComplexMatrix::controlled(Qubit::B, &gates::rotation_y(-T::PI()))?;
    second.matmul(&first)
}

/// Joint and reduced output states of one cloning run.
#[derive(Clone, Debug)]
pub struct CloneOutput<T> {
    pub rho_ab: DensityMatrix<T>,
    pub rho_a: DensityMatrix<T>,
    pub rho_b: DensityMatrix<T>,
}

/// Runs the cloning unitary on `|psi_in> (x) |0>`.
pub fn clone_state<T: Scalar>(params: &CloneParams<T>) -> Result<CloneOutput<T>> {
    let blank = StateVector::basis(2, 0)?;
    let joint_in = input_state(params.phi).tensor(&blank)?;
    let joint_out = cloning_unitary(params.alpha)?.apply(&joint_in)?;
    let rho_ab = DensityMatrix::from_pure(&joint_out);
    let rho_a = rho_ab.partial_trace(Qubit::A)?;
    let rho_b = rho_ab.partial_trace(Qubit::B)?;
    Ok(CloneOutput { rho_ab, rho_a, rho_b })
}

/// Overlap fidelities of both outputs with the input, computed from the states.
pub fn simulated_fidelities<T: Scalar>(params: &CloneParams<T>) -> Result<FidelityPair<T>> {
    let out = clone_state(params)?;
    let psi = input_state(params.phi);
    Ok(FidelityPair::new(overlap_fidelity(&out.rho_a, &psi)?, overlap_fidelity(&out.rho_b, &psi)?))
}

/// Closed-form fidelities `((1 + cos(alpha/2))/2, (1 + sin(alpha/2))/2)`.
pub fn theoretical_fidelities<T: Scalar>(alpha: T) -> Result<FidelityPair<T>> {
    check_alpha(alpha)?;
    let (s, c) = (alpha * T::half()).sin_cos();
    Ok(FidelityPair::new((T::one() + c) * T::half(), (T::one() + s) * T::half()))
}

/// Signed distance from the quarter circle centred at `(1/2, 1/2)` with radius `1/2`:
/// `(f_a - 1/2)^2 + (f_b - 1/2)^2 - 1/4`.
pub fn tradeoff_residual<T: Scalar>(pair: &FidelityPair<T>) -> T {
    let h = T::half();
    let da = pair.f_a - h;
    let db = pair.f_b - h;
    da * da + db * db - h * h
}

/// Point of the optimal universal asymmetric 1 -> 2 frontier for amplitude `a`.
///
/// The frontier is `F_a = 1 - b^2/2`, `F_b = 1 - a^2/2` with
/// `a^2 + b^2 + ab = 1` and `a, b` in `[0, 1]`; `b` is the non-negative root.
pub fn universal_pair<T: Scalar>(a: T) -> Result<FidelityPair<T>> {
    if !(a >= T::zero() && a <= T::one()) {
        return Err(invalid(format!("universal frontier amplitude must lie in [0, 1], got {a}")));
    }
    let b = partner_amplitude(a);
    Ok(FidelityPair::new(T::one() - b * b * T::half(), T::one() - a * a * T::half()))
}

fn partner_amplitude<T: Scalar>(a: T) -> T {
    let disc = (T::lit(4.0) - T::lit(3.0) * a * a).max(T::zero());
    ((disc.sqrt() - a) * T::half()).max(T::zero())
}

/// Universal frontier sampled on `n_points` uniform values of `a` in `[0, 1]`,
/// running from `(1/2, 1)` to `(1, 1/2)`.
pub fn universal_bound_curve<T: Scalar>(n_points: usize) -> Result<Vec<FidelityPair<T>>> {
    if n_points < 2 {
        return Err(invalid(format!("universal curve needs at least 2 points, got {n_points}")));
    }
    let last = T::from_usize(n_points - 1).expect("point count fits scalar");
    (0..n_points).map(|k| universal_pair(T::from_usize(k).expect("index fits scalar") / last)).collect()
}

/// Largest copy fidelity a universal cloner allows given original fidelity `f_a`.
///
/// `f_a` is clamped to `[1/2, 1]`, the range the frontier spans.
pub fn universal_partner_fidelity<T: Scalar>(f_a: T) -> T {
    let f_a = f_a.max(T::half()).min(T::one());
    let b = (T::two() * (T::one() - f_a)).max(T::zero()).sqrt().min(T::one());
    let a = partner_amplitude(b);
    T::one() - a * a * T::half()
}

/// `f_b` minus the universal frontier's copy fidelity at the same `f_a`.
/// Positive values lie outside the universal region.
pub fn universal_gap<T: Scalar>(pair: &FidelityPair<T>) -> T {
    pair.f_b - universal_partner_fidelity(pair.f_a)
}
