use num_complex::Complex;
use num_traits::Zero;

use super::matrix::check_dim;
use super::{gates, hermitian_eigenvalues, ComplexMatrix, Qubit, StateVector, Tensor};
use crate::error::{invalid, Result};
use crate::Scalar;

/// Hermitian, unit-trace, positive semidefinite operator of dimension 2 or 4.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix<T> {
    matrix: ComplexMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Validates Hermiticity and unit trace to the algebraic tolerance and
    /// every eigenvalue against the eigenvalue tolerance.
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        check_dim(matrix.dim())?;
        let tol = T::algebraic_tol();
        if !matrix.is_hermitian(tol) {
            return Err(invalid("density matrix is not Hermitian"));
        }
        let trace = matrix.trace();
        if (trace - Complex::new(T::one(), T::zero())).norm() > tol {
            return Err(invalid(format!("density matrix trace {trace} differs from 1")));
        }
        let lowest = hermitian_eigenvalues(&matrix)[0];
        if lowest < -T::eigen_tol() {
            return Err(invalid(format!("density matrix has negative eigenvalue {lowest}")));
        }
        Ok(Self { matrix })
    }

    pub fn from_pure(psi: &StateVector<T>) -> Self {
        Self { matrix: psi.projector() }
    }

    /// Maximally mixed state `I / dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        let inv = T::one() / T::from_usize(dim).expect("small dimension");
        Ok(Self { matrix: ComplexMatrix::identity(dim)?.scale(Complex::new(inv, T::zero())) })
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.matrix.get(row, col)
    }

    pub fn trace(&self) -> Complex<T> {
        self.matrix.trace()
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> T {
        self.matrix.matmul_unchecked(&self.matrix).trace().re
    }

    pub fn eigenvalues(&self) -> Vec<T> {
        hermitian_eigenvalues(&self.matrix)
    }

    /// Diagonal entries, i.e. computational-basis populations.
    pub fn populations(&self) -> Vec<T> {
        (0..self.dim()).map(|i| self.matrix.get(i, i).re).collect()
    }

    /// Largest modulus of an off-diagonal entry.
    pub fn max_coherence(&self) -> T {
        let n = self.dim();
        let mut worst = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    worst = worst.max(self.matrix.get(i, j).norm());
                }
            }
        }
        worst
    }

    /// `U rho U^dagger`.
    pub fn evolve(&self, unitary: &ComplexMatrix<T>) -> Result<Self> {
        if unitary.dim() != self.dim() {
            return Err(invalid("propagator and state dimensions differ"));
        }
        Ok(Self { matrix: unitary.conjugate(&self.matrix) })
    }

    /// Keeps only the diagonal in the computational basis.
    pub fn dephased(&self) -> Self {
        let m = &self.matrix;
        Self { matrix: ComplexMatrix::from_fn(self.dim(), |i, j| if i == j { m.get(i, i) } else { Complex::zero() }) }
    }

    pub fn partial_trace(&self, keep: Qubit) -> Result<Self> {
        if self.dim() != 4 {
            return Err(invalid("partial trace requires a two-qubit state"));
        }
        let m = &self.matrix;
        let reduced = match keep {
            Qubit::A => ComplexMatrix::from_fn(2, |i, j| m.get(2 * i, 2 * j) + m.get(2 * i + 1, 2 * j + 1)),
            Qubit::B => ComplexMatrix::from_fn(2, |i, j| m.get(i, j) + m.get(2 + i, 2 + j)),
        };
        Ok(Self { matrix: reduced })
    }

    pub fn bloch_vector(&self) -> Result<BlochVector<T>> {
        if self.dim() != 2 {
            return Err(invalid("Bloch vector requires a single-qubit state"));
        }
        let lower = self.matrix.get(1, 0);
        Ok(BlochVector {
            x: T::two() * lower.re,
            y: T::two() * lower.im,
            z: self.matrix.get(0, 0).re - self.matrix.get(1, 1).re,
        })
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.matrix.max_abs_diff(&other.matrix)
    }
}

impl<T: Scalar> Tensor for DensityMatrix<T> {
    fn tensor(&self, other: &Self) -> Result<Self> {
        Ok(Self { matrix: self.matrix.tensor(&other.matrix)? })
    }
}

/// Real Bloch vector `r` with `rho = (1 + r . sigma) / 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> BlochVector<T> {
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        let r = Self { x, y, z };
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(invalid("Bloch components must be finite"));
        }
        if r.norm_sqr() > T::one() + T::eigen_tol() {
            return Err(invalid(format!("Bloch vector length {} exceeds 1", r.norm_sqr().sqrt())));
        }
        Ok(r)
    }

    pub fn norm_sqr(&self) -> T {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn to_density(&self) -> DensityMatrix<T> {
        let half = Complex::new(T::half(), T::zero());
        let sum = gates::identity()
            .add(&gates::pauli_x().scale(Complex::new(self.x, T::zero())))
            .and_then(|m| m.add(&gates::pauli_y().scale(Complex::new(self.y, T::zero()))))
            .and_then(|m| m.add(&gates::pauli_z().scale(Complex::new(self.z, T::zero()))))
            .expect("2x2 operands");
        DensityMatrix { matrix: sum.scale(half) }
    }
}

/// Overlap `<psi|rho|psi> = Tr(rho |psi><psi|)`, clamped to `[0, 1]`.
pub fn overlap_fidelity<T: Scalar>(rho: &DensityMatrix<T>, psi: &StateVector<T>) -> Result<T> {
    if rho.dim() != psi.dim() {
        return Err(invalid("state and density matrix dimensions differ"));
    }
    let amps = psi.amplitudes();
    let n = psi.dim();
    let mut acc: Complex<T> = Complex::zero();
    for i in 0..n {
        for j in 0..n {
            acc = acc + amps[i].conj() * rho.get(i, j) * amps[j];
        }
    }
    Ok(acc.re.max(T::zero()).min(T::one()))
}
