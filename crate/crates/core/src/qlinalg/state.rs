use num_complex::Complex;
use num_traits::{One, Zero};

use super::matrix::check_dim;
use super::{ComplexMatrix, Tensor};
use crate::error::{invalid, Result};
use crate::Scalar;

/// Normalized ket on a one- or two-qubit space.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// Wraps amplitudes, requiring unit Euclidean norm.
    pub fn new(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        check_dim(amplitudes.len())?;
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(invalid("state amplitudes must be finite"));
        }
        let norm_sqr = amplitudes.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr());
        if (norm_sqr.sqrt() - T::one()).abs() > T::algebraic_tol() {
            return Err(invalid(format!("state norm {norm_sqr} differs from 1")));
        }
        Ok(Self { amplitudes })
    }

    /// Normalizes arbitrary non-zero amplitudes.
    pub fn normalized(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let norm = amplitudes.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
        if norm <= T::zero() || !norm.is_finite() {
            return Err(invalid("cannot normalize a zero or non-finite vector"));
        }
        Self::new(amplitudes.into_iter().map(|z| z / norm).collect())
    }

    /// Computational basis ket `|index>`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        check_dim(dim)?;
        if index >= dim {
            return Err(invalid(format!("basis index {index} out of range for dim {dim}")));
        }
        Ok(Self { amplitudes: (0..dim).map(|k| if k == index { Complex::one() } else { Complex::zero() }).collect() })
    }

    /// Two-qubit basis ket `|a b>`.
    pub fn basis2(a: usize, b: usize) -> Result<Self> {
        if a > 1 || b > 1 {
            return Err(invalid("qubit values must be 0 or 1"));
        }
        Self::basis(4, 2 * a + b)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn get(&self, index: usize) -> Complex<T> {
        self.amplitudes[index]
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.dim() != other.dim() {
            return Err(invalid("inner product of states with different dimension"));
        }
        Ok(self.amplitudes.iter().zip(&other.amplitudes).fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b))
    }

    /// `|self><self|`.
    pub fn projector(&self) -> ComplexMatrix<T> {
        let amps = &self.amplitudes;
        ComplexMatrix::from_fn(self.dim(), |i, j| amps[i] * amps[j].conj())
    }

    pub fn scale_phase(&self, phase: T) -> Self {
        let factor = Complex::from_polar(T::one(), phase);
        Self { amplitudes: self.amplitudes.iter().map(|&z| z * factor).collect() }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in max_abs_diff");
        self.amplitudes.iter().zip(&other.amplitudes).map(|(&a, &b)| (a - b).norm()).fold(T::zero(), T::max)
    }
}

impl<T: Scalar> Tensor for StateVector<T> {
    fn tensor(&self, other: &Self) -> Result<Self> {
        if self.dim() != 2 || other.dim() != 2 {
            return Err(invalid(format!(
                "tensor expects two single-qubit states, got dims {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        let amplitudes = (0..4).map(|k| self.amplitudes[k / 2] * other.amplitudes[k % 2]).collect();
        Ok(Self { amplitudes })
    }
}
