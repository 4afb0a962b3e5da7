use std::ops::Mul;

use num_complex::Complex;
use num_traits::{One, Zero};

use super::{Qubit, StateVector, Tensor};
use crate::error::{invalid, Result};
use crate::Scalar;

/// Square complex matrix of dimension 2 or 4, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 4 {
        Ok(())
    } else {
        Err(invalid(format!("dimension must be 2 or 4, got {dim}")))
    }
}

impl<T: Scalar> ComplexMatrix<T> {
    /// Builds a matrix from row-major entries, rejecting bad sizes and non-finite values.
    pub fn new(dim: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(invalid(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(invalid("matrix entries must be finite"));
        }
        Ok(Self { dim, entries })
    }

    pub(crate) fn from_entries_unchecked(dim: usize, entries: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        Self { dim, entries }
    }

    pub fn from_rows2(rows: [[Complex<T>; 2]; 2]) -> Self {
        Self::from_entries_unchecked(2, rows.iter().flatten().copied().collect())
    }

    pub fn from_rows4(rows: [[Complex<T>; 4]; 4]) -> Self {
        Self::from_entries_unchecked(4, rows.iter().flatten().copied().collect())
    }

    /// Real-valued 4x4 matrix, convenient for permutation-like gates.
    pub fn from_real_rows4(rows: [[T; 4]; 4]) -> Self {
        Self::from_entries_unchecked(4, rows.iter().flatten().map(|&x| Complex::new(x, T::zero())).collect())
    }

    pub fn identity(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self::from_fn(dim, |i, j| if i == j { Complex::one() } else { Complex::zero() }))
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self::from_fn(dim, |_, _| Complex::zero()))
    }

    pub(crate) fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex<T>) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i))
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self::from_entries_unchecked(self.dim, self.entries.iter().map(|&z| z * factor).collect())
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).map(|i| self.get(i, i)).fold(Complex::zero(), |acc, z| acc + z)
    }

    pub fn determinant(&self) -> Complex<T> {
        determinant(&self.entries, self.dim)
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(invalid(format!("cannot multiply {0}x{0} by {1}x{1}", self.dim, rhs.dim)));
        }
        Ok(self.matmul_unchecked(rhs))
    }

    pub(crate) fn matmul_unchecked(&self, rhs: &Self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |i, j| (0..n).fold(Complex::zero(), |acc, k| acc + self.get(i, k) * rhs.get(k, j)))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(invalid("cannot add matrices of different dimension"));
        }
        Ok(Self::from_entries_unchecked(
            self.dim,
            self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| a + b).collect(),
        ))
    }

    /// `self * psi`.
    pub fn apply(&self, psi: &StateVector<T>) -> Result<StateVector<T>> {
        if psi.dim() != self.dim {
            return Err(invalid(format!("cannot apply {0}x{0} operator to a {1}-dim state", self.dim, psi.dim())));
        }
        let amps = psi.amplitudes();
        let out = (0..self.dim)
            .map(|i| (0..self.dim).fold(Complex::zero(), |acc, k| acc + self.get(i, k) * amps[k]))
            .collect();
        StateVector::new(out)
    }

    /// `self * rho * self^dagger` as a raw matrix.
    pub(crate) fn conjugate(&self, rho: &Self) -> Self {
        self.matmul_unchecked(rho).matmul_unchecked(&self.adjoint())
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "dimension mismatch in max_abs_diff");
        self.entries.iter().zip(&other.entries).map(|(&a, &b)| (a - b).norm()).fold(T::zero(), T::max)
    }

    /// Max-norm of `U^dagger U - I`.
    pub fn unitarity_error(&self) -> T {
        let product = self.adjoint().matmul_unchecked(self);
        let identity = Self::from_fn(self.dim, |i, j| if i == j { Complex::one() } else { Complex::zero() });
        product.max_abs_diff(&identity)
    }

    pub fn is_unitary(&self) -> bool {
        self.unitarity_error() <= T::algebraic_tol()
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    /// Embeds a single-qubit operator acting on `qubit` into the two-qubit space.
    pub fn on_qubit(qubit: Qubit, op: &Self) -> Result<Self> {
        if op.dim != 2 {
            return Err(invalid("single-qubit operator must be 2x2"));
        }
        let id = Self::identity(2)?;
        match qubit {
            Qubit::A => op.tensor(&id),
            Qubit::B => id.tensor(op),
        }
    }

    /// Two-qubit gate applying `op` to the other qubit when `control` is `|1>`.
    pub fn controlled(control: Qubit, op: &Self) -> Result<Self> {
        if op.dim != 2 {
            return Err(invalid("controlled operator must be 2x2"));
        }
        let zero = Complex::zero();
        let one = Complex::one();
        let p0 = Self::from_rows2([[one, zero], [zero, zero]]);
        let p1 = Self::from_rows2([[zero, zero], [zero, one]]);
        let id = Self::identity(2)?;
        match control {
            Qubit::A => p0.tensor(&id)?.add(&p1.tensor(op)?),
            Qubit::B => id.tensor(&p0)?.add(&op.tensor(&p1)?),
        }
    }

    /// The 2x2 block acting on the target qubit while `control` holds `value`.
    pub fn control_block(&self, control: Qubit, value: usize) -> Result<Self> {
        if self.dim != 4 || value > 1 {
            return Err(invalid("control blocks are defined for 4x4 operators and values 0/1"));
        }
        let index = |t: usize| match control {
            Qubit::A => 2 * value + t,
            Qubit::B => 2 * t + value,
        };
        Ok(Self::from_fn(2, |i, j| self.get(index(i), index(j))))
    }

    /// Largest modulus among entries coupling the two control subspaces.
    pub fn off_control_leakage(&self, control: Qubit) -> T {
        let bit = |k: usize| match control {
            Qubit::A => k >> 1,
            Qubit::B => k & 1,
        };
        let mut worst = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if bit(i) != bit(j) {
                    worst = worst.max(self.get(i, j).norm());
                }
            }
        }
        worst
    }
}

impl<T: Scalar> Tensor for ComplexMatrix<T> {
    fn tensor(&self, other: &Self) -> Result<Self> {
        if self.dim != 2 || other.dim != 2 {
            return Err(invalid(format!(
                "tensor expects two 2x2 operators, got {0}x{0} and {1}x{1}",
                self.dim, other.dim
            )));
        }
        Ok(Self::from_fn(4, |i, j| self.get(i / 2, j / 2) * other.get(i % 2, j % 2)))
    }
}

impl<T: Scalar> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        self.matmul_unchecked(rhs)
    }
}

fn determinant<T: Scalar>(m: &[Complex<T>], n: usize) -> Complex<T> {
    if n == 1 {
        return m[0];
    }
    // cofactor expansion along the first row; n <= 4
    let mut det = Complex::zero();
    for col in 0..n {
        let minor: Vec<Complex<T>> =
            (1..n).flat_map(|r| (0..n).filter(move |&c| c != col).map(move |c| m[r * n + c])).collect();
        let term = m[col] * determinant(&minor, n - 1);
        det = if col % 2 == 0 { det + term } else { det - term };
    }
    det
}

/// Global-phase-invariant distance `1 - |Tr(U^dagger V)| / dim`.
///
/// Zero exactly when `U = e^{i theta} V`; one when the operators are
/// trace-orthogonal. Both arguments must be unitary and of equal dimension.
pub fn unitary_distance<T: Scalar>(u: &ComplexMatrix<T>, v: &ComplexMatrix<T>) -> Result<T> {
    if u.dim != v.dim {
        return Err(invalid(format!("unitary_distance dimension mismatch: {} vs {}", u.dim, v.dim)));
    }
    if !u.is_unitary() || !v.is_unitary() {
        return Err(invalid("unitary_distance requires unitary operands"));
    }
    let overlap = u.adjoint().matmul_unchecked(v).trace().norm();
    let dim = T::from_usize(u.dim).expect("small dimension");
    Ok((T::one() - overlap / dim).max(T::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::gates;

    type M = ComplexMatrix<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(M::new(3, vec![c(0.0, 0.0); 9]).is_err());
        assert!(M::new(2, vec![c(0.0, 0.0); 3]).is_err());
        assert!(M::new(2, vec![c(f64::NAN, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).is_err());
    }

    #[test]
    fn identity_tensor_identity() {
        let i2 = M::identity(2).unwrap();
        assert_eq!(i2.tensor(&i2).unwrap(), M::identity(4).unwrap());
    }

    #[test]
    fn tensor_rejects_dim4() {
        let i2 = M::identity(2).unwrap();
        let i4 = M::identity(4).unwrap();
        assert!(i4.tensor(&i2).is_err());
    }

    #[test]
    fn distance_examples() {
        let u = gates::rotation_y(0.7);
        assert!(unitary_distance(&u, &u).unwrap() < 1e-15);
        let phased = u.scale(Complex::from_polar(1.0, std::f64::consts::PI / 3.0));
        assert!(unitary_distance(&u, &phased).unwrap() < 1e-15);
        let d = unitary_distance(&M::identity(2).unwrap(), &gates::pauli_x()).unwrap();
        assert!((d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn distance_rejects_mismatch_and_non_unitary() {
        assert!(unitary_distance(&M::identity(2).unwrap(), &M::identity(4).unwrap()).is_err());
        let bad = M::identity(2).unwrap().scale(c(2.0, 0.0));
        assert!(unitary_distance(&bad, &bad).is_err());
    }

    #[test]
    fn controlled_on_b_permutes_expected_states() {
        let cx = M::controlled(Qubit::B, &gates::pauli_x()).unwrap();
        // |01> -> |11>, |11> -> |01>, control-0 states fixed
        assert_eq!(cx.get(3, 1), c(1.0, 0.0));
        assert_eq!(cx.get(1, 3), c(1.0, 0.0));
        assert_eq!(cx.get(0, 0), c(1.0, 0.0));
        assert_eq!(cx.get(2, 2), c(1.0, 0.0));
        assert_eq!(cx.control_block(Qubit::B, 1).unwrap(), gates::pauli_x());
        assert_eq!(cx.off_control_leakage(Qubit::B), 0.0);
    }

    #[test]
    fn determinant_of_cnot_is_minus_one() {
        let cx = M::controlled(Qubit::A, &gates::pauli_x()).unwrap();
        assert!((cx.determinant() - c(-1.0, 0.0)).norm() < 1e-15);
    }
}
