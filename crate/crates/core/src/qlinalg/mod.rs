//! Dense complex linear algebra on one- and two-qubit Hilbert spaces.
//!
//! Two-qubit objects use the basis `|00>, |01>, |10>, |11>` where the first
//! symbol is qubit `a` (the original) and the second is qubit `b` (the blank
//! copy), so qubit `a` is the most significant index.

mod density;
mod eigen;
pub mod gates;
mod matrix;
mod state;

pub use density::{overlap_fidelity, BlochVector, DensityMatrix};
pub use eigen::hermitian_eigenvalues;
pub use matrix::{unitary_distance, ComplexMatrix};
pub use state::StateVector;

use crate::error::Result;

/// One of the two qubits of the register.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Qubit {
    /// The original qubit, most significant in the basis ordering.
    A,
    /// The blank (copy) qubit.
    B,
}

impl Qubit {
    pub fn other(self) -> Qubit {
        match self {
            Qubit::A => Qubit::B,
            Qubit::B => Qubit::A,
        }
    }
}

/// Kronecker product of two single-qubit objects of the same kind.
pub trait Tensor: Sized {
    fn tensor(&self, other: &Self) -> Result<Self>;
}

/// Free-function form of [`Tensor::tensor`]; `a` becomes the most significant factor.
pub fn tensor<K: Tensor>(a: &K, b: &K) -> Result<K> {
    a.tensor(b)
}

/// Reduced state of `keep` obtained by tracing out the other qubit.
pub fn partial_trace<T: crate::Scalar>(rho: &DensityMatrix<T>, keep: Qubit) -> Result<DensityMatrix<T>> {
    rho.partial_trace(keep)
}

/// Bloch vector `r_k = Tr(rho sigma_k)` of a single-qubit state.
pub fn bloch_vector<T: crate::Scalar>(rho: &DensityMatrix<T>) -> Result<BlochVector<T>> {
    rho.bloch_vector()
}
