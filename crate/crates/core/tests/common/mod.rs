#![allow(dead_code)]

use num_complex::Complex64;
use phasecov::qlinalg::{ComplexMatrix, DensityMatrix, StateVector};
use phasecov::ComplexMatrix64;
use proptest::prelude::*;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Dense matrix exponential by scaling and squaring of a Taylor series.
/// Independent of every closed form used by the library.
pub fn expm(m: &ComplexMatrix64) -> ComplexMatrix64 {
    let norm: f64 = m.entries().iter().map(|z| z.norm()).sum();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = m.scale(c(0.5f64.powi(squarings as i32), 0.0));
    let mut result = ComplexMatrix::identity(m.dim()).unwrap();
    let mut term = ComplexMatrix::identity(m.dim()).unwrap();
    for k in 1..30 {
        term = (&term * &scaled).scale(c(1.0 / k as f64, 0.0));
        result = result.add(&term).unwrap();
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

pub fn pauli(k: usize) -> ComplexMatrix64 {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match k {
        0 => ComplexMatrix::from_rows2([[o, z], [z, o]]),
        1 => ComplexMatrix::from_rows2([[z, o], [o, z]]),
        2 => ComplexMatrix::from_rows2([[z, -i], [i, z]]),
        3 => ComplexMatrix::from_rows2([[o, z], [z, -o]]),
        _ => unreachable!(),
    }
}

/// Kronecker product written out independently of `Tensor`.
pub fn kron(a: &ComplexMatrix64, b: &ComplexMatrix64) -> ComplexMatrix64 {
    let mut entries = Vec::with_capacity(16);
    for i in 0..4 {
        for j in 0..4 {
            entries.push(a.get(i / 2, j / 2) * b.get(i % 2, j % 2));
        }
    }
    ComplexMatrix::new(4, entries).unwrap()
}

pub fn complex_entries(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| c(re, im)), n)
}

pub fn state(dim: usize) -> impl Strategy<Value = StateVector<f64>> {
    complex_entries(dim)
        .prop_filter("non-zero", |v| v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3)
        .prop_map(|v| StateVector::normalized(v).unwrap())
}

/// Random full-rank-or-not density matrix `G G^dagger / Tr`.
pub fn density(dim: usize) -> impl Strategy<Value = DensityMatrix<f64>> {
    complex_entries(dim * dim).prop_filter("non-zero", |v| v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3).prop_map(
        move |v| {
            let g = ComplexMatrix::new(dim, v).unwrap();
            let m = &g * &g.adjoint();
            let tr = m.trace().re;
            DensityMatrix::new(m.scale(c(1.0 / tr, 0.0))).unwrap()
        },
    )
}

pub fn unitary2() -> impl Strategy<Value = ComplexMatrix64> {
    (0.0f64..6.3, 0.0f64..6.3, 0.0f64..6.3, 0.0f64..6.3).prop_map(|(a, b, g, d)| {
        // e^{i a} R_z(b) R_y(g) R_z(d)
        let rz = |t: f64| {
            ComplexMatrix::from_rows2([
                [Complex64::from_polar(1.0, -t / 2.0), c(0.0, 0.0)],
                [c(0.0, 0.0), Complex64::from_polar(1.0, t / 2.0)],
            ])
        };
        let (s, co) = (g / 2.0).sin_cos();
        let ry = ComplexMatrix::from_rows2([[c(co, 0.0), c(-s, 0.0)], [c(s, 0.0), c(co, 0.0)]]);
        (&(&rz(b) * &ry) * &rz(d)).scale(Complex64::from_polar(1.0, a))
    })
}
