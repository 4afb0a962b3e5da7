use super::ComplexMatrix;
use crate::Scalar;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// The `n x n` complex Hermitian matrix `H = A + iB` is embedded as the real
/// symmetric `2n x 2n` matrix `[[A, -B], [B, A]]`, whose spectrum is that of
/// `H` with every eigenvalue doubled; cyclic Jacobi sweeps diagonalize it.
pub fn hermitian_eigenvalues<T: Scalar>(h: &ComplexMatrix<T>) -> Vec<T> {
    let n = h.dim();
    let m = 2 * n;
    let mut a = vec![T::zero(); m * m];
    for i in 0..n {
        for j in 0..n {
            // symmetrize to tolerate round-off in the input
            let z = (h.get(i, j) + h.get(j, i).conj()) * T::half();
            a[i * m + j] = z.re;
            a[(i + n) * m + (j + n)] = z.re;
            a[(i + n) * m + j] = z.im;
            a[i * m + (j + n)] = -z.im;
        }
    }

    for _ in 0..MAX_SWEEPS {
        let off: T = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .fold(T::zero(), |acc, (i, j)| acc + a[i * m + j] * a[i * m + j]);
        if off <= T::epsilon() * T::epsilon() {
            break;
        }
        for p in 0..m {
            for q in (p + 1)..m {
                let apq = a[p * m + q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q * m + q] - a[p * m + p]) / (T::two() * apq);
                let sign = if theta >= T::zero() { T::one() } else { -T::one() };
                let t = sign / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
            }
        }
    }

    let mut doubled: Vec<T> = (0..m).map(|i| a[i * m + i]).collect();
    doubled.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    doubled.into_iter().step_by(2).collect()
}
