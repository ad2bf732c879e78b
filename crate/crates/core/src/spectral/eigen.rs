//! Eigenvalues of dense real symmetric matrices, via nalgebra's symmetric
//! eigendecomposition (Householder tridiagonalization and implicit-shift QR).
//! The iteration is sequential and branches only on the data, so the output
//! is bit-identical across runs on the same input.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::graph::DenseSymMatrix;

use super::SpectralError;

/// Iterations allowed per unit of dimension before giving up.
const ITERATIONS_PER_DIM: usize = 60;

/// All eigenvalues of `m`, unsorted.
pub(crate) fn symmetric_eigenvalues(m: &DenseSymMatrix) -> Result<Vec<f64>, SpectralError> {
    let n = m.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let max_iterations = ITERATIONS_PER_DIM * n;
    // row-major storage of a symmetric matrix is also its column-major storage
    let a = DMatrix::from_column_slice(n, n, m.as_slice());
    SymmetricEigen::try_new(a, f64::EPSILON, max_iterations)
        .map(|e| e.eigenvalues.as_slice().to_vec())
        .ok_or(SpectralError::NoConvergence { dim: n, max_iterations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    #[test]
    fn trivial_sizes() {
        assert!(symmetric_eigenvalues(&DenseSymMatrix::zeros(0))
            .unwrap()
            .is_empty());
        assert_eq!(
            symmetric_eigenvalues(&DenseSymMatrix::diagonal(&[7.5])).unwrap(),
            vec![7.5]
        );
        let m = DenseSymMatrix::try_from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let ev = sorted(symmetric_eigenvalues(&m).unwrap());
        assert!((ev[0] - 3.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn already_tridiagonal_and_zero_blocks() {
        // block diagonal with a zero coupling column forces the scale == 0 path
        let m = DenseSymMatrix::try_from_rows(&[
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 2.0, 0.0],
            vec![0.0, 2.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, -3.0],
        ])
        .unwrap();
        let ev = sorted(symmetric_eigenvalues(&m).unwrap());
        let expect = [2.0, 1.0, -2.0, -3.0];
        for (a, b) in ev.iter().zip(expect) {
            assert!((a - b).abs() < 1e-13, "{ev:?}");
        }
    }

    #[test]
    fn deterministic() {
        let m = DenseSymMatrix::from_fn(40, |i, j| ((i * 7 + j * 13) % 11) as f64 - 5.0);
        let a = symmetric_eigenvalues(&m).unwrap();
        let b = symmetric_eigenvalues(&m).unwrap();
        assert_eq!(
            a.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
            b.iter().map(|x| x.to_bits()).collect::<Vec<_>>()
        );
    }
}
