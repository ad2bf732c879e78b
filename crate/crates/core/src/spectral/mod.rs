//! Distance matrices, symmetric eigenvalues, D-spectra and D-energy.

mod closed_form;
mod distance;
mod eigen;
mod spectrum;

use thiserror::Error;

use crate::graph::{DenseSymMatrix, Graph, GraphError};
use crate::join::JoinError;

pub use closed_form::{
    check_spectrum_preconditions, closed_form_d_spectrum, closed_form_d_spectrum_with,
    line_graph_spectrum_oracle, quotient_matrix, quotient_matrix_with, QuotientMatrix,
};
pub use distance::{all_pairs_distances, DistanceMatrix};
pub use spectrum::{first_difference, max_deviation, spectra_equal, Spectrum};

/// Tolerance used when grouping eigenvalues into multiplicities.
pub const GROUPING_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("graph is disconnected: no path from {u} to {v}")]
    Disconnected { u: usize, v: usize },
    #[error("vertex {vertex} out of range for dimension {dim}")]
    VertexOutOfRange { vertex: usize, dim: usize },
    #[error("eigensolver did not converge on a {dim}x{dim} matrix within {max_iterations} iterations")]
    NoConvergence { dim: usize, max_iterations: usize },
    #[error("missing regularity: {0}")]
    MissingRegularity(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("quotient matrix is not equitable at ({i}, {j})")]
    QuotientNotSymmetrizable { i: usize, j: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Join(#[from] JoinError),
}

/// All eigenvalues of a symmetric matrix, descending, grouped at
/// [`GROUPING_TOL`].
pub fn sym_eigenvalues(m: &DenseSymMatrix) -> Result<Spectrum, SpectralError> {
    Ok(Spectrum::from_values(
        eigen::symmetric_eigenvalues(m)?,
        GROUPING_TOL,
    ))
}

pub fn distance_spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    sym_eigenvalues(&all_pairs_distances(g)?.to_dense())
}

/// Sum of the absolute distance eigenvalues.
pub fn distance_energy(g: &Graph) -> Result<f64, SpectralError> {
    Ok(distance_spectrum(g)?.energy())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{adjacency_matrix, complete, cycle, petersen};

    fn assert_values(s: &Spectrum, expect: &[f64], tol: f64) {
        assert_eq!(s.dim(), expect.len());
        for (a, b) in s.values().iter().zip(expect) {
            assert!((a - b).abs() <= tol, "{:?} vs {expect:?}", s.values());
        }
    }

    #[test]
    fn known_adjacency_spectra() {
        assert_values(
            &sym_eigenvalues(&DenseSymMatrix::zeros(3)).unwrap(),
            &[0.0; 3],
            0.0,
        );
        assert_values(
            &sym_eigenvalues(&adjacency_matrix(&complete(4).unwrap())).unwrap(),
            &[3.0, -1.0, -1.0, -1.0],
            1e-12,
        );
        assert_values(
            &sym_eigenvalues(&adjacency_matrix(&cycle(4).unwrap())).unwrap(),
            &[2.0, 0.0, 0.0, -2.0],
            1e-12,
        );
        let p = sym_eigenvalues(&adjacency_matrix(&petersen())).unwrap();
        assert_eq!(
            p.groups().iter().map(|g| g.1).collect::<Vec<_>>(),
            vec![1, 5, 4]
        );
    }

    #[test]
    fn distance_spectra_and_energy() {
        let k2 = complete(2).unwrap();
        assert_values(&distance_spectrum(&k2).unwrap(), &[1.0, -1.0], 1e-12);
        assert!((distance_energy(&k2).unwrap() - 2.0).abs() < 1e-12);

        let k3 = complete(3).unwrap();
        assert_values(&distance_spectrum(&k3).unwrap(), &[2.0, -1.0, -1.0], 1e-12);
        assert!((distance_energy(&k3).unwrap() - 4.0).abs() < 1e-12);

        // circulant oracle: λ_j = Σ_k d(0,k) ω^{jk} with first row (0,1,2,1)
        let c4 = cycle(4).unwrap();
        assert_values(
            &distance_spectrum(&c4).unwrap(),
            &[4.0, 0.0, -2.0, -2.0],
            1e-12,
        );
        assert!((distance_energy(&c4).unwrap() - 8.0).abs() < 1e-12);
    }

    #[test]
    fn cospectrality_decision() {
        let c4 = distance_spectrum(&cycle(4).unwrap()).unwrap();
        let k4 = distance_spectrum(&complete(4).unwrap()).unwrap();
        assert!(spectra_equal(&c4, &c4, 0.0));
        assert!(!spectra_equal(&c4, &k4, 1e-6));
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g =
            crate::graph::disjoint_union(&[complete(2).unwrap(), complete(2).unwrap()]).unwrap();
        assert!(matches!(
            distance_energy(&g),
            Err(SpectralError::Disconnected { .. })
        ));
    }
}
