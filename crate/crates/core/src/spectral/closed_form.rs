//! Closed-form distance spectrum of the join of three regular graphs, and the
//! line-graph spectrum identity used to cross-check the eigensolver.

use serde::Serialize;

use crate::formulas::FormulaSet;
use crate::graph::{adjacency_matrix, Graph};
use crate::join::CveParameters;

use super::{sym_eigenvalues, SpectralError, Spectrum, GROUPING_TOL};

/// The 4×4 equitable quotient of the join's distance matrix over the blocks
/// `[V(G1), I(G1), V(G2), V(G3)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuotientMatrix {
    pub entries: [[i64; 4]; 4],
    /// Block sizes `(n1, m1, n2, n3)`.
    pub block_sizes: [usize; 4],
}

impl QuotientMatrix {
    pub fn row_sums(&self) -> [i64; 4] {
        self.entries.map(|r| r.iter().sum())
    }

    /// Eigenvalues via the similar symmetric matrix
    /// `S = diag(s)^{1/2} M diag(s)^{-1/2}`, which is symmetric exactly when
    /// `s_i M_ij = s_j M_ji` (a distance matrix's block sums are symmetric).
    pub fn eigenvalues(&self) -> Result<Vec<f64>, SpectralError> {
        let s = self.block_sizes;
        for i in 0..4 {
            for j in i + 1..4 {
                if s[i] as i64 * self.entries[i][j] != s[j] as i64 * self.entries[j][i] {
                    return Err(SpectralError::QuotientNotSymmetrizable { i, j });
                }
            }
        }
        if let Some(b) = s.iter().position(|&x| x == 0) {
            return Err(SpectralError::PreconditionViolated(format!(
                "quotient block {b} is empty"
            )));
        }
        let sym = crate::graph::DenseSymMatrix::from_fn(4, |i, j| {
            self.entries[i][j] as f64 * (s[i] as f64 / s[j] as f64).sqrt()
        });
        Ok(sym_eigenvalues(&sym)?.values().to_vec())
    }
}

pub fn quotient_matrix(p: &CveParameters) -> Result<QuotientMatrix, SpectralError> {
    quotient_matrix_with(FormulaSet::standard(), p)
}

pub fn quotient_matrix_with(
    formulas: &FormulaSet,
    p: &CveParameters,
) -> Result<QuotientMatrix, SpectralError> {
    let mut entries = [[0i64; 4]; 4];
    for (i, row) in formulas.quotient.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            let v = f
                .eval(p)
                .map_err(|m| SpectralError::MissingRegularity(m.to_string()))?;
            entries[i][j] = v.to_integer();
        }
    }
    Ok(QuotientMatrix {
        entries,
        block_sizes: [p.n1, p.m1, p.n2, p.n3],
    })
}

/// Checks the hypotheses of the closed-form spectrum, naming the first that
/// fails.
pub fn check_spectrum_preconditions(
    g1: &Graph,
    g2: &Graph,
    g3: &Graph,
) -> Result<(), SpectralError> {
    let fail = |s: &str| Err(SpectralError::PreconditionViolated(s.to_string()));
    if g2.order() == 0 {
        return fail("G2 is empty");
    }
    if g3.order() == 0 {
        return fail("G3 is empty");
    }
    let Some(k1) = g1.is_regular() else {
        return fail("G1 not regular");
    };
    if k1 < 2 {
        return fail("G1 degree k1 < 2");
    }
    if !g1.is_triangle_free() {
        return fail("G1 not triangle-free");
    }
    if !g1.is_connected() {
        return fail("G1 not connected");
    }
    if g2.is_regular().is_none() {
        return fail("G2 not regular");
    }
    if g3.is_regular().is_none() {
        return fail("G3 not regular");
    }
    Ok(())
}

/// Adjacency eigenvalues with one copy of the largest (the degree of a regular
/// graph) removed.
fn non_principal(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    let s = sym_eigenvalues(&adjacency_matrix(g))?;
    Ok(s.values().iter().skip(1).copied().collect())
}

/// The distance spectrum of `cve_join(g1, g2, g3)` assembled from the
/// adjacency spectra of the inputs:
///
/// * `(θ - 3 ± √((θ + 1)² + 4(θ + k1))) / 2` for each non-principal
///   eigenvalue `θ` of `G1`,
/// * `-2` repeated `m1 - n1` times,
/// * `-θ - 2` for each non-principal eigenvalue of `G2` and of `G3`,
/// * the eigenvalues of the quotient matrix.
pub fn closed_form_d_spectrum(
    g1: &Graph,
    g2: &Graph,
    g3: &Graph,
) -> Result<Spectrum, SpectralError> {
    closed_form_d_spectrum_with(FormulaSet::standard(), g1, g2, g3)
}

pub fn closed_form_d_spectrum_with(
    formulas: &FormulaSet,
    g1: &Graph,
    g2: &Graph,
    g3: &Graph,
) -> Result<Spectrum, SpectralError> {
    check_spectrum_preconditions(g1, g2, g3)?;
    let p = CveParameters::from_graphs(g1, g2, g3);
    let k1 = p.k1.expect("checked regular") as f64;

    let mut values = Vec::with_capacity(p.n1 + p.m1 + p.n2 + p.n3);
    for theta in non_principal(g1)? {
        let root = ((theta + 1.0).powi(2) + 4.0 * (theta + k1)).sqrt();
        values.push((theta - 3.0 + root) / 2.0);
        values.push((theta - 3.0 - root) / 2.0);
    }
    // k1 >= 2 on a connected regular graph gives m1 >= n1
    values.extend(std::iter::repeat_n(-2.0, p.m1 - p.n1));
    for g in [g2, g3] {
        values.extend(non_principal(g)?.into_iter().map(|theta| -theta - 2.0));
    }
    values.extend(quotient_matrix_with(formulas, &p)?.eigenvalues()?);
    Ok(Spectrum::from_values(values, GROUPING_TOL))
}

/// Adjacency spectrum of the line graph of a `k`-regular graph: `2k - 2`,
/// `θ + k - 2` for every non-principal `θ`, and `-2` with multiplicity
/// `m - n` (removed instead of added when `m < n`).
pub fn line_graph_spectrum_oracle(g: &Graph) -> Result<Spectrum, SpectralError> {
    let Some(k) = g.is_regular() else {
        return Err(SpectralError::NotRegular);
    };
    if g.size() == 0 {
        return Err(SpectralError::Graph(crate::graph::GraphError::NoEdges));
    }
    let k = k as f64;
    let mut values = vec![2.0 * k - 2.0];
    values.extend(non_principal(g)?.into_iter().map(|theta| theta + k - 2.0));
    let (m, n) = (g.size(), g.order());
    if m >= n {
        values.extend(std::iter::repeat_n(-2.0, m - n));
    } else {
        for _ in 0..n - m {
            let idx = values
                .iter()
                .enumerate()
                .min_by(|a, b| (a.1 + 2.0).abs().total_cmp(&(b.1 + 2.0).abs()))
                .map(|(i, _)| i)
                .expect("nonempty");
            values.swap_remove(idx);
        }
    }
    Ok(Spectrum::from_values(values, GROUPING_TOL))
}
