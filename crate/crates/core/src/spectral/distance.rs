use crate::graph::{DenseSymMatrix, Graph};

use super::SpectralError;

/// Exact shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    dim: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    fn check(&self, v: usize) -> Result<(), SpectralError> {
        if v < self.dim {
            Ok(())
        } else {
            Err(SpectralError::VertexOutOfRange {
                vertex: v,
                dim: self.dim,
            })
        }
    }

    pub fn eccentricity(&self, v: usize) -> Result<u32, SpectralError> {
        self.check(v)?;
        Ok(self.row(v).iter().copied().max().unwrap_or(0))
    }

    pub fn transmission(&self, v: usize) -> Result<u64, SpectralError> {
        self.check(v)?;
        Ok(self.row(v).iter().map(|&d| u64::from(d)).sum())
    }

    pub fn eccentricities(&self) -> Vec<u32> {
        (0..self.dim)
            .map(|v| self.row(v).iter().copied().max().unwrap_or(0))
            .collect()
    }

    /// Sum over all ordered pairs.
    pub fn total(&self) -> u64 {
        self.data.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    pub fn to_dense(&self) -> DenseSymMatrix {
        DenseSymMatrix::from_fn(self.dim, |i, j| f64::from(self.get(i, j)))
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, SpectralError> {
    let n = g.order();
    let mut data = Vec::with_capacity(n * n);
    for u in 0..n {
        for (v, d) in g.bfs(u).into_iter().enumerate() {
            data.push(d.ok_or(SpectralError::Disconnected { u, v })?);
        }
    }
    Ok(DistanceMatrix { dim: n, data })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union};

    #[test]
    fn cycle_and_complete() {
        let d = all_pairs_distances(&cycle(4).unwrap()).unwrap();
        for v in 0..4 {
            let mut row = d.row(v).to_vec();
            row.sort_unstable();
            assert_eq!(row, vec![0, 1, 1, 2]);
            assert_eq!(d.eccentricity(v).unwrap(), 2);
            assert_eq!(d.transmission(v).unwrap(), 4);
        }
        let d = all_pairs_distances(&complete(3).unwrap()).unwrap();
        assert!((0..3).all(|i| (0..3).all(|j| d.get(i, j) == u32::from(i != j))));

        let d = all_pairs_distances(&complete(2).unwrap()).unwrap();
        assert_eq!(
            (d.eccentricity(0).unwrap(), d.transmission(0).unwrap()),
            (1, 1)
        );
        assert!(matches!(
            d.eccentricity(2),
            Err(SpectralError::VertexOutOfRange { vertex: 2, dim: 2 })
        ));
    }

    #[test]
    fn disconnected_names_the_pair() {
        let g = disjoint_union(&[complete(2).unwrap(), complete(1).unwrap()]).unwrap();
        assert_eq!(
            all_pairs_distances(&g),
            Err(SpectralError::Disconnected { u: 0, v: 2 })
        );
    }
}
