//! The central vertex-edge join `G1^C ▷ (G2^V ∪ G3^E)`.
//!
//! Starting from the central graph of `G1`, every original vertex of `G1` is
//! joined to every vertex of `G2`, and every edge-vertex of `G1` is joined to
//! every vertex of `G3`. Vertices are laid out as
//! `[V(G1) | I(G1) | V(G2) | V(G3)]`.

use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{central_graph, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JoinError {
    #[error("G1 has no edges, so the join has no edge-vertices")]
    EmptyEdgeSetG1,
    #[error("G1 is not connected")]
    G1Disconnected,
    #[error("G2 has no vertices")]
    EmptyG2,
    #[error("G3 has no vertices")]
    EmptyG3,
    #[error("vertex {vertex} is outside the join of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("closed form unavailable: {0}")]
    ClosedFormUnavailable(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// The counts (and optional regularity degrees) of the three input graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CveParameters {
    pub n1: usize,
    pub m1: usize,
    pub k1: Option<usize>,
    pub n2: usize,
    pub m2: usize,
    pub k2: Option<usize>,
    pub n3: usize,
    pub m3: usize,
    pub k3: Option<usize>,
}

impl CveParameters {
    pub fn from_graphs(g1: &Graph, g2: &Graph, g3: &Graph) -> Self {
        CveParameters {
            n1: g1.order(),
            m1: g1.size(),
            k1: g1.is_regular(),
            n2: g2.order(),
            m2: g2.size(),
            k2: g2.is_regular(),
            n3: g3.order(),
            m3: g3.size(),
            k3: g3.is_regular(),
        }
    }

    /// Checks `n1 >= 2`, `m1 >= 1` and `n_i * k_i = 2 m_i` for every present degree.
    pub fn validate(&self) -> Result<(), JoinError> {
        if self.n1 < 2 || self.m1 == 0 {
            return Err(JoinError::InvalidParameters(format!(
                "need n1 >= 2 and m1 >= 1, got n1 = {}, m1 = {}",
                self.n1, self.m1
            )));
        }
        for (i, n, m, k) in [
            (1, self.n1, self.m1, self.k1),
            (2, self.n2, self.m2, self.k2),
            (3, self.n3, self.m3, self.k3),
        ] {
            if let Some(k) = k {
                if n * k != 2 * m {
                    return Err(JoinError::InvalidParameters(format!(
                        "G{i}: n{i} * k{i} = {} but 2 m{i} = {}",
                        n * k,
                        2 * m
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether the eccentricity closed forms can apply: both joins nonempty.
    pub fn has_full_joins(&self) -> bool {
        self.n2 >= 1 && self.n3 >= 1 && self.m1 >= 1
    }
}

pub fn cve_order(p: &CveParameters) -> usize {
    p.n1 + p.m1 + p.n2 + p.n3
}

pub fn cve_size(p: &CveParameters) -> usize {
    p.m1 + p.m2 + p.m3 + p.n1 * p.n2 + p.m1 * p.n3 + p.n1 * (p.n1.saturating_sub(1)) / 2
}

/// Which part of the join a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Block {
    /// Original vertices of G1.
    G1Vertex,
    /// Edge-vertices `I(G1)`.
    G1Edge,
    G2,
    G3,
}

impl Block {
    pub const ALL: [Block; 4] = [Block::G1Vertex, Block::G1Edge, Block::G2, Block::G3];

    pub fn label(self) -> &'static str {
        match self {
            Block::G1Vertex => "V(G1)",
            Block::G1Edge => "I(G1)",
            Block::G2 => "V(G2)",
            Block::G3 => "V(G3)",
        }
    }
}

/// A constructed join together with its inputs and block layout.
#[derive(Debug, Clone)]
pub struct CveGraph {
    graph: Graph,
    parts: [Graph; 3],
    params: CveParameters,
    g1_triangle_free: bool,
}

impl CveGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn params(&self) -> &CveParameters {
        &self.params
    }

    pub fn g1_triangle_free(&self) -> bool {
        self.g1_triangle_free
    }

    pub fn g1(&self) -> &Graph {
        &self.parts[0]
    }

    pub fn g2(&self) -> &Graph {
        &self.parts[1]
    }

    pub fn g3(&self) -> &Graph {
        &self.parts[2]
    }

    pub fn block_range(&self, block: Block) -> Range<usize> {
        let p = &self.params;
        let a = p.n1;
        let b = a + p.m1;
        let c = b + p.n2;
        let d = c + p.n3;
        match block {
            Block::G1Vertex => 0..a,
            Block::G1Edge => a..b,
            Block::G2 => b..c,
            Block::G3 => c..d,
        }
    }

    pub fn block_of(&self, v: usize) -> Result<Block, JoinError> {
        Block::ALL
            .into_iter()
            .find(|&b| self.block_range(b).contains(&v))
            .ok_or(JoinError::VertexOutOfRange {
                vertex: v,
                order: self.graph.order(),
            })
    }
}

/// Builds the join. `G1` must be connected with at least one edge and `G2`,
/// `G3` must be nonempty; `G2` and `G3` may be disconnected.
pub fn cve_join(g1: &Graph, g2: &Graph, g3: &Graph) -> Result<CveGraph, JoinError> {
    if g2.order() == 0 {
        return Err(JoinError::EmptyG2);
    }
    if g3.order() == 0 {
        return Err(JoinError::EmptyG3);
    }
    cve_join_allow_empty(g1, g2, g3)
}

/// Like [`cve_join`] but accepts an empty `G2` and/or `G3`. Closed forms on
/// such a join report [`JoinError::ClosedFormUnavailable`].
pub fn cve_join_allow_empty(g1: &Graph, g2: &Graph, g3: &Graph) -> Result<CveGraph, JoinError> {
    if g1.size() == 0 {
        return Err(JoinError::EmptyEdgeSetG1);
    }
    if !g1.is_connected() {
        return Err(JoinError::G1Disconnected);
    }
    let params = CveParameters::from_graphs(g1, g2, g3);
    let central = central_graph(g1);
    let off2 = params.n1 + params.m1;
    let off3 = off2 + params.n2;

    let mut edges = Vec::with_capacity(cve_size(&params));
    edges.extend_from_slice(central.edges());
    edges.extend(g2.edges().iter().map(|&(u, v)| (off2 + u, off2 + v)));
    edges.extend(g3.edges().iter().map(|&(u, v)| (off3 + u, off3 + v)));
    for u in 0..params.n1 {
        edges.extend((0..params.n2).map(|w| (u, off2 + w)));
    }
    for e in 0..params.m1 {
        edges.extend((0..params.n3).map(|w| (params.n1 + e, off3 + w)));
    }
    let graph = Graph::new(cve_order(&params), &edges).expect("join of simple graphs is simple");

    Ok(CveGraph {
        graph,
        g1_triangle_free: g1.is_triangle_free(),
        parts: [g1.clone(), g2.clone(), g3.clone()],
        params,
    })
}

/// Degree of `v` from the four-case degree formula (no graph traversal).
pub fn cve_degree(g: &CveGraph, v: usize) -> Result<usize, JoinError> {
    let p = &g.params;
    Ok(match g.block_of(v)? {
        Block::G1Vertex => p.n1 + p.n2 - 1,
        Block::G1Edge => p.n3 + 2,
        Block::G2 => g.g2().degree(v - g.block_range(Block::G2).start) + p.n1,
        Block::G3 => g.g3().degree(v - g.block_range(Block::G3).start) + p.m1,
    })
}

/// Eccentricity of `v` from the closed form: with triangle-free `G1` it is 2
/// on `V(G1) ∪ I(G1)` and 3 on `V(G2) ∪ V(G3)`; otherwise 3 everywhere.
///
/// The non-triangle-free value assumes every vertex and edge of `G1` lies on
/// a triangle (true for complete graphs). Use [`eccentricity_mismatches`] to
/// flag inputs where the formula and BFS disagree.
pub fn cve_eccentricity(g: &CveGraph, v: usize) -> Result<u32, JoinError> {
    let block = g.block_of(v)?;
    if !g.params.has_full_joins() {
        return Err(JoinError::ClosedFormUnavailable(
            "eccentricity formula needs nonempty G2 and G3".into(),
        ));
    }
    Ok(match (g.g1_triangle_free, block) {
        (true, Block::G1Vertex | Block::G1Edge) => 2,
        _ => 3,
    })
}

/// BFS eccentricity of `v` in the constructed graph; `None` if some vertex is
/// unreachable.
pub fn bfs_eccentricity(g: &CveGraph, v: usize) -> Result<Option<u32>, JoinError> {
    g.block_of(v)?;
    let dist = g.graph.bfs(v);
    Ok(dist.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d))))
}

/// A vertex where the closed-form eccentricity disagrees with BFS.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EccentricityMismatch {
    pub vertex: usize,
    pub block: Block,
    pub closed_form: u32,
    pub bfs: Option<u32>,
}

/// Every vertex whose closed-form eccentricity differs from BFS.
pub fn eccentricity_mismatches(g: &CveGraph) -> Result<Vec<EccentricityMismatch>, JoinError> {
    let mut out = Vec::new();
    for v in 0..g.graph.order() {
        let closed_form = cve_eccentricity(g, v)?;
        let bfs = bfs_eccentricity(g, v)?;
        if bfs != Some(closed_form) {
            out.push(EccentricityMismatch {
                vertex: v,
                block: g.block_of(v)?,
                closed_form,
                bfs,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, disjoint_union};

    fn k(n: usize) -> Graph {
        complete(n).unwrap()
    }

    fn c4_k2_k2() -> CveGraph {
        cve_join(&cycle(4).unwrap(), &k(2), &k(2)).unwrap()
    }

    #[test]
    fn c4_k2_k2_counts() {
        let g = c4_k2_k2();
        assert_eq!((g.graph().order(), g.graph().size()), (12, 28));
        assert!(g.graph().is_connected());
        assert_eq!(cve_order(g.params()), 12);
        assert_eq!(cve_size(g.params()), 28);
        assert_eq!(g.block_range(Block::G1Edge), 4..8);
        assert_eq!(g.block_range(Block::G3), 10..12);
    }

    #[test]
    fn small_joins() {
        let g = cve_join(&k(2), &k(1), &k(1)).unwrap();
        assert_eq!((g.graph().order(), g.graph().size()), (5, 5));

        let g = cve_join(&k(4), &k(2), &k(2)).unwrap();
        assert_eq!((g.graph().order(), g.graph().size()), (14, 34));
        assert_eq!(cve_size(g.params()), 34);
    }

    #[test]
    fn degenerate_parameters() {
        let p = CveParameters {
            n1: 2,
            m1: 1,
            k1: Some(1),
            n2: 0,
            m2: 0,
            k2: None,
            n3: 0,
            m3: 0,
            k3: None,
        };
        assert_eq!((cve_order(&p), cve_size(&p)), (3, 2));
        assert!(!p.has_full_joins());

        let g = cve_join_allow_empty(&k(2), &Graph::empty(0), &Graph::empty(0)).unwrap();
        assert_eq!((g.graph().order(), g.graph().size()), (3, 2));
        assert!(matches!(
            cve_eccentricity(&g, 0),
            Err(JoinError::ClosedFormUnavailable(_))
        ));
    }

    #[test]
    fn join_errors() {
        let e = Graph::empty(0);
        assert_eq!(
            cve_join(&Graph::empty(3), &k(1), &k(1)).unwrap_err(),
            JoinError::EmptyEdgeSetG1
        );
        assert_eq!(cve_join(&k(2), &e, &k(1)).unwrap_err(), JoinError::EmptyG2);
        assert_eq!(cve_join(&k(2), &k(1), &e).unwrap_err(), JoinError::EmptyG3);
        let two_edges = disjoint_union(&[k(2), k(2)]).unwrap();
        assert_eq!(
            cve_join(&two_edges, &k(1), &k(1)).unwrap_err(),
            JoinError::G1Disconnected
        );
    }

    #[test]
    fn degree_formula_on_c4_k2_k2() {
        let g = c4_k2_k2();
        assert_eq!(cve_degree(&g, 0).unwrap(), 5);
        assert_eq!(cve_degree(&g, 4).unwrap(), 4);
        assert_eq!(cve_degree(&g, 8).unwrap(), 5);
        assert_eq!(cve_degree(&g, 11).unwrap(), 5);
        for v in 0..12 {
            assert_eq!(cve_degree(&g, v).unwrap(), g.graph().degree(v));
        }
        assert_eq!(
            cve_degree(&g, 12),
            Err(JoinError::VertexOutOfRange {
                vertex: 12,
                order: 12
            })
        );
    }

    #[test]
    fn eccentricity_formula() {
        let g = c4_k2_k2();
        assert_eq!(cve_eccentricity(&g, 0).unwrap(), 2);
        assert_eq!(cve_eccentricity(&g, 5).unwrap(), 2);
        assert_eq!(cve_eccentricity(&g, 8).unwrap(), 3);
        assert!(eccentricity_mismatches(&g).unwrap().is_empty());

        let g = cve_join(&k(4), &k(2), &k(2)).unwrap();
        assert!((0..14).all(|v| cve_eccentricity(&g, v).unwrap() == 3));
        assert!(eccentricity_mismatches(&g).unwrap().is_empty());

        let g = cve_join(
            &complete_bipartite(3, 3).unwrap(),
            &cycle(3).unwrap(),
            &k(2),
        )
        .unwrap();
        assert!(eccentricity_mismatches(&g).unwrap().is_empty());
    }

    #[test]
    fn eccentricity_mismatch_is_flagged() {
        // a triangle with a pendant vertex: the pendant vertex and its edge are
        // on no triangle, so the all-3 formula overshoots there
        let paw = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let g = cve_join(&paw, &k(1), &k(1)).unwrap();
        let bad = eccentricity_mismatches(&g).unwrap();
        assert!(!bad.is_empty());
        assert!(bad.iter().all(|m| m.closed_form == 3 && m.bfs == Some(2)));
    }

    #[test]
    fn parameter_validation() {
        let g = c4_k2_k2();
        assert!(g.params().validate().is_ok());
        let mut p = *g.params();
        p.k2 = Some(3);
        assert!(p.validate().is_err());
        p = *g.params();
        p.m1 = 0;
        assert!(p.validate().is_err());
    }
}
