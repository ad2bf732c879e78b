//! Simple undirected graphs, the standard families used throughout the crate,
//! and the derived graphs (line graph, central graph) built from them.
//!
//! Vertices are labelled `0..n`. Edges are stored canonically as `(min, max)`
//! pairs in lexicographic order; every other module relies on that order when
//! it needs a stable numbering of edges (edge `j` of a graph is `edges()[j]`).

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{u}, {v}}} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("invalid size for {family}: {detail}")]
    InvalidSize {
        family: &'static str,
        detail: String,
    },
    #[error("disjoint union of an empty list")]
    EmptyList,
    #[error("graph has no edges")]
    NoEdges,
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation; repeating a pair (in any orientation) is an error.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(n, edges))
    }

    /// `edges` must already be canonical, sorted and duplicate free.
    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `(min, max)` pairs, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Returns `Some(k)` when every vertex has degree `k`.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    /// Number of triangles, found by intersecting the neighbour lists of each
    /// edge's endpoints.
    pub fn triangle_count(&self) -> usize {
        let common: usize = self
            .edges
            .iter()
            .map(|&(u, v)| sorted_intersection_len(&self.adj[u], &self.adj[v]))
            .sum();
        // each triangle is seen once from each of its three edges
        common / 3
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| sorted_intersection_len(&self.adj[u], &self.adj[v]) == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Cycle `C_n` with edges `i -- (i + 1) mod n`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidSize {
            family: "cycle",
            detail: format!("n = {n}, need n >= 3"),
        });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidSize {
            family: "complete",
            detail: "n = 0, need n >= 1".into(),
        });
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_canonical(n, edges))
}

/// Complete bipartite graph `K_{p,q}` with parts `{0..p}` and `{p..p+q}`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, GraphError> {
    if p < 1 || q < 1 {
        return Err(GraphError::InvalidSize {
            family: "complete_bipartite",
            detail: format!("p = {p}, q = {q}, need both >= 1"),
        });
    }
    let edges = (0..p)
        .flat_map(|u| (p..p + q).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_canonical(p + q, edges))
}

/// Petersen graph: outer 5-cycle on `0..5`, spokes `i -- i+5`, inner
/// pentagram `5+i -- 5+(i+2) mod 5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("petersen edge list is simple")
}

/// Disjoint union with vertex labels shifted blockwise in list order.
pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph, GraphError> {
    if graphs.is_empty() {
        return Err(GraphError::EmptyList);
    }
    let mut offset = 0;
    let mut edges = Vec::with_capacity(graphs.iter().map(Graph::size).sum());
    for g in graphs {
        edges.extend(g.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.n;
    }
    // blocks are increasing and each block is sorted, so the list stays canonical
    Ok(Graph::from_canonical(offset, edges))
}

/// Line graph: vertex `i` is edge `i` of `g`; two vertices are adjacent when
/// the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    if g.size() == 0 {
        return Err(GraphError::NoEdges);
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n];
    for (j, &(u, v)) in g.edges.iter().enumerate() {
        incident[u].push(j);
        incident[v].push(j);
    }
    let mut edges = Vec::new();
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                edges.push((i, j));
            }
        }
    }
    // in a simple graph two edges share at most one endpoint, so no duplicates
    edges.sort_unstable();
    Ok(Graph::from_canonical(g.size(), edges))
}

/// Central graph `C(G)`: vertices `0..n` are the original vertices and
/// `n..n+m` the edge-vertices (in canonical edge order). Each edge is
/// subdivided, the original edges are dropped, and every pair of originally
/// non-adjacent vertices is joined.
pub fn central_graph(g: &Graph) -> Graph {
    let n = g.n;
    let m = g.size();
    let mut edges = Vec::with_capacity(2 * m + n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    for (j, &(u, v)) in g.edges.iter().enumerate() {
        edges.push((u, n + j));
        edges.push((v, n + j));
    }
    edges.sort_unstable();
    Graph::from_canonical(n + m, edges)
}

/// Square real symmetric matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymMatrix {
    dim: usize,
    data: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("row {row} has length {len}, expected {dim}")]
    Ragged { row: usize, len: usize, dim: usize },
    #[error("entries ({i}, {j}) and ({j}, {i}) differ")]
    NotSymmetric { i: usize, j: usize },
    #[error("entry ({i}, {j}) is not finite")]
    NonFinite { i: usize, j: usize },
}

impl DenseSymMatrix {
    /// Evaluates `f` on the upper triangle and mirrors it.
    ///
    /// Panics if `f` yields a non-finite value.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let x = f(i, j);
                assert!(x.is_finite(), "non-finite matrix entry at ({i}, {j})");
                data[i * dim + j] = x;
                data[j * dim + i] = x;
            }
        }
        DenseSymMatrix { dim, data }
    }

    pub fn try_from_rows(rows: &[Vec<f64>]) -> Result<Self, MatrixError> {
        let dim = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(MatrixError::Ragged {
                    row,
                    len: r.len(),
                    dim,
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if !x.is_finite() {
                    return Err(MatrixError::NonFinite { i, j });
                }
                if x != rows[j][i] {
                    return Err(MatrixError::NotSymmetric { i, j });
                }
            }
        }
        Ok(DenseSymMatrix {
            dim,
            data: rows.concat(),
        })
    }

    pub fn zeros(dim: usize) -> Self {
        DenseSymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        Self::from_fn(values.len(), |i, j| if i == j { values[i] } else { 0.0 })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    /// Matrix product `self * other`, symmetrised. Only meaningful when the
    /// two factors commute (e.g. powers of the same matrix).
    pub fn mul_commuting(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        Self::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }
}

pub fn adjacency_matrix(g: &Graph) -> DenseSymMatrix {
    let mut a = DenseSymMatrix::zeros(g.n);
    for &(u, v) in &g.edges {
        a.data[u * g.n + v] = 1.0;
        a.data[v * g.n + u] = 1.0;
    }
    a
}

/// Vertex-edge incidence matrix, columns in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, vertex: usize, edge: usize) -> u8 {
        self.data[vertex * self.cols + edge]
    }

    /// `Q Q^T`, which for a graph equals `A + diag(deg)`.
    pub fn gram(&self) -> DenseSymMatrix {
        DenseSymMatrix::from_fn(self.rows, |i, j| {
            (0..self.cols)
                .map(|e| f64::from(self.get(i, e) * self.get(j, e)))
                .sum()
        })
    }
}

pub fn incidence_matrix(g: &Graph) -> Result<IncidenceMatrix, GraphError> {
    let cols = g.size();
    if cols == 0 {
        return Err(GraphError::NoEdges);
    }
    let mut data = vec![0u8; g.n * cols];
    for (j, &(u, v)) in g.edges.iter().enumerate() {
        data[u * cols + j] = 1;
        data[v * cols + j] = 1;
    }
    Ok(IncidenceMatrix {
        rows: g.n,
        cols,
        data,
    })
}
