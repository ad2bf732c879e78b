#![allow(dead_code)]

use cvejoin::graph::{complete, complete_bipartite, cycle, petersen};
use cvejoin::Graph;
use proptest::prelude::*;

/// Any simple graph on `min..=max` vertices.
pub fn any_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(mask)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

/// Connected triangle-free graphs on `2..=max` vertices: a random tree plus
/// the chords from a mask that close no triangle.
pub fn triangle_free_connected(max: usize) -> impl Strategy<Value = Graph> {
    (2..=max).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let chords = prop::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (parents, chords).prop_map(move |(parents, chords)| {
            let mut adj = vec![vec![false; n]; n];
            let mut edges = Vec::new();
            let mut add = |adj: &mut Vec<Vec<bool>>, u: usize, v: usize| {
                adj[u][v] = true;
                adj[v][u] = true;
                edges.push((u, v));
            };
            for (i, &p) in parents.iter().enumerate() {
                add(&mut adj, p, i + 1);
            }
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), want) in pairs.zip(chords) {
                if want && !adj[u][v] && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
                    add(&mut adj, u, v);
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

/// Small regular graphs with their names.
pub fn regular_zoo() -> Vec<(&'static str, Graph)> {
    vec![
        ("K1", complete(1).unwrap()),
        ("K2", complete(2).unwrap()),
        ("K3", complete(3).unwrap()),
        ("K4", complete(4).unwrap()),
        ("C3", cycle(3).unwrap()),
        ("C4", cycle(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("K33", complete_bipartite(3, 3).unwrap()),
        ("Petersen", petersen()),
        ("2K2", Graph::new(4, &[(0, 1), (2, 3)]).unwrap()),
    ]
}

/// Regular, connected, triangle-free graphs of degree >= 2.
pub fn spectral_g1_zoo() -> Vec<(&'static str, Graph)> {
    vec![
        ("C4", cycle(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("C7", cycle(7).unwrap()),
        ("K33", complete_bipartite(3, 3).unwrap()),
        ("K22", complete_bipartite(2, 2).unwrap()),
        ("Petersen", petersen()),
    ]
}
