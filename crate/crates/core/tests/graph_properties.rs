mod common;

use common::any_graph;
use cvejoin::graph::{adjacency_matrix, central_graph, incidence_matrix, line_graph};
use cvejoin::Graph;
use proptest::prelude::*;

proptest! {
    #[test]
    fn handshake(g in any_graph(0, 9)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn central_graph_counts(g in any_graph(1, 9)) {
        let n = g.order();
        let c = central_graph(&g);
        prop_assert_eq!(c.order(), n + g.size());
        prop_assert_eq!(c.size(), g.size() + n * (n - 1) / 2);
        // original vertices are adjacent exactly when they were not
        for u in 0..n {
            for v in u + 1..n {
                prop_assert_eq!(c.has_edge(u, v), !g.has_edge(u, v));
            }
        }
        // subdivision vertices have degree 2
        prop_assert!((n..c.order()).all(|v| c.degree(v) == 2));
    }

    #[test]
    fn incidence_gram_is_signless_laplacian(g in any_graph(1, 8)) {
        prop_assume!(g.size() > 0);
        let gram = incidence_matrix(&g).unwrap().gram();
        let a = adjacency_matrix(&g);
        for i in 0..g.order() {
            for j in 0..g.order() {
                let expect = a.get(i, j) + if i == j { g.degree(i) as f64 } else { 0.0 };
                prop_assert_eq!(gram.get(i, j), expect);
            }
        }
    }

    #[test]
    fn line_graph_size(g in any_graph(1, 8)) {
        prop_assume!(g.size() > 0);
        let l = line_graph(&g).unwrap();
        prop_assert_eq!(l.order(), g.size());
        let expect: usize = g.degrees().iter().map(|d| d * d.saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.size(), expect);
    }

    #[test]
    fn edge_order_is_irrelevant(g in any_graph(1, 8), seed in any::<u64>()) {
        let mut edges: Vec<_> = g.edges().iter().map(|&(u, v)| if seed % 2 == 0 { (v, u) } else { (u, v) }).collect();
        edges.reverse();
        prop_assert_eq!(Graph::new(g.order(), &edges).unwrap(), g);
    }
}
