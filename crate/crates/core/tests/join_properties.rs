mod common;

use common::{any_graph, triangle_free_connected};
use cvejoin::graph::complete;
use cvejoin::indices::{indices_definitional, IndexName, IndexValue};
use cvejoin::join::{cve_degree, cve_order, cve_size, eccentricity_mismatches, Block};
use cvejoin::spectral::all_pairs_distances;
use cvejoin::{cve_join, Graph};
use num_rational::Ratio;
use proptest::prelude::*;

fn exact(v: Option<IndexValue>) -> Ratio<i64> {
    match v.unwrap() {
        IndexValue::Exact(r) => r,
        IndexValue::Real(x) => panic!("expected exact, got {x}"),
    }
}

fn g1_any() -> impl Strategy<Value = Graph> {
    prop_oneof![
        3 => triangle_free_connected(7),
        1 => (3usize..=4).prop_map(|n| complete(n).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn counts_degrees_and_diameter(g1 in g1_any(), g2 in any_graph(1, 4), g3 in any_graph(1, 4)) {
        let j = cve_join(&g1, &g2, &g3).unwrap();
        let g = j.graph();
        prop_assert_eq!(cve_order(j.params()), g.order());
        prop_assert_eq!(cve_size(j.params()), g.size());
        for v in 0..g.order() {
            prop_assert_eq!(cve_degree(&j, v).unwrap(), g.degree(v));
        }
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        let d = all_pairs_distances(g).unwrap();
        prop_assert!(d.max_entry() <= 3);
        prop_assert!(eccentricity_mismatches(&j).unwrap().is_empty());
    }

    #[test]
    fn blocks_partition_the_vertices(g1 in g1_any(), g2 in any_graph(1, 4), g3 in any_graph(1, 4)) {
        let j = cve_join(&g1, &g2, &g3).unwrap();
        let total: usize = Block::ALL.iter().map(|&b| j.block_range(b).len()).sum();
        prop_assert_eq!(total, j.graph().order());
        prop_assert!(j.block_of(j.graph().order()).is_err());
    }

    #[test]
    fn wiener_is_half_the_distance_sum(g1 in g1_any(), g2 in any_graph(1, 4), g3 in any_graph(1, 4)) {
        let j = cve_join(&g1, &g2, &g3).unwrap();
        let r = indices_definitional(j.graph()).unwrap();
        let total = all_pairs_distances(j.graph()).unwrap().total();
        prop_assert_eq!(2 * r.wiener() as u64, total);
    }

    #[test]
    fn index_identities_when_all_eccentricities_are_three(
        n in 3usize..=4, g2 in any_graph(1, 4), g3 in any_graph(1, 4)
    ) {
        let j = cve_join(&complete(n).unwrap(), &g2, &g3).unwrap();
        let g = j.graph();
        let r = indices_definitional(g).unwrap();
        let (order, size) = (g.order() as i64, g.size() as i64);
        prop_assert_eq!(exact(r.get(IndexName::M1)), Ratio::from_integer(9 * order));
        prop_assert_eq!(exact(r.get(IndexName::M2)), Ratio::from_integer(9 * size));
        prop_assert_eq!(exact(r.get(IndexName::XiC)), Ratio::from_integer(6 * size));
        prop_assert_eq!(exact(r.get(IndexName::Tau)), Ratio::from_integer(3 * order));
        prop_assert_eq!(r.aveg(), Ratio::from_integer(3));
        // every edge joins equal eccentricities
        let ga = r.get(IndexName::GA4).unwrap().to_f64();
        prop_assert!((ga - size as f64).abs() < 1e-9);
    }

    #[test]
    fn ga4_is_at_most_the_size(g1 in g1_any(), g2 in any_graph(1, 4), g3 in any_graph(1, 4)) {
        let j = cve_join(&g1, &g2, &g3).unwrap();
        let r = indices_definitional(j.graph()).unwrap();
        prop_assert!(r.get(IndexName::GA4).unwrap().to_f64() <= j.graph().size() as f64 + 1e-9);
    }
}
