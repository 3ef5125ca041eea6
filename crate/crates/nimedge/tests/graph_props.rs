//! Property tests for the graph metrics.

mod common;

use common::brute_edit_distance;
use nimedge::graph::{choose2, pairs, Graph, GraphFamilySpec};
use nimedge::{are_isomorphic, edit_distance};
use proptest::prelude::*;

fn arb_graph(n: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(prop::bool::ANY, choose2(n)).prop_map(move |bits| {
        let mut g = Graph::empty(n).unwrap();
        for (idx, (u, v)) in pairs(n).enumerate() {
            if bits[idx] {
                g.add_edge(u, v);
            }
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn edit_distance_is_symmetric_and_triangular(
        g in arb_graph(5),
        h in arb_graph(5),
        k in arb_graph(5),
    ) {
        let gh = edit_distance(&g, &h).unwrap();
        let hg = edit_distance(&h, &g).unwrap();
        prop_assert_eq!(gh, hg);
        let gk = edit_distance(&g, &k).unwrap();
        let hk = edit_distance(&h, &k).unwrap();
        prop_assert!(gk <= gh + hk);
    }

    #[test]
    fn edit_distance_matches_brute_force(g in arb_graph(5), h in arb_graph(5)) {
        prop_assert_eq!(edit_distance(&g, &h).unwrap(), brute_edit_distance(&g, &h));
    }

    /// Distance zero to a Turán graph is exactly isomorphism to it.
    #[test]
    fn zero_distance_to_turan_is_isomorphism(g in arb_graph(8), r in 1usize..=8) {
        let t = GraphFamilySpec::Turan { n: 8, r }.build().unwrap();
        let zero = edit_distance(&g, &t).unwrap() == 0;
        prop_assert_eq!(zero, are_isomorphic(&g, &t).unwrap());
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(7)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.size() + g.complement().size(), choose2(7));
    }
}
