//! Structural properties of the exact Turán searches.

use nimedge::graph::{turan_number, Graph, GraphFamilySpec};
use nimedge::verify::baseline;
use nimedge::{copy_through_edge, ex_exact, ex_exact_family};

fn build(s: &str) -> Graph {
    s.parse::<GraphFamilySpec>().unwrap().build().unwrap()
}

/// Disjoint unions of tree-free graphs stay tree-free, so the Turán
/// function of a tree is superadditive. Connectedness is essential: for the
/// two-edge matching, ex(3) + ex(3) = 6 exceeds ex(6) = 5.
#[test]
fn tree_turan_function_is_superadditive() {
    for tree in ["path:3", "path:4", "star:3", "star:4"] {
        let t = build(tree);
        let ex_at = |n: usize| ex_exact(n, &t, None).unwrap().value;
        for l in 1..=4 {
            for m in 1..=4 {
                assert!(
                    ex_at(l) + ex_at(m) <= ex_at(l + m),
                    "{tree}: ex({l}) + ex({m}) > ex({})",
                    l + m
                );
            }
        }
    }
    let m2 = build("matching:2");
    let ex_at = |n: usize| ex_exact(n, &m2, None).unwrap().value;
    assert!(ex_at(3) + ex_at(3) > ex_at(6));
}

#[test]
fn ex_is_monotone_in_order() {
    for h in ["cycle:4", "complete:3", "star:3", "path:4"] {
        let g = build(h);
        let mut prev = 0;
        for n in 1..=7 {
            let v = ex_exact(n, &g, None).unwrap().value;
            assert!(v >= prev, "{h}: ex({n}) = {v} < ex({}) = {prev}", n - 1);
            prev = v;
        }
    }
}

#[test]
fn ex_is_monotone_under_subgraph_inclusion() {
    // Each right graph contains the left one, so forbidding it is weaker.
    let inclusions = [
        ("path:4", "cycle:4"),
        ("complete:3", "complete:4"),
        ("matching:2", "path:4"),
    ];
    for (small, large) in inclusions {
        let (hs, hl) = (build(small), build(large));
        for n in 2..=7 {
            let vs = ex_exact(n, &hs, None).unwrap().value;
            let vl = ex_exact(n, &hl, None).unwrap().value;
            assert!(vs <= vl, "ex({n},{small}) = {vs} > ex({n},{large}) = {vl}");
        }
    }
}

#[test]
fn search_reproduces_the_clique_closed_form() {
    for n in 1..=8 {
        for r in 1..=4usize {
            let k = build(&format!("complete:{}", r + 1));
            let searched = ex_exact_family(n, &[k], None).unwrap();
            let expect = if n <= r {
                n * (n - 1) / 2
            } else {
                turan_number(n, r).unwrap()
            };
            assert_eq!(searched.value, expect, "ex({n}, K_{})", r + 1);
            assert!(searched.optimal);
        }
    }
}

/// The star-and-matching family pins the count at three edges regardless of
/// the order: a graph with no two independent edges is a triangle or a
/// star, and the star is capped by the degree bound.
#[test]
fn star_matching_family_plateau() {
    let family = [build("star:4"), build("matching:2")];
    for n in 8..=10 {
        let res = ex_exact_family(n, &family, None).unwrap();
        assert!(res.optimal);
        assert_eq!(res.value, baseline::EX_STAR4_M2_PLATEAU, "n = {n}");
        assert!(res.value <= 16);
    }
}

#[test]
fn witnesses_are_forbidden_subgraph_free() {
    let cases: [(usize, Vec<Graph>); 3] = [
        (7, vec![build("cycle:4")]),
        (6, vec![build("star:3")]),
        (6, vec![build("complete:3"), build("cycle:4")]),
    ];
    for (n, family) in cases {
        let res = ex_exact_family(n, &family, None).unwrap();
        assert_eq!(res.witness.size(), res.value);
        for e in res.witness.edges().collect::<Vec<_>>() {
            for h in &family {
                assert!(copy_through_edge(h, &res.witness, e).unwrap().is_none());
            }
        }
    }
}
