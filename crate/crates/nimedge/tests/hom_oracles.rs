//! Homomorphism-search results checked against plain enumeration oracles.

mod common;

use common::{
    all_graphs_on, brute_contains_clique, brute_has_odd_cycle_at_most, brute_hom_exists,
    brute_isomorphic,
};
use nimedge::graph::{Graph, GraphFamilySpec};
use nimedge::{
    copy_through_edge, homomorphism_exists, is_homomorphism_critical, minimal_homomorphic_images,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn build(s: &str) -> Graph {
    s.parse::<GraphFamilySpec>().unwrap().build().unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[test]
fn hom_existence_matches_brute_enumeration() {
    let patterns = [
        build("complete:3"),
        build("cycle:5"),
        build("path:4"),
        build("cm:1-2"),
        build("star:3"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        for h in &patterns {
            assert_eq!(
                homomorphism_exists(h, &g).is_some(),
                brute_hom_exists(h, &g),
                "pattern {h:?} host {g:?}"
            );
        }
    }
}

#[test]
fn clique_homomorphism_reduces_to_clique_containment() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(&mut rng, n, p);
        for a in 2..=5 {
            let ka = Graph::complete(a).unwrap();
            assert_eq!(
                homomorphism_exists(&ka, &g).is_some(),
                brute_contains_clique(&g, a),
                "a={a} g={g:?}"
            );
        }
    }
}

#[test]
fn odd_cycle_homomorphism_reduces_to_short_odd_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.2..0.7);
        let g = random_graph(&mut rng, n, p);
        for l in [1usize, 2, 3] {
            let cycle = build(&format!("cycle:{}", 2 * l + 1));
            assert_eq!(
                homomorphism_exists(&cycle, &g).is_some(),
                brute_has_odd_cycle_at_most(&g, 2 * l + 1),
                "l={l} g={g:?}"
            );
        }
    }
}

#[test]
fn copies_are_homomorphisms() {
    let patterns = [build("complete:3"), build("cycle:4"), build("path:4")];
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let g = random_graph(&mut rng, n, 0.5);
        for h in &patterns {
            for e in g.edges().collect::<Vec<_>>() {
                if copy_through_edge(h, &g, e).unwrap().is_some() {
                    assert!(homomorphism_exists(h, &g).is_some());
                }
            }
        }
    }
}

/// Minimal homomorphic images of the 5-cycle, re-derived by enumerating
/// every graph on at most 5 vertices and testing homomorphism existence and
/// minimality by brute force.
#[test]
fn minimal_images_of_c5_by_exhaustive_enumeration() {
    let c5 = build("cycle:5");
    let mut expected: Vec<Graph> = Vec::new();
    for n in 1..=5 {
        for g in all_graphs_on(n) {
            if !brute_hom_exists(&c5, &g) {
                continue;
            }
            if !brute_minimal(&c5, &g) {
                continue;
            }
            if !expected.iter().any(|f| brute_isomorphic(f, &g)) {
                expected.push(g);
            }
        }
    }
    // The oracle finds exactly the triangle and the 5-cycle itself.
    assert_eq!(expected.len(), 2);
    let images = minimal_homomorphic_images(&c5, 5).unwrap();
    assert_eq!(images.len(), expected.len());
    for img in &images {
        assert!(expected.iter().any(|f| brute_isomorphic(f, img)));
    }
    assert!(images
        .iter()
        .any(|f| brute_isomorphic(f, &build("complete:3"))));
    assert!(images.iter().any(|f| brute_isomorphic(f, &c5)));
}

/// No proper subgraph admits a homomorphism; one-step deletions suffice
/// since homomorphism existence is monotone under subgraph inclusion.
fn brute_minimal(h: &Graph, f: &Graph) -> bool {
    for (u, v) in f.edges().collect::<Vec<_>>() {
        let mut sub = f.clone();
        sub.remove_edge(u, v);
        if brute_hom_exists(h, &sub) {
            return false;
        }
    }
    for v in 0..f.order() {
        if f.order() > 1 && brute_hom_exists(h, &f.delete_vertex(v)) {
            return false;
        }
    }
    true
}

#[test]
fn minimal_images_of_k3_and_c4() {
    let images = minimal_homomorphic_images(&build("complete:3"), 3).unwrap();
    assert_eq!(images.len(), 1);
    assert!(brute_isomorphic(&images[0], &build("complete:3")));

    let images = minimal_homomorphic_images(&build("cycle:4"), 2).unwrap();
    assert_eq!(images.len(), 1);
    assert_eq!((images[0].order(), images[0].size()), (2, 1));
}

/// Every homomorphism of the 5-cycle onto a triangle merges two pairs of
/// vertices, so singleton preimages at both ends of an edge are impossible;
/// checked over all 3^5 maps.
#[test]
fn c5_fails_criticality_by_full_enumeration() {
    let c5 = build("cycle:5");
    let k3 = build("complete:3");
    let mut singleton_pair_found = false;
    for code in 0..3usize.pow(5) {
        let mut map = [0usize; 5];
        let mut c = code;
        for slot in &mut map {
            *slot = c % 3;
            c /= 3;
        }
        if !c5.edges().all(|(a, b)| k3.has_edge(map[a], map[b])) {
            continue;
        }
        for (u, v) in k3.edges() {
            let cu = map.iter().filter(|&&x| x == u).count();
            let cv = map.iter().filter(|&&x| x == v).count();
            if cu == 1 && cv == 1 {
                singleton_pair_found = true;
            }
        }
    }
    assert!(!singleton_pair_found);
    assert!(!is_homomorphism_critical(&c5).unwrap());
}
