//! Brute-force canonical forms, isomorphism and edit distance for small
//! graphs. Everything here minimises over vertex bijections directly, with
//! prefix pruning; it is meant for orders up to about 10.

use crate::error::{Error, Result};
use crate::graph::{choose2, Graph};

/// Largest order accepted by [`canonical_key`] (the key must fit in 64 bits).
pub const CANON_MAX_VERTICES: usize = 11;

/// Largest order accepted by [`edit_distance`].
pub const EDIT_MAX_VERTICES: usize = 10;

/// A canonical invariant of the isomorphism class of `g`: the minimum, over
/// all vertex orderings, of the adjacency bit string read in colex pair order.
/// Two graphs of equal order are isomorphic iff their keys are equal.
pub fn canonical_key(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > CANON_MAX_VERTICES {
        return Err(Error::budget(format!(
            "canonical form restricted to at most {CANON_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if n <= 1 {
        return Ok(0);
    }
    let total = choose2(n);
    let mut best = u64::MAX;
    let mut slots = Vec::with_capacity(n);
    canon_rec(g, &mut slots, 0, 0, 0, total, &mut best);
    Ok(best)
}

fn canon_rec(
    g: &Graph,
    slots: &mut Vec<usize>,
    used: u64,
    prefix: u64,
    bits: usize,
    total: usize,
    best: &mut u64,
) {
    let j = slots.len();
    if j == g.order() {
        *best = (*best).min(prefix);
        return;
    }
    for w in 0..g.order() {
        if (used >> w) & 1 == 1 {
            continue;
        }
        // Placing w in slot j decides the pairs (i, j) for i < j.
        let mut block = 0u64;
        for (i, &s) in slots.iter().enumerate() {
            if g.has_edge(s, w) {
                block |= 1 << (j - 1 - i);
            }
        }
        let prefix2 = (prefix << j) | block;
        let bits2 = bits + j;
        // Compare against the corresponding prefix of the incumbent.
        if *best != u64::MAX && prefix2 > *best >> (total - bits2) {
            continue;
        }
        slots.push(w);
        canon_rec(g, slots, used | (1 << w), prefix2, bits2, total, best);
        slots.pop();
    }
}

/// Whether two forbidden graphs may be treated as the same pattern for
/// colour-symmetry purposes: isomorphism when small enough to canonise,
/// and plain labelled equality beyond that. The fallback only forgoes a
/// symmetry, never invents one.
pub(crate) fn interchangeable(a: &Graph, b: &Graph) -> bool {
    if a.order() <= CANON_MAX_VERTICES && b.order() <= CANON_MAX_VERTICES {
        are_isomorphic(a, b).expect("orders within the canonisation bound")
    } else {
        a == b
    }
}

/// Isomorphism test by canonical key, with cheap invariant pre-checks.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

/// Edit distance: the minimum over all vertex bijections of the size of the
/// symmetric difference of the edge sets. Both graphs must have the same
/// order, at most [`EDIT_MAX_VERTICES`].
pub fn edit_distance(g: &Graph, h: &Graph) -> Result<usize> {
    if g.order() != h.order() {
        return Err(Error::parameter(format!(
            "edit distance needs equal orders, got {} and {}",
            g.order(),
            h.order()
        )));
    }
    let n = g.order();
    if n > EDIT_MAX_VERTICES {
        return Err(Error::budget(format!(
            "exact edit distance restricted to at most {EDIT_MAX_VERTICES} vertices, got {n}"
        )));
    }
    // Identity bijection seeds the incumbent.
    let mut best = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) != h.has_edge(u, v) {
                best += 1;
            }
        }
    }
    if best == 0 {
        return Ok(0);
    }
    let mut image = vec![usize::MAX; n];
    edit_rec(g, h, 0, 0, &mut image, 0, &mut best);
    Ok(best)
}

// Maps H-vertices 0..n to distinct G-vertices, counting mismatched pairs
// among the mapped prefix and pruning once the count reaches the incumbent.
fn edit_rec(
    g: &Graph,
    h: &Graph,
    pos: usize,
    used: u64,
    image: &mut [usize],
    mismatches: usize,
    best: &mut usize,
) {
    if mismatches >= *best {
        return;
    }
    let n = h.order();
    if pos == n {
        *best = mismatches;
        return;
    }
    for w in 0..n {
        if (used >> w) & 1 == 1 {
            continue;
        }
        let mut m = mismatches;
        for (i, &gi) in image.iter().enumerate().take(pos) {
            if h.has_edge(i, pos) != g.has_edge(gi, w) {
                m += 1;
            }
        }
        image[pos] = w;
        edit_rec(g, h, pos + 1, used | (1 << w), image, m, best);
        image[pos] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamilySpec;

    fn build(s: &str) -> Graph {
        s.parse::<GraphFamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn edit_distance_basics() {
        let c4 = build("cycle:4");
        let p4 = build("path:4");
        let k3 = build("complete:3");
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(edit_distance(&c4, &c4).unwrap(), 0);
        assert_eq!(edit_distance(&k3, &e3).unwrap(), 3);
        // Computed by minimising over all 24 bijections.
        assert_eq!(edit_distance(&c4, &p4).unwrap(), 1);
        assert!(edit_distance(&c4, &k3).is_err());
    }

    #[test]
    fn canonical_key_separates_small_graphs() {
        let c4 = build("cycle:4");
        let p4 = build("path:4");
        let m2 = build("matching:2");
        let k13 = build("star:3");
        assert!(!are_isomorphic(&c4, &p4).unwrap());
        assert!(!are_isomorphic(&p4, &m2).unwrap());
        assert!(!are_isomorphic(&p4, &k13).unwrap());
        // Relabelled C4 is isomorphic to C4.
        let relabelled = c4.permute(&[2, 0, 3, 1]);
        assert!(are_isomorphic(&c4, &relabelled).unwrap());
    }

    #[test]
    fn canonical_key_invariant_under_permutation() {
        let g = build("cm:2-2-1");
        let k = canonical_key(&g).unwrap();
        assert_eq!(canonical_key(&g.permute(&[4, 2, 0, 1, 3])).unwrap(), k);
        assert_eq!(canonical_key(&g.permute(&[1, 3, 4, 0, 2])).unwrap(), k);
    }

    #[test]
    fn self_complementary_c5() {
        let c5 = build("cycle:5");
        assert!(are_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn oversized_inputs_hit_the_size_budget() {
        let a = Graph::empty(11).unwrap();
        let b = Graph::empty(11).unwrap();
        assert!(matches!(
            edit_distance(&a, &b),
            Err(crate::Error::Budget(_))
        ));
        let big = Graph::empty(12).unwrap();
        assert!(canonical_key(&big).is_err());
    }
}
