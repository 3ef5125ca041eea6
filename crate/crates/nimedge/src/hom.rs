//! Homomorphism and subgraph-copy search.
//!
//! Both searches backtrack over the vertices of the pattern `H` in a
//! most-constrained-first order (most already-placed neighbours, then degree
//! descending, then lowest index) with bitmask candidate filtering against
//! the host `G`. Candidates are tried in ascending host-vertex order, so
//! returned witnesses are deterministic.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{mask_n, BitIter, Graph, VertexSet};
use crate::iso::canonical_key;

/// Largest pattern order accepted by the image-enumeration operations.
pub const HOM_PATTERN_MAX_VERTICES: usize = 8;

/// A vertex map from a pattern graph `H` into a host graph `G`.
///
/// Every edge of `H` maps to an edge of `G`; the map is injective when it
/// witnesses a copy, and not necessarily injective when it witnesses a
/// homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    /// Image of pattern vertex `v`.
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.map
    }

    /// Checks that every `H`-edge maps to a `G`-edge (and injectivity when
    /// requested).
    pub fn verify(&self, h: &Graph, g: &Graph, injective: bool) -> bool {
        if self.map.len() != h.order() || self.map.iter().any(|&x| x >= g.order()) {
            return false;
        }
        if injective {
            let mut seen: VertexSet = 0;
            for &x in &self.map {
                if (seen >> x) & 1 == 1 {
                    return false;
                }
                seen |= 1 << x;
            }
        }
        h.edges().all(|(a, b)| g.has_edge(self.map[a], self.map[b]))
    }

    /// True if some `H`-edge maps onto the unordered host pair `{u, v}`.
    pub fn covers_edge(&self, h: &Graph, u: usize, v: usize) -> bool {
        h.edges().any(|(a, b)| {
            (self.map[a] == u && self.map[b] == v) || (self.map[a] == v && self.map[b] == u)
        })
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}->{x}")?;
        }
        Ok(())
    }
}

/// Assignment order: repeatedly pick the vertex with the most already-placed
/// neighbours, breaking ties by higher degree, then by lower index. Vertices
/// in `pre_placed` are excluded.
fn assignment_order(h: &Graph, pre_placed: VertexSet) -> Vec<usize> {
    let n = h.order();
    let mut placed = pre_placed;
    let remaining = n - placed.count_ones() as usize;
    let mut order = Vec::with_capacity(remaining);
    for _ in 0..remaining {
        let mut best: Option<(usize, usize, usize)> = None; // (placed-nbrs, degree, vertex)
        for v in 0..n {
            if (placed >> v) & 1 == 1 {
                continue;
            }
            let pn = (h.neighbours(v) & placed).count_ones() as usize;
            let d = h.degree(v);
            let better = match best {
                None => true,
                Some((bpn, bd, bv)) => {
                    (pn, d, std::cmp::Reverse(v)) > (bpn, bd, std::cmp::Reverse(bv))
                }
            };
            if better {
                best = Some((pn, d, v));
            }
        }
        let (_, _, v) = best.expect("remaining vertex exists");
        order.push(v);
        placed |= 1 << v;
    }
    order
}

struct Searcher<'a> {
    h: &'a Graph,
    g: &'a Graph,
    order: Vec<usize>,
    injective: bool,
}

impl<'a> Searcher<'a> {
    /// Visits complete assignments; the visitor returns `false` to stop the
    /// whole search. Returns `false` if the search was stopped early.
    fn run(
        &self,
        map: &mut Vec<usize>,
        used: VertexSet,
        pos: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if pos == self.order.len() {
            return visit(map);
        }
        let v = self.order[pos];
        let mut cand = mask_n(self.g.order());
        for u in BitIter(self.h.neighbours(v)) {
            if map[u] != usize::MAX {
                cand &= self.g.neighbours(map[u]);
            }
        }
        if self.injective {
            cand &= !used;
        }
        for x in BitIter(cand) {
            map[v] = x;
            if !self.run(map, used | (1 << x), pos + 1, visit) {
                map[v] = usize::MAX;
                return false;
            }
            map[v] = usize::MAX;
        }
        true
    }
}

fn search_first(
    h: &Graph,
    g: &Graph,
    anchors: &[(usize, usize)],
    injective: bool,
) -> Option<Embedding> {
    let mut found = None;
    search_visit(h, g, anchors, injective, &mut |map| {
        found = Some(Embedding { map: map.to_vec() });
        false
    });
    found
}

/// Core driver: fixes `anchors` (pattern vertex -> host vertex), then
/// backtracks over the remaining pattern vertices.
fn search_visit(
    h: &Graph,
    g: &Graph,
    anchors: &[(usize, usize)],
    injective: bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let mut map = vec![usize::MAX; h.order()];
    let mut pre: VertexSet = 0;
    let mut used: VertexSet = 0;
    for &(a, x) in anchors {
        map[a] = x;
        pre |= 1 << a;
        used |= 1 << x;
    }
    let order = assignment_order(h, pre);
    let searcher = Searcher {
        h,
        g,
        order,
        injective,
    };
    searcher.run(&mut map, used, 0, visit)
}

/// Finds a homomorphism from `H` into `G`, or `None`.
///
/// Isolated vertices of `H` land on the lowest-index host vertex.
pub fn homomorphism_exists(h: &Graph, g: &Graph) -> Option<Embedding> {
    let emb = search_first(h, g, &[], false)?;
    assert!(emb.verify(h, g, false), "homomorphism failed self-check");
    Some(emb)
}

/// Finds a homomorphism from `H` into `G` mapping some `H`-edge onto the
/// host pair `{u, v}`, or `None`. This is the incremental form of the
/// monochromatic-homomorphic-copy test: a new copy created by inserting the
/// edge `{u, v}` must use it.
pub fn hom_exists_through_edge(h: &Graph, g: &Graph, e: (usize, usize)) -> Option<Embedding> {
    let (u, v) = e;
    for (a, b) in h.edges() {
        for (x, y) in [(u, v), (v, u)] {
            if let Some(emb) = search_first(h, g, &[(a, x), (b, y)], false) {
                assert!(emb.verify(h, g, false), "homomorphism failed self-check");
                return Some(emb);
            }
        }
    }
    None
}

/// Finds an injective copy of `H` in `G` with an `H`-edge on the edge `e` of
/// `G`, or `None`. Iterates over all edges of `H` as the anchor.
pub fn copy_through_edge(h: &Graph, g: &Graph, e: (usize, usize)) -> Result<Option<Embedding>> {
    let (u, v) = e;
    if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
        return Err(Error::parameter(format!(
            "({u},{v}) is not an edge of the host graph"
        )));
    }
    for (a, b) in h.edges() {
        for (x, y) in [(u, v), (v, u)] {
            if let Some(emb) = search_first(h, g, &[(a, x), (b, y)], true) {
                assert!(emb.verify(h, g, true), "copy failed self-check");
                return Ok(Some(emb));
            }
        }
    }
    Ok(None)
}

/// Visits every injective copy of `H` in `G` that covers the edge `e`
/// (embeddings may repeat under pattern automorphisms). The visitor returns
/// `false` to stop early.
pub(crate) fn visit_copies_through_edge(
    h: &Graph,
    g: &Graph,
    e: (usize, usize),
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let (u, v) = e;
    for (a, b) in h.edges() {
        for (x, y) in [(u, v), (v, u)] {
            if !search_visit(h, g, &[(a, x), (b, y)], true, visit) {
                return;
            }
        }
    }
}

/// All minimal homomorphic images of `H` with at most `max_order` vertices,
/// up to isomorphism: graphs `F` admitting a homomorphism from `H` such that
/// no proper subgraph of `F` does.
///
/// Every such `F` is the image of a homomorphism, i.e. a quotient of `H` by
/// a partition into independent sets, so the enumeration walks set
/// partitions rather than all graphs.
pub fn minimal_homomorphic_images(h: &Graph, max_order: usize) -> Result<Vec<Graph>> {
    if h.order() > HOM_PATTERN_MAX_VERTICES {
        return Err(Error::budget(format!(
            "image enumeration restricted to patterns on at most {HOM_PATTERN_MAX_VERTICES} vertices, got {}",
            h.order()
        )));
    }
    if max_order == 0 {
        return Err(Error::parameter("max_order must be at least 1"));
    }
    if h.order() == 0 {
        return Ok(Vec::new());
    }

    let mut class_of = vec![usize::MAX; h.order()];
    let mut class_masks: Vec<VertexSet> = Vec::new();
    let mut seen_keys = Vec::new();
    let mut out: Vec<(usize, usize, u64, Graph)> = Vec::new();
    partitions_rec(
        h,
        0,
        &mut class_of,
        &mut class_masks,
        max_order,
        &mut |masks| {
            let q = quotient(h, masks);
            if !is_minimal_image(h, &q) {
                return Ok(());
            }
            let key = canonical_key(&q)?;
            if !seen_keys.contains(&(q.order(), key)) {
                seen_keys.push((q.order(), key));
                out.push((q.order(), q.size(), key, q));
            }
            Ok(())
        },
    )?;
    out.sort_by_key(|&(n, m, key, _)| (n, m, key));
    Ok(out.into_iter().map(|(_, _, _, q)| q).collect())
}

fn partitions_rec(
    h: &Graph,
    v: usize,
    class_of: &mut [usize],
    class_masks: &mut Vec<VertexSet>,
    max_classes: usize,
    emit: &mut dyn FnMut(&[VertexSet]) -> Result<()>,
) -> Result<()> {
    if v == h.order() {
        return emit(class_masks);
    }
    // Join an existing class whose members are all non-neighbours of v.
    for c in 0..class_masks.len() {
        if class_masks[c] & h.neighbours(v) == 0 {
            class_of[v] = c;
            class_masks[c] |= 1 << v;
            partitions_rec(h, v + 1, class_of, class_masks, max_classes, emit)?;
            class_masks[c] &= !(1 << v);
        }
    }
    // Or open a new class.
    if class_masks.len() < max_classes {
        class_of[v] = class_masks.len();
        class_masks.push(1 << v);
        partitions_rec(h, v + 1, class_of, class_masks, max_classes, emit)?;
        class_masks.pop();
    }
    class_of[v] = usize::MAX;
    Ok(())
}

fn quotient(h: &Graph, class_masks: &[VertexSet]) -> Graph {
    let t = class_masks.len();
    let mut q = Graph::empty(t).expect("quotient order bounded by pattern order");
    for i in 0..t {
        for j in i + 1..t {
            let crosses = BitIter(class_masks[i]).any(|v| h.neighbours(v) & class_masks[j] != 0);
            if crosses {
                q.add_edge(i, j);
            }
        }
    }
    q
}

fn is_minimal_image(h: &Graph, q: &Graph) -> bool {
    // A minimal image has no isolated vertices (unless it is a single point,
    // which happens only for edgeless patterns).
    if q.order() > 1 && (0..q.order()).any(|v| q.degree(v) == 0) {
        return false;
    }
    // If a proper subgraph admitted a homomorphism, some one-edge-deleted
    // subgraph would too.
    for (a, b) in q.edges() {
        let mut sub = q.clone();
        sub.remove_edge(a, b);
        if homomorphism_exists(h, &sub).is_some() {
            return false;
        }
    }
    true
}

/// Decides homomorphism-criticality of a non-bipartite pattern: for every
/// minimal homomorphic image `F` and every edge `uv` of `F` there must be a
/// homomorphism `H -> F` whose preimages of `u` and of `v` are singletons.
pub fn is_homomorphism_critical(h: &Graph) -> Result<bool> {
    if h.is_bipartite() {
        return Err(Error::parameter(
            "homomorphism-criticality is only decided for non-bipartite graphs",
        ));
    }
    if h.order() > HOM_PATTERN_MAX_VERTICES {
        return Err(Error::budget(format!(
            "criticality check restricted to at most {HOM_PATTERN_MAX_VERTICES} vertices, got {}",
            h.order()
        )));
    }
    for image in minimal_homomorphic_images(h, h.order())? {
        for (u, v) in image.edges() {
            if !hom_with_singleton_preimages(h, &image, u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exhaustive search for a homomorphism `h -> f` with `|preimage(u)| =
/// |preimage(v)| = 1`, pruning once either preimage exceeds one vertex.
fn hom_with_singleton_preimages(h: &Graph, f: &Graph, u: usize, v: usize) -> bool {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        h: &Graph,
        f: &Graph,
        order: &[usize],
        pos: usize,
        map: &mut [usize],
        cnt_u: usize,
        cnt_v: usize,
        u: usize,
        v: usize,
    ) -> bool {
        if pos == order.len() {
            return cnt_u == 1 && cnt_v == 1;
        }
        let w = order[pos];
        let mut cand = mask_n(f.order());
        for x in BitIter(h.neighbours(w)) {
            if map[x] != usize::MAX {
                cand &= f.neighbours(map[x]);
            }
        }
        for y in BitIter(cand) {
            let (mut cu, mut cv) = (cnt_u, cnt_v);
            if y == u {
                cu += 1;
            }
            if y == v {
                cv += 1;
            }
            if cu > 1 || cv > 1 {
                continue;
            }
            map[w] = y;
            if rec(h, f, order, pos + 1, map, cu, cv, u, v) {
                map[w] = usize::MAX;
                return true;
            }
            map[w] = usize::MAX;
        }
        false
    }
    let order = assignment_order(h, 0);
    let mut map = vec![usize::MAX; h.order()];
    rec(h, f, &order, 0, &mut map, 0, 0, u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamilySpec;

    fn build(s: &str) -> Graph {
        s.parse::<GraphFamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn homomorphism_existence() {
        let c5 = build("cycle:5");
        let k3 = build("complete:3");
        assert!(homomorphism_exists(&c5, &k3).is_some()); // odd closed walk in K3
        assert!(homomorphism_exists(&k3, &c5).is_none()); // C5 is triangle-free
        assert!(homomorphism_exists(&c5, &c5).is_some());
        assert!(homomorphism_exists(&c5, &build("cycle:4")).is_none()); // no odd image
    }

    #[test]
    fn hom_witnesses_verify() {
        let c5 = build("cycle:5");
        let k3 = build("complete:3");
        let emb = homomorphism_exists(&c5, &k3).unwrap();
        assert!(emb.verify(&c5, &k3, false));
        assert!(!emb.verify(&c5, &k3, true)); // cannot be injective
    }

    #[test]
    fn copies_through_edges() {
        let k3 = build("complete:3");
        let k4 = build("complete:4");
        let c4 = build("cycle:4");
        let c5 = build("cycle:5");
        assert!(copy_through_edge(&k3, &k4, (0, 1)).unwrap().is_some());
        let id = copy_through_edge(&c4, &c4, (0, 1)).unwrap().unwrap();
        assert!(id.verify(&c4, &c4, true));
        assert!(id.covers_edge(&c4, 0, 1));
        for e in c5.edges().collect::<Vec<_>>() {
            assert!(copy_through_edge(&k3, &c5, e).unwrap().is_none());
        }
        assert!(copy_through_edge(&k3, &k4, (5, 0)).is_err());
    }

    #[test]
    fn copy_handles_isolated_pattern_vertices() {
        // Triangle plus an isolated vertex needs 4 distinct host vertices.
        let h = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let k3 = build("complete:3");
        let k4 = build("complete:4");
        assert!(copy_through_edge(&h, &k3, (0, 1)).unwrap().is_none());
        assert!(copy_through_edge(&h, &k4, (0, 1)).unwrap().is_some());
    }

    #[test]
    fn through_edge_hom_matches_plain_hom_on_new_edge() {
        let c5 = build("cycle:5");
        // K4 minus an edge, adding that edge creates odd cycles through it.
        let mut g = build("complete:4");
        g.remove_edge(0, 1);
        assert!(homomorphism_exists(&c5, &g).is_some()); // triangle 0-2-3 already there
        g.add_edge(0, 1);
        assert!(hom_exists_through_edge(&c5, &g, (0, 1)).is_some());
    }

    #[test]
    fn minimal_images_of_cliques_and_cycles() {
        let k3 = build("complete:3");
        let images = minimal_homomorphic_images(&k3, 3).unwrap();
        assert_eq!(images.len(), 1);
        assert!(crate::iso::are_isomorphic(&images[0], &k3).unwrap());

        let c4 = build("cycle:4");
        let images = minimal_homomorphic_images(&c4, 2).unwrap();
        assert_eq!(images.len(), 1);
        assert_eq!((images[0].order(), images[0].size()), (2, 1)); // a single edge
    }

    #[test]
    fn image_enumeration_rejects_large_patterns() {
        let big = build("cycle:9");
        assert!(matches!(
            minimal_homomorphic_images(&big, 9),
            Err(crate::Error::Budget(_))
        ));
    }

    #[test]
    fn criticality_of_small_multipartite_graphs() {
        let k3 = build("complete:3");
        assert!(is_homomorphism_critical(&k3).unwrap());
        // K4 minus an edge is K_{1,1,2}.
        let mut k4e = build("complete:4");
        k4e.remove_edge(2, 3);
        assert!(is_homomorphism_critical(&k4e).unwrap());
        assert!(is_homomorphism_critical(&build("cycle:4")).is_err()); // bipartite rejected
    }
}
