//! NIM-edge computation and exact maximisation.
//!
//! Given forbidden graphs `H_1..H_k` and a `k`-edge-colouring of `K_n`, an
//! edge of colour `i` is a *NIM-edge* if its colour class contains no copy
//! of `H_i` through it. [`nim_set`] reports the NIM edge set with a witness
//! copy for every non-NIM edge; [`nim_max_exact`] maximises the NIM count
//! over all colourings by branch-and-bound in lexicographic pair order.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::colouring::{blow_up, is_feasible, EdgeColouring, TemplateColouring};
use crate::error::{Error, Result};
use crate::graph::{
    choose2, pair_index, pairs, turan_number, turan_part_sizes, BitIter, Graph, VertexSet,
    MAX_VERTICES,
};
use crate::hom::{copy_through_edge, visit_copies_through_edge, Embedding};

/// Run `nim_set` edge tests in parallel only above this many pairs.
const PARALLEL_PAIR_THRESHOLD: usize = 256;

/// The NIM edge set of a colouring, with per-colour NIM subgraphs and a
/// verified witness copy for every non-NIM edge.
#[derive(Clone, Debug)]
pub struct NimReport {
    n: usize,
    nim_graph: Graph,
    per_colour_nim: Vec<Graph>,
    witnesses: BTreeMap<(usize, usize), Embedding>,
}

impl NimReport {
    /// `|NIM|`: the number of NIM-edges.
    pub fn count(&self) -> usize {
        self.nim_graph.size()
    }

    /// NIM edges in lexicographic pair order.
    pub fn nim_edges(&self) -> Vec<(usize, usize)> {
        self.nim_graph.edges().collect()
    }

    /// The spanning subgraph of `K_n` on exactly the NIM edges.
    pub fn nim_graph(&self) -> &Graph {
        &self.nim_graph
    }

    /// The colour-`i` NIM subgraph (`i` is 1-based).
    pub fn per_colour_nim(&self) -> &[Graph] {
        &self.per_colour_nim
    }

    pub fn is_nim(&self, u: usize, v: usize) -> bool {
        self.nim_graph.has_edge(u, v)
    }

    pub fn nim_degree(&self, v: usize) -> usize {
        self.nim_graph.degree(v)
    }

    /// Witness copies keyed by non-NIM edge.
    pub fn witnesses(&self) -> &BTreeMap<(usize, usize), Embedding> {
        &self.witnesses
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

/// Computes the NIM edge set of `colouring` with respect to `hs` (one
/// forbidden graph per colour). Edge tests are independent and run in
/// parallel on large instances; the result does not depend on the worker
/// count.
pub fn nim_set(colouring: &EdgeColouring, hs: &[Graph]) -> Result<NimReport> {
    let n = colouring.order();
    let k = colouring.colour_count();
    if hs.len() != k {
        return Err(Error::parameter(format!(
            "expected {k} forbidden graphs, got {}",
            hs.len()
        )));
    }
    let classes = colouring.colour_classes();
    let pair_list: Vec<(usize, usize)> = pairs(n).collect();
    let test = |&(u, v): &(usize, usize)| -> Option<Embedding> {
        let c = colouring.colour(u, v) as usize;
        copy_through_edge(&hs[c - 1], &classes[c - 1], (u, v))
            .expect("every edge lies in its own colour class")
    };
    let results: Vec<Option<Embedding>> = if pair_list.len() >= PARALLEL_PAIR_THRESHOLD {
        pair_list.par_iter().map(test).collect()
    } else {
        pair_list.iter().map(test).collect()
    };

    let mut nim_graph = Graph::empty(n)?;
    let mut per_colour_nim: Vec<Graph> = (0..k).map(|_| Graph::empty(n)).collect::<Result<_>>()?;
    let mut witnesses = BTreeMap::new();
    for (&(u, v), found) in pair_list.iter().zip(results) {
        let c = colouring.colour(u, v) as usize;
        match found {
            None => {
                nim_graph.add_edge(u, v);
                per_colour_nim[c - 1].add_edge(u, v);
            }
            Some(emb) => {
                assert!(
                    emb.verify(&hs[c - 1], &classes[c - 1], true)
                        && emb.covers_edge(&hs[c - 1], u, v),
                    "witness copy failed re-verification"
                );
                witnesses.insert((u, v), emb);
            }
        }
    }
    Ok(NimReport {
        n,
        nim_graph,
        per_colour_nim,
        witnesses,
    })
}

/// Outcome of an exact search: the best value found, its witness colouring,
/// whether the search space was exhausted, and the node count.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub value: usize,
    pub witness: Option<EdgeColouring>,
    pub optimal: bool,
    pub nodes: u64,
    pub budget_hit: bool,
}

/// Maximises the NIM count over all `k`-edge-colourings of `K_n` by
/// branch-and-bound.
///
/// Pairs are coloured in lexicographic order. An edge is flagged as soon as
/// it lies in a monochromatic copy within the current partial colouring
/// (such an edge can never become a NIM-edge again), and a branch is cut
/// once the unflagged count cannot beat the incumbent. Colours with
/// isomorphic forbidden graphs are interchangeable and are quotiented by
/// first-use order, so the witness is the lexicographically least optimal
/// colouring in canonical form.
pub fn nim_max_exact(n: usize, hs: &[Graph], budget: Option<u64>) -> Result<SearchOutcome> {
    if hs.is_empty() {
        return Err(Error::parameter("at least one forbidden graph is required"));
    }
    if n > MAX_VERTICES {
        return Err(Error::parameter(format!(
            "order {n} exceeds the supported maximum {MAX_VERTICES}"
        )));
    }
    let k = hs.len();
    let m = choose2(n);
    if m == 0 {
        return Ok(SearchOutcome {
            value: 0,
            witness: Some(EdgeColouring::from_fn(n, k, |_, _| 1)?),
            optimal: true,
            nodes: 0,
            budget_hit: false,
        });
    }

    let prev_in_group = interchange_predecessors(hs);
    let mut state = MaxSearch {
        n,
        hs,
        pair_list: pairs(n).collect(),
        prev_in_group,
        classes: (0..k).map(|_| Graph::empty(n)).collect::<Result<_>>()?,
        colours: vec![0; m],
        flags: vec![false; m],
        undo: Vec::new(),
        flagged: 0,
        used: vec![0; k],
        best: -1,
        best_witness: vec![0; m],
        nodes: 0,
        budget,
        budget_hit: false,
    };
    state.run(0);

    let value = state.best.max(0) as usize;
    let witness = if state.best >= 0 {
        let w = state.best_witness;
        Some(EdgeColouring::from_fn(n, k, |u, v| w[pair_index(n, u, v)])?)
    } else {
        None
    };
    Ok(SearchOutcome {
        value,
        witness,
        optimal: !state.budget_hit,
        nodes: state.nodes,
        budget_hit: state.budget_hit,
    })
}

/// For each colour, the previous colour of the same interchangeability
/// group (isomorphic forbidden graphs), if any. Canonical colourings must
/// use that previous colour somewhere first.
fn interchange_predecessors(hs: &[Graph]) -> Vec<Option<usize>> {
    (0..hs.len())
        .map(|c| {
            (0..c)
                .rev()
                .find(|&p| crate::iso::interchangeable(&hs[p], &hs[c]))
        })
        .collect()
}

struct MaxSearch<'a> {
    n: usize,
    hs: &'a [Graph],
    pair_list: Vec<(usize, usize)>,
    prev_in_group: Vec<Option<usize>>,
    classes: Vec<Graph>,
    colours: Vec<u8>,
    flags: Vec<bool>,
    undo: Vec<usize>,
    flagged: usize,
    used: Vec<u32>,
    best: i64,
    best_witness: Vec<u8>,
    nodes: u64,
    budget: Option<u64>,
    budget_hit: bool,
}

impl MaxSearch<'_> {
    fn run(&mut self, pos: usize) {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.budget_hit = true;
                return;
            }
        }
        let m = self.pair_list.len();
        if (m - self.flagged) as i64 <= self.best {
            return;
        }
        if pos == m {
            self.best = (m - self.flagged) as i64;
            self.best_witness.copy_from_slice(&self.colours);
            return;
        }
        let (u, v) = self.pair_list[pos];
        for c0 in 0..self.hs.len() {
            if let Some(p) = self.prev_in_group[c0] {
                if self.used[p] == 0 {
                    continue;
                }
            }
            self.classes[c0].add_edge(u, v);
            self.colours[pos] = (c0 + 1) as u8;
            self.used[c0] += 1;
            let undo_mark = self.undo.len();
            self.flag_new_copies(c0, (u, v));

            self.run(pos + 1);

            while self.undo.len() > undo_mark {
                let i = self.undo.pop().expect("undo entry");
                self.flags[i] = false;
                self.flagged -= 1;
            }
            self.used[c0] -= 1;
            self.colours[pos] = 0;
            self.classes[c0].remove_edge(u, v);
            if self.budget_hit {
                return;
            }
        }
    }

    /// Every copy completed by the newly coloured pair permanently pins all
    /// of its edges as non-NIM; record them for undo.
    fn flag_new_copies(&mut self, c0: usize, e: (usize, usize)) {
        let MaxSearch {
            n,
            hs,
            classes,
            flags,
            undo,
            flagged,
            ..
        } = self;
        let h = &hs[c0];
        let class = &classes[c0];
        visit_copies_through_edge(h, class, e, &mut |map| {
            for (a, b) in h.edges() {
                let (x, y) = if map[a] < map[b] {
                    (map[a], map[b])
                } else {
                    (map[b], map[a])
                };
                let idx = pair_index(*n, x, y);
                if !flags[idx] {
                    flags[idx] = true;
                    undo.push(idx);
                    *flagged += 1;
                }
            }
            true
        });
    }
}

/// Builds the balanced blow-up of a feasible template on `n` vertices and
/// returns it with its verified NIM count.
///
/// When every forbidden graph is connected, or the template uses a single
/// colour on all points, the count is guaranteed to reach the Turán number
/// `t(n, r)`; that guarantee is re-checked and a violation is an error.
pub fn blowup_lower_bound(
    hs: &[Graph],
    template: &TemplateColouring,
    n: usize,
) -> Result<(EdgeColouring, usize)> {
    let verdict = is_feasible(template, hs)?;
    if !verdict.feasible() {
        return Err(Error::parameter(format!(
            "template is not feasible: {:?}",
            verdict.violation
        )));
    }
    let r = template.points();
    if n < r {
        return Err(Error::parameter(format!(
            "need n >= {r} template points, got n={n}"
        )));
    }
    let colouring = blow_up(template, &turan_part_sizes(n, r))?;
    let count = nim_set(&colouring, hs)?.count();
    let guaranteed = hs.iter().all(|h| h.is_connected()) || template.point_colour_set().len() == 1;
    if guaranteed {
        let bound = turan_number(n, r)?;
        if count < bound {
            return Err(Error::Verification(format!(
                "blow-up NIM count {count} fell below the guaranteed t({n},{r}) = {bound}"
            )));
        }
    }
    Ok((colouring, count))
}

/// Packs `k - 1` edge-disjoint placements of a `T`-free host (disjoint
/// `K_h` blocks, `h = v(T) - 1`) into `K_n` and colours the leftovers with
/// colour `k`. Every edge of a placement is then a NIM-edge for `T`.
///
/// Placements start from seeded random permutations (ChaCha8; identical
/// seeds give identical colourings) and collide conflicts away: while two
/// placements share an edge `uv`, the lowest-index vertex `w` at distance
/// at least 3 from `v` in the union of all placements swaps roles with `v`
/// in the first placement. Each swap removes at least one conflict and
/// creates none.
pub fn overlay_construction(t: &Graph, k: usize, n: usize, seed: u64) -> Result<EdgeColouring> {
    if t.order() < 2 || !t.is_connected() || t.size() != t.order() - 1 {
        return Err(Error::parameter(
            "overlay host requires T to be a tree on at least 2 vertices",
        ));
    }
    if k == 0 {
        return Err(Error::parameter("colour count must be at least 1"));
    }
    if n > MAX_VERTICES {
        return Err(Error::parameter(format!(
            "order {n} exceeds the supported maximum {MAX_VERTICES}"
        )));
    }
    if k == 1 {
        return EdgeColouring::uniform(n, 1, 1);
    }
    let h = t.order() - 1;
    let mut host = Graph::empty(n)?;
    for block in 0..n / h {
        for a in block * h..(block + 1) * h {
            for b in a + 1..(block + 1) * h {
                host.add_edge(a, b);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut placements: Vec<Graph> = (0..k - 1)
        .map(|_| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            host.permute(&perm)
        })
        .collect();

    let mut remaining = count_conflicts(&placements) + 1;
    while let Some((i, _, _, v)) = first_conflict(&placements) {
        if remaining == 0 {
            return Err(Error::Construction(
                "conflict switching failed to converge".into(),
            ));
        }
        remaining -= 1;
        let union = union_graph(n, &placements)?;
        let dist = bfs_distances(&union, v);
        let w = (0..n).find(|&w| dist[w] >= 3).ok_or_else(|| {
            Error::Construction(format!(
                "no vertex at distance >= 3 from {v}; n = {n} is too small for k = {k}, h = {h}"
            ))
        })?;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(v, w);
        placements[i] = placements[i].permute(&perm);
    }

    EdgeColouring::from_fn(n, k, |u, v| {
        for (i, f) in placements.iter().enumerate() {
            if f.has_edge(u, v) {
                return (i + 1) as u8;
            }
        }
        k as u8
    })
}

fn first_conflict(placements: &[Graph]) -> Option<(usize, usize, usize, usize)> {
    let n = placements.first().map_or(0, |g| g.order());
    for i in 0..placements.len() {
        for j in i + 1..placements.len() {
            for u in 0..n {
                let both = placements[i].neighbours(u) & placements[j].neighbours(u);
                let ahead = both & !crate::graph::mask_n(u + 1);
                if ahead != 0 {
                    let v = ahead.trailing_zeros() as usize;
                    return Some((i, j, u, v));
                }
            }
        }
    }
    None
}

fn count_conflicts(placements: &[Graph]) -> usize {
    let n = placements.first().map_or(0, |g| g.order());
    let mut count = 0;
    for i in 0..placements.len() {
        for j in i + 1..placements.len() {
            for u in 0..n {
                let both = placements[i].neighbours(u) & placements[j].neighbours(u);
                count += (both & !crate::graph::mask_n(u + 1)).count_ones() as usize;
            }
        }
    }
    count
}

fn union_graph(n: usize, placements: &[Graph]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for f in placements {
        for (u, v) in f.edges() {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

fn bfs_distances(g: &Graph, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[start] = 0;
    let mut frontier: VertexSet = (1 as VertexSet) << start;
    let mut seen = frontier;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next: VertexSet = 0;
        for v in BitIter(frontier) {
            next |= g.neighbours(v);
        }
        frontier = next & !seen;
        seen |= next;
        for v in BitIter(frontier) {
            dist[v] = d;
        }
    }
    dist
}

/// Iteratively strips vertices of deficient NIM-degree: while some vertex
/// has NIM-degree below the minimum degree of the Turán graph `T(i, r)` at
/// the current order `i`, the lowest-index such vertex is removed and NIM
/// is recomputed on the restriction. Returns the `(order, nim count)` trace
/// including the initial colouring.
pub fn peel_min_degree(
    colouring: &EdgeColouring,
    hs: &[Graph],
    r: usize,
) -> Result<Vec<(usize, usize)>> {
    if r == 0 {
        return Err(Error::parameter("r must be at least 1"));
    }
    let mut cur = colouring.clone();
    let mut trace = Vec::new();
    loop {
        let i = cur.order();
        let report = nim_set(&cur, hs)?;
        trace.push((i, report.count()));
        if i == 0 {
            break;
        }
        let threshold = turan_min_degree(i, r);
        match (0..i).find(|&v| report.nim_degree(v) < threshold) {
            Some(v) => cur = cur.delete_vertex(v),
            None => break,
        }
    }
    Ok(trace)
}

/// Minimum degree of the Turán graph `T(n, r)`.
pub fn turan_min_degree(n: usize, r: usize) -> usize {
    n - n.div_ceil(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamilySpec;

    fn build(s: &str) -> Graph {
        s.parse::<GraphFamilySpec>().unwrap().build().unwrap()
    }

    fn pentagon_split(n: usize) -> EdgeColouring {
        let c5 = build("cycle:5");
        EdgeColouring::from_fn(n, 2, |u, v| if c5.has_edge(u, v) { 1 } else { 2 }).unwrap()
    }

    fn pentagon_template() -> TemplateColouring {
        let c5 = build("cycle:5");
        let pcolour = pairs(5)
            .map(|(i, j)| if c5.has_edge(i, j) { 1 } else { 2 })
            .collect();
        TemplateColouring::new(5, 3, vec![3; 5], pcolour).unwrap()
    }

    #[test]
    fn nim_set_on_pentagon_colouring() {
        let k3 = build("complete:3");
        let report = nim_set(&pentagon_split(5), &[k3.clone(), k3]).unwrap();
        assert_eq!(report.count(), 10); // below the Ramsey number, everything survives
        assert!(report.witnesses().is_empty());
    }

    #[test]
    fn nim_set_on_monochromatic_k4() {
        let k3 = build("complete:3");
        let mono = EdgeColouring::uniform(4, 2, 1).unwrap();
        let report = nim_set(&mono, &[k3.clone(), k3]).unwrap();
        assert_eq!(report.count(), 0);
        assert_eq!(report.witnesses().len(), 6);
        assert_eq!(
            report.per_colour_nim()[0].size() + report.per_colour_nim()[1].size(),
            0
        );
    }

    #[test]
    fn nim_set_blow_up_reaches_turan_count() {
        let k3 = build("complete:3");
        let hs = vec![k3.clone(), k3.clone(), k3];
        let b = blow_up(&pentagon_template(), &[10; 5]).unwrap();
        let report = nim_set(&b, &hs).unwrap();
        assert_eq!(report.count(), 1000);
    }

    #[test]
    fn nim_set_single_colour() {
        // k = 1: edges in no copy at all.
        let k3 = build("complete:3");
        let mono = EdgeColouring::uniform(4, 1, 1).unwrap();
        assert_eq!(
            nim_set(&mono, std::slice::from_ref(&k3)).unwrap().count(),
            0
        );
        let mono5 = EdgeColouring::uniform(5, 1, 1).unwrap();
        let c6 = build("cycle:6");
        assert_eq!(nim_set(&mono5, &[c6]).unwrap().count(), 10);
    }

    #[test]
    fn nim_max_small_triangle_cases() {
        let k3 = build("complete:3");
        let hs = vec![k3.clone(), k3.clone()];
        let out = nim_max_exact(4, &hs, None).unwrap();
        assert_eq!(out.value, 6);
        assert!(out.optimal);
        let out = nim_max_exact(5, &hs, None).unwrap();
        assert_eq!(out.value, 10);
        assert!(out.optimal);
        let w = out.witness.unwrap();
        assert_eq!(nim_set(&w, &hs).unwrap().count(), 10);
    }

    #[test]
    fn nim_max_budget_abort() {
        let k3 = build("complete:3");
        let out = nim_max_exact(7, &[k3.clone(), k3], Some(50)).unwrap();
        assert!(out.budget_hit);
        assert!(!out.optimal);
        assert!(out.nodes >= 50);
    }

    #[test]
    fn nim_max_trivial_orders() {
        let k3 = build("complete:3");
        let out = nim_max_exact(1, &[k3], None).unwrap();
        assert_eq!(out.value, 0);
        assert!(out.optimal);
    }

    #[test]
    fn nim_max_witness_is_deterministic() {
        let k3 = build("complete:3");
        let hs = vec![k3.clone(), k3.clone()];
        let a = nim_max_exact(5, &hs, None).unwrap();
        let b = nim_max_exact(5, &hs, None).unwrap();
        assert_eq!(a.witness.unwrap(), b.witness.unwrap());
        assert_eq!(a.nodes, b.nodes);
    }

    #[test]
    fn blowup_lower_bound_matches_turan() {
        let k3 = build("complete:3");
        let hs = vec![k3.clone(), k3.clone(), k3];
        let (_, count) = blowup_lower_bound(&hs, &pentagon_template(), 20).unwrap();
        assert!(count >= 160);
        // Two points, both coloured 1, cross pairs coloured 2.
        let t2 = TemplateColouring::new(2, 2, vec![1, 1], vec![2]).unwrap();
        let hs2 = vec![build("complete:3"), build("complete:3")];
        let (_, count) = blowup_lower_bound(&hs2, &t2, 10).unwrap();
        assert!(count >= 25);
    }

    #[test]
    fn blowup_lower_bound_rejects_infeasible() {
        let t = TemplateColouring::new(2, 2, vec![1, 1], vec![1]).unwrap();
        let hs = vec![build("complete:3"), build("complete:3")];
        assert!(blowup_lower_bound(&hs, &t, 10).is_err());
    }

    #[test]
    fn overlay_two_colours_has_no_conflicts() {
        let t = build("path:3");
        let col = overlay_construction(&t, 2, 20, 7).unwrap();
        // Colour 1 is a single permuted host: a perfect matching on 20 vertices.
        assert_eq!(col.colour_class(1).unwrap().size(), 10);
    }

    #[test]
    fn overlay_placements_edge_disjoint_and_seeded() {
        let t = build("path:3"); // h = 2, host is a perfect matching
        let a = overlay_construction(&t, 3, 36, 42).unwrap();
        let b = overlay_construction(&t, 3, 36, 42).unwrap();
        assert_eq!(a, b);
        let c1 = a.colour_class(1).unwrap();
        let c2 = a.colour_class(2).unwrap();
        assert_eq!(c1.size(), 18);
        assert_eq!(c2.size(), 18);
        // Disjointness is structural: classes partition the pairs.
        let p3 = build("path:3");
        let report = nim_set(&a, &[p3.clone(), p3.clone(), p3]).unwrap();
        assert!(report.count() >= 36);
    }

    #[test]
    fn overlay_rejects_non_trees() {
        assert!(overlay_construction(&build("cycle:4"), 3, 36, 0).is_err());
        assert!(overlay_construction(&build("matching:2"), 3, 36, 0).is_err());
    }

    #[test]
    fn overlay_fails_cleanly_when_order_is_too_small() {
        // Two placements on two vertices are forced onto the same edge and
        // no vertex is far enough away to switch with.
        let p3 = build("path:3");
        let err = overlay_construction(&p3, 3, 2, 0).unwrap_err();
        assert!(matches!(err, crate::Error::Construction(_)), "got {err:?}");
    }

    #[test]
    fn peel_rejects_zero_parts() {
        let k3 = build("complete:3");
        let mono = EdgeColouring::uniform(4, 1, 1).unwrap();
        assert!(peel_min_degree(&mono, &[k3], 0).is_err());
    }

    #[test]
    fn peel_keeps_balanced_blowup_intact() {
        let k3 = build("complete:3");
        let hs = vec![k3.clone(), k3.clone(), k3];
        let (col, _) = blowup_lower_bound(&hs, &pentagon_template(), 50).unwrap();
        let trace = peel_min_degree(&col, &hs, 5).unwrap();
        assert_eq!(trace, vec![(50, 1000)]);
    }

    #[test]
    fn peel_strips_monochromatic_clique() {
        let k3 = build("complete:3");
        let hs = vec![k3.clone(), k3];
        let mono = EdgeColouring::uniform(6, 2, 1).unwrap();
        let trace = peel_min_degree(&mono, &hs, 2).unwrap();
        // Every NIM-degree is 0 while triangles persist; at order 2 the lone
        // edge has no room for a triangle, becomes NIM, and peeling stops.
        assert_eq!(trace, vec![(6, 0), (5, 0), (4, 0), (3, 0), (2, 1)]);
    }

    #[test]
    fn turan_min_degree_formula() {
        assert_eq!(turan_min_degree(50, 5), 40);
        assert_eq!(turan_min_degree(6, 2), 3);
        assert_eq!(turan_min_degree(1, 4), 0);
        assert_eq!(turan_min_degree(7, 3), 4);
    }
}
