//! Exact Turán numbers at desk scale: the maximum size of an `n`-vertex
//! graph avoiding a forbidden subgraph (or every member of a family), with
//! an extremal witness. Cliques use the closed form; everything else is
//! branch-and-bound over the edge list.

use crate::error::{Error, Result};
use crate::graph::{choose2, pairs, Graph, GraphFamilySpec};
use crate::hom::copy_through_edge;
use crate::iso::canonical_key;

/// Largest order accepted by the general (non-clique) search.
pub const EX_MAX_VERTICES: usize = 10;

/// An exact Turán computation: the maximum edge count, a forbidden-subgraph-
/// free witness of that size, and whether the search was exhausted.
#[derive(Clone, Debug)]
pub struct ExResult {
    pub value: usize,
    pub witness: Graph,
    pub optimal: bool,
    pub nodes: u64,
}

/// `ex(n, H)`: maximum size of an `H`-free graph on `n` vertices.
///
/// Complete graphs bypass the search via the Turán graph for any supported
/// `n`; general graphs are searched and restricted to
/// [`EX_MAX_VERTICES`] vertices.
pub fn ex_exact(n: usize, h: &Graph, budget: Option<u64>) -> Result<ExResult> {
    if h.size() == 0 {
        return Err(Error::parameter(
            "the forbidden graph needs at least one edge; otherwise no graph on enough vertices avoids it",
        ));
    }
    let t = h.order();
    if h.size() == choose2(t) {
        // Forbidding K_t: the Turán graph T(n, t-1) is the unique extremal graph.
        let witness = if n < t {
            Graph::complete(n)?
        } else {
            GraphFamilySpec::Turan { n, r: t - 1 }.build()?
        };
        return Ok(ExResult {
            value: witness.size(),
            witness,
            optimal: true,
            nodes: 0,
        });
    }
    ex_search(n, std::slice::from_ref(h), budget)
}

/// `ex(n, {H_1, ..., H_m})`: maximum size avoiding every listed graph.
/// The list is de-duplicated up to isomorphism before searching.
pub fn ex_exact_family(n: usize, hs: &[Graph], budget: Option<u64>) -> Result<ExResult> {
    if hs.is_empty() {
        return Err(Error::parameter("the forbidden family must be non-empty"));
    }
    if hs.iter().any(|h| h.size() == 0) {
        return Err(Error::parameter("forbidden graphs need at least one edge"));
    }
    let mut family: Vec<Graph> = Vec::new();
    let mut keys: Vec<(usize, u64)> = Vec::new();
    for h in hs {
        let key = (h.order(), canonical_key(h)?);
        if !keys.contains(&key) {
            keys.push(key);
            family.push(h.clone());
        }
    }
    ex_search(n, &family, budget)
}

fn ex_search(n: usize, family: &[Graph], budget: Option<u64>) -> Result<ExResult> {
    if n > EX_MAX_VERTICES {
        return Err(Error::budget(format!(
            "exact search restricted to at most {EX_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut state = ExSearch {
        family,
        pair_list: pairs(n).collect(),
        graph: Graph::empty(n)?,
        best: Graph::empty(n)?,
        best_size: 0,
        nodes: 0,
        budget,
        budget_hit: false,
    };
    state.run(0, 0);

    for (u, v) in state.best.edges().collect::<Vec<_>>() {
        for h in family {
            if copy_through_edge(h, &state.best, (u, v))?.is_some() {
                return Err(Error::Verification(
                    "extremal witness failed the forbidden-subgraph re-check".into(),
                ));
            }
        }
    }
    Ok(ExResult {
        value: state.best_size,
        witness: state.best,
        optimal: !state.budget_hit,
        nodes: state.nodes,
    })
}

struct ExSearch<'a> {
    family: &'a [Graph],
    pair_list: Vec<(usize, usize)>,
    graph: Graph,
    best: Graph,
    best_size: usize,
    nodes: u64,
    budget: Option<u64>,
    budget_hit: bool,
}

impl ExSearch<'_> {
    /// Decides pairs in lexicographic order, include-first. A pair can be
    /// included only if it closes no forbidden copy; a branch dies once the
    /// current size plus all undecided pairs cannot beat the incumbent.
    fn run(&mut self, pos: usize, size: usize) {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.budget_hit = true;
                return;
            }
        }
        // The empty graph seeds the incumbent, so pruning at equality is safe.
        if size + (self.pair_list.len() - pos) <= self.best_size {
            return;
        }
        if pos == self.pair_list.len() {
            self.best = self.graph.clone();
            self.best_size = size;
            return;
        }
        let (u, v) = self.pair_list[pos];
        self.graph.add_edge(u, v);
        let creates_copy = self.family.iter().any(|h| {
            copy_through_edge(h, &self.graph, (u, v))
                .expect("edge present")
                .is_some()
        });
        if !creates_copy {
            self.run(pos + 1, size + 1);
        }
        self.graph.remove_edge(u, v);
        if self.budget_hit {
            return;
        }
        self.run(pos + 1, size);
    }
}
