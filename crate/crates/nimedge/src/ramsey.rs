//! The template Ramsey quantities: `r_hom` (pair colourings with no
//! monochromatic homomorphic copy) and `r_star` (additionally colouring the
//! points, with no pair sharing a colour with an endpoint), niceness of the
//! extremal templates, and the 16-point finite-field witness for four
//! triangles.
//!
//! Searches climb `r = 1, 2, ...` and certify the answer by exhausting
//! `r + 1`. Point colours are enumerated as non-decreasing sequences,
//! minimal under renaming of colours with isomorphic forbidden graphs; pair
//! colours are canonicalised by first-use order within interchangeable
//! colour classes.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::colouring::{is_feasible, TemplateColouring};
use crate::error::{Error, Result};
use crate::graph::{choose2, pairs, Graph, VertexSet};
use crate::hom::{hom_exists_through_edge, homomorphism_exists};

/// Result of an `r_hom`/`r_star` climb: the best certified `r`, a witness
/// template at that `r`, and whether `r + 1` was exhaustively refuted.
#[derive(Clone, Debug)]
pub struct RamseyStarResult {
    pub value: usize,
    pub witness: Option<TemplateColouring>,
    pub exhausted_above: bool,
    pub nodes: u64,
}

/// True if no pair-colour class of the template contains a homomorphic copy
/// of its forbidden graph (the `r_hom` certificate; point colours ignored).
pub fn pair_classes_hom_free(template: &TemplateColouring, hs: &[Graph]) -> Result<bool> {
    if hs.len() != template.colour_count() {
        return Err(Error::parameter(format!(
            "expected {} forbidden graphs, got {}",
            template.colour_count(),
            hs.len()
        )));
    }
    for (idx, h) in hs.iter().enumerate() {
        let class = template.pair_class((idx + 1) as u8)?;
        if homomorphism_exists(h, &class).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn validate_forbidden(hs: &[Graph], require_non_bipartite: bool) -> Result<()> {
    if hs.is_empty() {
        return Err(Error::parameter("at least one forbidden graph is required"));
    }
    for (i, h) in hs.iter().enumerate() {
        if h.size() == 0 {
            return Err(Error::parameter(format!(
                "forbidden graph {} has no edges, the colouring condition degenerates",
                i + 1
            )));
        }
        if require_non_bipartite && h.is_bipartite() {
            return Err(Error::parameter(format!(
                "forbidden graph {} is bipartite: a single pair of its colour already hosts a \
                 homomorphic copy, so the colour is unusable on pairs",
                i + 1
            )));
        }
    }
    Ok(())
}

/// The homomorphic Ramsey number: the maximum `r` admitting a pair
/// colouring of `[r]` with no monochromatic homomorphic copy of any `H_i`
/// in its colour. Requires every `H_i` non-bipartite.
///
/// The witness template carries colour 1 on all singletons as a
/// placeholder; only its pair classes are certified (via
/// [`pair_classes_hom_free`]).
pub fn r_hom(hs: &[Graph], budget: Option<u64>) -> Result<RamseyStarResult> {
    validate_forbidden(hs, true)?;
    let mut search = TemplateSearch::new(hs, budget)?;
    let mut witness: Option<TemplateColouring> = None;
    let mut r = 1;
    loop {
        match search.find_pair_completion(r, None) {
            Some(pcolour) => {
                let t = TemplateColouring::new(r, hs.len(), vec![1; r], pcolour)?;
                if !pair_classes_hom_free(&t, hs)? {
                    return Err(Error::Verification("witness failed re-verification".into()));
                }
                witness = Some(t);
                r += 1;
            }
            None => {
                return Ok(RamseyStarResult {
                    value: r - 1,
                    witness,
                    exhausted_above: !search.budget_hit,
                    nodes: search.nodes,
                });
            }
        }
    }
}

/// The maximum `r` admitting a feasible colouring of the singletons and
/// pairs of `[r]`. Bipartite `H_i` are allowed: their colour simply never
/// fits on a pair.
pub fn r_star(hs: &[Graph], budget: Option<u64>) -> Result<RamseyStarResult> {
    validate_forbidden(hs, false)?;
    let mut search = TemplateSearch::new(hs, budget)?;
    let mut witness: Option<TemplateColouring> = None;
    let mut r = 1;
    loop {
        match search.find_feasible_at(r, |_| true)? {
            Some(t) => {
                witness = Some(t);
                r += 1;
            }
            None => {
                return Ok(RamseyStarResult {
                    value: r - 1,
                    witness,
                    exhausted_above: !search.budget_hit,
                    nodes: search.nodes,
                });
            }
        }
    }
}

/// Decides whether every feasible template at `r_star_value` points colours
/// all singletons alike. Returns a feasible counterexample with at least
/// two point colours when one exists. Exhaustion is mandatory, so running
/// out of budget is an error.
pub fn is_nice(
    hs: &[Graph],
    r_star_value: usize,
    budget: Option<u64>,
) -> Result<(bool, Option<TemplateColouring>)> {
    validate_forbidden(hs, false)?;
    if r_star_value == 0 {
        return Err(Error::parameter("r_star_value must be at least 1"));
    }
    let mut search = TemplateSearch::new(hs, budget)?;
    let multi_coloured = |v: &[u8]| v.iter().any(|&c| c != v[0]);
    match search.find_feasible_at(r_star_value, multi_coloured)? {
        Some(t) => Ok((false, Some(t))),
        None if search.budget_hit => Err(Error::budget(
            "niceness requires exhausting all feasible templates",
        )),
        None => Ok((true, None)),
    }
}

struct TemplateSearch<'a> {
    hs: &'a [Graph],
    k: usize,
    group_of: Vec<usize>,
    /// Within-group colour permutations as 1-based value maps, identity first.
    colour_perms: Vec<Vec<u8>>,
    nodes: u64,
    budget: Option<u64>,
    budget_hit: bool,
}

impl<'a> TemplateSearch<'a> {
    fn new(hs: &'a [Graph], budget: Option<u64>) -> Result<Self> {
        let k = hs.len();
        let mut group_of = vec![0usize; k];
        let mut representatives: Vec<usize> = Vec::new();
        for c in 0..k {
            group_of[c] = match representatives
                .iter()
                .position(|&r| crate::iso::interchangeable(&hs[r], &hs[c]))
            {
                Some(g) => g,
                None => {
                    representatives.push(c);
                    representatives.len() - 1
                }
            };
        }
        let colour_perms = (0..k as u8)
            .permutations(k)
            .filter(|p| {
                p.iter()
                    .enumerate()
                    .all(|(c, &pc)| group_of[c] == group_of[pc as usize])
            })
            .map(|p| p.into_iter().map(|c0| c0 + 1).collect::<Vec<u8>>())
            .collect();
        Ok(TemplateSearch {
            hs,
            k,
            group_of,
            colour_perms,
            nodes: 0,
            budget,
            budget_hit: false,
        })
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.budget_hit = true;
                return false;
            }
        }
        true
    }

    /// Non-decreasing point-colour sequences of length `r`, lexicographically
    /// minimal within their orbit under within-group colour renaming.
    fn canonical_vcolours(&self, r: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = Vec::with_capacity(r);
        fn rec(k: usize, r: usize, min: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if cur.len() == r {
                out.push(cur.clone());
                return;
            }
            for c in min..=k as u8 {
                cur.push(c);
                rec(k, r, c, cur, out);
                cur.pop();
            }
        }
        rec(self.k, r, 1, &mut cur, &mut out);
        out.retain(|v| self.vcolour_is_canonical(v));
        out
    }

    fn vcolour_is_canonical(&self, v: &[u8]) -> bool {
        let mut scratch: Vec<u8> = Vec::with_capacity(v.len());
        for perm in &self.colour_perms {
            scratch.clear();
            scratch.extend(v.iter().map(|&c| perm[(c - 1) as usize]));
            scratch.sort_unstable();
            if scratch.as_slice() < v {
                return false;
            }
        }
        true
    }

    /// First feasible template at `r` points whose point colouring passes
    /// `accept`, scanning canonical point colourings in lexicographic order.
    fn find_feasible_at(
        &mut self,
        r: usize,
        accept: impl Fn(&[u8]) -> bool,
    ) -> Result<Option<TemplateColouring>> {
        for vcolour in self.canonical_vcolours(r) {
            if !accept(&vcolour) {
                continue;
            }
            if let Some(pcolour) = self.find_pair_completion(r, Some(&vcolour)) {
                let t = TemplateColouring::new(r, self.k, vcolour, pcolour)?;
                if !is_feasible(&t, self.hs)?.feasible() {
                    return Err(Error::Verification("witness failed re-verification".into()));
                }
                return Ok(Some(t));
            }
            if self.budget_hit {
                return Ok(None);
            }
        }
        Ok(None)
    }

    /// Backtracks over pair colours in lexicographic pair order. With
    /// `vcolour` present, pairs avoid their endpoints' colours; in every
    /// case a colour is rejected if it would close a monochromatic
    /// homomorphic copy through the new pair. Returns the first complete
    /// assignment.
    fn find_pair_completion(&mut self, r: usize, vcolour: Option<&[u8]>) -> Option<Vec<u8>> {
        let pair_list: Vec<(usize, usize)> = pairs(r).collect();
        let vset = |c0: usize| -> VertexSet {
            vcolour.map_or(0, |v| {
                v.iter()
                    .enumerate()
                    .filter(|&(_, &vc)| vc as usize == c0 + 1)
                    .fold(0 as VertexSet, |m, (i, _)| m | (1 as VertexSet) << i)
            })
        };
        let keys: Vec<(usize, VertexSet)> = (0..self.k)
            .map(|c0| (self.group_of[c0], vset(c0)))
            .collect();
        let prev_in_class: Vec<Option<usize>> = (0..self.k)
            .map(|c| (0..c).rev().find(|&p| keys[p] == keys[c]))
            .collect();

        let mut classes: Vec<Graph> = (0..self.k)
            .map(|_| Graph::empty(r).expect("r within bounds"))
            .collect();
        let mut pcolour = vec![0u8; choose2(r)];
        let mut used = vec![0u32; self.k];
        if self.pair_rec(
            &pair_list,
            0,
            vcolour,
            &prev_in_class,
            &mut classes,
            &mut pcolour,
            &mut used,
        ) {
            Some(pcolour)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn pair_rec(
        &mut self,
        pair_list: &[(usize, usize)],
        pos: usize,
        vcolour: Option<&[u8]>,
        prev_in_class: &[Option<usize>],
        classes: &mut [Graph],
        pcolour: &mut [u8],
        used: &mut [u32],
    ) -> bool {
        if !self.tick() {
            return false;
        }
        if pos == pair_list.len() {
            return true;
        }
        let (i, j) = pair_list[pos];
        for c0 in 0..self.k {
            let c = (c0 + 1) as u8;
            if let Some(v) = vcolour {
                if v[i] == c || v[j] == c {
                    continue;
                }
            }
            if let Some(p) = prev_in_class[c0] {
                if used[p] == 0 {
                    continue;
                }
            }
            classes[c0].add_edge(i, j);
            if hom_exists_through_edge(&self.hs[c0], &classes[c0], (i, j)).is_none() {
                pcolour[pos] = c;
                used[c0] += 1;
                if self.pair_rec(
                    pair_list,
                    pos + 1,
                    vcolour,
                    prev_in_class,
                    classes,
                    pcolour,
                    used,
                ) {
                    return true;
                }
                used[c0] -= 1;
                pcolour[pos] = 0;
            }
            classes[c0].remove_edge(i, j);
            if self.budget_hit {
                return false;
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// GF(16) witness
// ---------------------------------------------------------------------------

/// Multiplication in GF(16) as binary polynomials modulo `x^4 + x + 1`.
fn gf16_mul(a: u8, b: u8) -> u8 {
    let mut a = a as u16;
    let mut b = b as u16;
    let mut acc = 0u16;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        if a & 0x10 != 0 {
            a ^= 0b1_0011;
        }
        b >>= 1;
    }
    acc as u8
}

/// The 16-point template certifying four triangle colours: points are the
/// elements of GF(16), the pair `{x, y}` takes the coset of the cubic
/// residues containing `x + y` (colours 1..3), and every singleton takes
/// colour 4. Each pair class is triangle-free because the cosets are
/// sum-free, so the template is feasible for four triangles.
pub fn gf16_witness() -> TemplateColouring {
    let mut log = [0u8; 16];
    let mut p: u8 = 1;
    for e in 0..15 {
        log[p as usize] = e;
        p = gf16_mul(p, 2);
    }
    assert_eq!(p, 1, "2 generates the multiplicative group of GF(16)");

    let pcolour = pairs(16).map(|(x, y)| log[x ^ y] % 3 + 1).collect();
    let template =
        TemplateColouring::new(16, 4, vec![4; 16], pcolour).expect("well-formed by construction");
    let triangle = Graph::complete(3).expect("triangle");
    let hs = vec![
        triangle.clone(),
        triangle.clone(),
        triangle.clone(),
        triangle,
    ];
    assert!(
        is_feasible(&template, &hs).expect("checkable").feasible(),
        "finite-field template failed the feasibility check"
    );
    template
}

// ---------------------------------------------------------------------------
// Known Ramsey numbers
// ---------------------------------------------------------------------------

/// How a table entry was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A classical value taken from the literature.
    Literature,
    /// Certified by this artifact's own exhaustive search.
    SearchCertified,
}

/// Ramsey numbers for clique tuples, each entry tagged with its provenance.
/// Tuples are stored sorted; lookups are order-insensitive.
#[derive(Clone, Debug, Default)]
pub struct KnownRamseyTable {
    entries: BTreeMap<Vec<usize>, (usize, Provenance)>,
}

impl KnownRamseyTable {
    /// The table shipped with the crate: `R(3,3) = 6` and `R(3,3,3) = 17`.
    pub fn with_known_values() -> Self {
        let mut t = KnownRamseyTable::default();
        t.entries.insert(vec![3, 3], (6, Provenance::Literature));
        t.entries
            .insert(vec![3, 3, 3], (17, Provenance::Literature));
        t
    }

    fn normalise(sizes: &[usize]) -> Vec<usize> {
        let mut s = sizes.to_vec();
        s.sort_unstable();
        s
    }

    pub fn get(&self, sizes: &[usize]) -> Option<(usize, Provenance)> {
        self.entries.get(&Self::normalise(sizes)).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, usize, Provenance)> {
        self.entries.iter().map(|(k, &(v, p))| (k, v, p))
    }

    /// Runs the exhaustive `r_hom` search on the given clique sizes and, on
    /// closure, records `R = r_hom + 1` as search-certified.
    pub fn certify_by_search(&mut self, sizes: &[usize], budget: Option<u64>) -> Result<usize> {
        if sizes.iter().any(|&a| a < 2) {
            return Err(Error::parameter("clique sizes must be at least 2"));
        }
        let hs = sizes
            .iter()
            .map(|&a| Graph::complete(a))
            .collect::<Result<Vec<_>>>()?;
        let res = r_hom(&hs, budget)?;
        if !res.exhausted_above {
            return Err(Error::budget(format!(
                "search for R{sizes:?} hit the node budget after {} nodes",
                res.nodes
            )));
        }
        let value = res.value + 1;
        self.entries
            .insert(Self::normalise(sizes), (value, Provenance::SearchCertified));
        Ok(value)
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
    fn r_hom_single_triangle() {
        let res = r_hom(&[build("complete:3")], None).unwrap();
        assert_eq!(res.value, 2);
        assert!(res.exhausted_above);
    }

    #[test]
    fn r_hom_two_pentagons() {
        let c5 = build("cycle:5");
        let res = r_hom(&[c5.clone(), c5], None).unwrap();
        assert_eq!(res.value, 4);
        assert!(res.exhausted_above);
    }

    #[test]
    fn r_hom_rejects_bipartite() {
        assert!(r_hom(&[build("cycle:4")], None).is_err());
    }

    #[test]
    fn r_star_two_colour_closed_form_examples() {
        let k3 = build("complete:3");
        let k4 = build("complete:4");
        let res = r_star(&[k3.clone(), k4], None).unwrap();
        assert_eq!(res.value, 3);
        assert!(res.exhausted_above);
        let res = r_star(&[k3.clone(), k3.clone()], None).unwrap();
        assert_eq!(res.value, 2);
    }

    #[test]
    fn r_star_single_colour() {
        // With one colour no pair can dodge its endpoints, so only the
        // single point survives.
        let res = r_star(&[build("complete:3")], None).unwrap();
        assert_eq!(res.value, 1);
        assert!(res.exhausted_above);
    }

    #[test]
    fn r_star_handles_bipartite_entries() {
        // A bipartite colour never sits on a pair, so r* collapses to the
        // other colour's constraint.
        let res = r_star(&[build("complete:3"), build("cycle:4")], None).unwrap();
        assert_eq!(res.value, 2);
        assert!(res.exhausted_above);
    }

    #[test]
    fn budget_abort_reports_unexhausted() {
        let k3 = build("complete:3");
        let res = r_star(&[k3.clone(), k3.clone(), k3], Some(10)).unwrap();
        assert!(!res.exhausted_above);
        assert!(res.value < 5);
    }

    #[test]
    fn nice_for_two_triangles() {
        let k3 = build("complete:3");
        let (nice, witness) = is_nice(&[k3.clone(), k3], 2, None).unwrap();
        assert!(nice);
        assert!(witness.is_none());
    }

    #[test]
    fn niceness_requires_exhaustion() {
        let k3 = build("complete:3");
        let res = is_nice(&[k3.clone(), k3.clone(), k3], 5, Some(5));
        assert!(matches!(res, Err(crate::Error::Budget(_))));
    }

    #[test]
    fn edgeless_forbidden_graphs_are_rejected() {
        let lonely = Graph::empty(2).unwrap();
        assert!(r_star(&[lonely.clone()], None).is_err());
        assert!(r_hom(&[lonely], None).is_err());
    }

    #[test]
    fn gf16_shape() {
        let t = gf16_witness();
        assert_eq!(t.points(), 16);
        assert_eq!(t.colour_count(), 4);
        for c in 1..=3u8 {
            assert_eq!(t.pair_class(c).unwrap().size(), 40);
        }
        assert_eq!(t.pair_class(4).unwrap().size(), 0);
        assert_eq!(t.point_colour_set(), vec![4]);
    }

    #[test]
    fn known_table_lookup_is_order_insensitive() {
        let table = KnownRamseyTable::with_known_values();
        assert_eq!(table.get(&[3, 3]).unwrap().0, 6);
        assert_eq!(table.get(&[3, 3, 3]).unwrap().1, Provenance::Literature);
        assert!(table.get(&[3, 4]).is_none());
    }

    #[test]
    fn certify_two_triangles() {
        let mut table = KnownRamseyTable::with_known_values();
        let r33 = table.certify_by_search(&[3, 3], None).unwrap();
        assert_eq!(r33, 6);
        assert_eq!(
            table.get(&[3, 3]).unwrap(),
            (6, Provenance::SearchCertified)
        );
    }
}
