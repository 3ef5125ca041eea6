//! The certification suite behind the CLI's `verify-paper` command: ten
//! checks covering the headline values this crate must reproduce, from the
//! template numbers and their witnesses down to the property suites on
//! random colourings. Each criterion returns a one-line pass summary or a
//! failure description; the acceptance tests run the same functions.

pub mod baseline;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colouring::{is_feasible, EdgeColouring, TemplateColouring};
use crate::graph::{pairs, turan_number, turan_part_sizes, BitIter, Graph, GraphFamilySpec};
use crate::nim::{blowup_lower_bound, nim_max_exact, nim_set, overlay_construction};
use crate::ramsey::{gf16_witness, is_nice, r_hom, r_star, KnownRamseyTable, Provenance};
use crate::turan::ex_exact;

/// A single certification criterion.
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub run: fn() -> Result<String, String>,
}

/// All criteria in order.
pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "three-triangle template number and niceness",
            run: c1_three_triangles,
        },
        Criterion {
            id: 2,
            name: "three-pentagon template number, not nice",
            run: c2_three_pentagons,
        },
        Criterion {
            id: 3,
            name: "homomorphic template number for two triangles",
            run: c3_rhom_triangles,
        },
        Criterion {
            id: 4,
            name: "finite-field witness for four triangles",
            run: c4_gf16,
        },
        Criterion {
            id: 5,
            name: "balanced blow-up lower bound at n = 50",
            run: c5_blowup_50,
        },
        Criterion {
            id: 6,
            name: "exact triangle maxima at n = 5, 6, 7",
            run: c6_triangle_maxima,
        },
        Criterion {
            id: 7,
            name: "four-cycle maximum meets its Turan number at n = 7",
            run: c7_c4_equality,
        },
        Criterion {
            id: 8,
            name: "property suites on seeded random colourings",
            run: c8_property_suites,
        },
        Criterion {
            id: 9,
            name: "tree overlay packing at n = 81",
            run: c9_overlay,
        },
        Criterion {
            id: 10,
            name: "nested-star bound for two-edge matchings",
            run: c10_matching_stars,
        },
    ]
}

fn family(s: &str) -> Graph {
    s.parse::<GraphFamilySpec>()
        .expect("family spec")
        .build()
        .expect("family builds")
}

/// The 5-point template behind the triangle blow-ups: all points colour 3,
/// pairs split into a 5-cycle (colour 1) and its complement (colour 2).
pub fn pentagon_template() -> TemplateColouring {
    let c5 = family("cycle:5");
    let pcolour = pairs(5)
        .map(|(i, j)| if c5.has_edge(i, j) { 1 } else { 2 })
        .collect();
    TemplateColouring::new(5, 3, vec![3; 5], pcolour).expect("well-formed template")
}

/// The `k`-colour nested-star colouring: colour `i < k` takes the edges at
/// vertex `i - 1` not claimed by an earlier star, colour `k` the rest.
/// Every star edge avoids a monochromatic two-edge matching.
pub fn nested_star_colouring(n: usize, k: usize) -> Result<EdgeColouring, crate::Error> {
    EdgeColouring::from_fn(
        n,
        k,
        |u, _| if u + 2 <= k { (u + 1) as u8 } else { k as u8 },
    )
}

fn err(msg: impl Into<String>) -> String {
    msg.into()
}

fn c1_three_triangles() -> Result<String, String> {
    let t0 = Instant::now();
    let k3 = family("complete:3");
    let hs = vec![k3.clone(), k3.clone(), k3];
    let res = r_star(&hs, None).map_err(|e| err(e.to_string()))?;
    if res.value != 5 {
        return Err(err(format!(
            "r_star over three triangles gave {}, expected 5",
            res.value
        )));
    }
    if !res.exhausted_above {
        return Err(err("six points were not exhaustively refuted"));
    }
    let (nice, counterexample) = is_nice(&hs, 5, None).map_err(|e| err(e.to_string()))?;
    if !nice || counterexample.is_some() {
        return Err(err("three triangles should be nice at 5 points"));
    }
    Ok(format!(
        "r_star=5 exhausted ({} nodes), nice [{:?}]",
        res.nodes,
        t0.elapsed()
    ))
}

fn c2_three_pentagons() -> Result<String, String> {
    let t0 = Instant::now();
    let c5 = family("cycle:5");
    let hs = vec![c5.clone(), c5.clone(), c5];
    let res = r_star(&hs, None).map_err(|e| err(e.to_string()))?;
    if res.value != 4 || !res.exhausted_above {
        return Err(err(format!(
            "r_star over three pentagons gave {} (exhausted={}), expected 4 with refutation at 5",
            res.value, res.exhausted_above
        )));
    }
    let witness = res
        .witness
        .ok_or_else(|| err("missing witness at 4 points"))?;
    if !is_feasible(&witness, &hs)
        .map_err(|e| err(e.to_string()))?
        .feasible()
    {
        return Err(err("witness at 4 points is not feasible"));
    }
    let (nice, counterexample) = is_nice(&hs, 4, None).map_err(|e| err(e.to_string()))?;
    if nice {
        return Err(err("three pentagons must not be nice at 4 points"));
    }
    let cx = counterexample.ok_or_else(|| err("missing niceness counterexample"))?;
    if cx.point_colour_set().len() < 2 {
        return Err(err("counterexample does not use two point colours"));
    }
    if !is_feasible(&cx, &hs)
        .map_err(|e| err(e.to_string()))?
        .feasible()
    {
        return Err(err("counterexample failed the feasibility re-check"));
    }
    Ok(format!(
        "r_star=4 exhausted ({} nodes), counterexample uses point colours {:?} [{:?}]",
        res.nodes,
        cx.point_colour_set(),
        t0.elapsed()
    ))
}

fn c3_rhom_triangles() -> Result<String, String> {
    let t0 = Instant::now();
    let k3 = family("complete:3");
    let res = r_hom(&[k3.clone(), k3], None).map_err(|e| err(e.to_string()))?;
    if res.value != 5 || !res.exhausted_above {
        return Err(err(format!(
            "r_hom over two triangles gave {} (exhausted={}), expected 5 with refutation at 6",
            res.value, res.exhausted_above
        )));
    }
    Ok(format!(
        "r_hom=5 exhausted ({} nodes) [{:?}]",
        res.nodes,
        t0.elapsed()
    ))
}

fn c4_gf16() -> Result<String, String> {
    let t0 = Instant::now();
    let template = gf16_witness();
    if template.points() != 16 || template.colour_count() != 4 {
        return Err(err("finite-field template has the wrong shape"));
    }
    if template.point_colour_set() != vec![4] {
        return Err(err("all sixteen singletons must carry colour 4"));
    }
    for c in 1..=3u8 {
        let size = template
            .pair_class(c)
            .map_err(|e| err(e.to_string()))?
            .size();
        if size != 40 {
            return Err(err(format!("pair class {c} has {size} pairs, expected 40")));
        }
    }
    // Exhaustive check over all 560 triples: no pair colour appears on all
    // three sides of a triangle.
    let mut triples = 0usize;
    for x in 0..16 {
        for y in x + 1..16 {
            for z in y + 1..16 {
                triples += 1;
                let (a, b, c) = (
                    template.pair_colour(x, y),
                    template.pair_colour(y, z),
                    template.pair_colour(x, z),
                );
                if a == b && b == c {
                    return Err(err(format!(
                        "monochromatic triangle {x},{y},{z} in colour {a}"
                    )));
                }
            }
        }
    }
    if triples != 560 {
        return Err(err(format!(
            "triple sweep covered {triples} triples, expected 560"
        )));
    }
    let k3 = family("complete:3");
    let hs = vec![k3.clone(), k3.clone(), k3.clone(), k3];
    if !is_feasible(&template, &hs)
        .map_err(|e| err(e.to_string()))?
        .feasible()
    {
        return Err(err("finite-field template failed the feasibility check"));
    }
    // The matching 17-point impossibility is out of search range by design;
    // it is carried by the shipped table entry, not re-derived.
    let table = KnownRamseyTable::with_known_values();
    match table.get(&[3, 3, 3]) {
        Some((17, Provenance::Literature)) => {}
        other => return Err(err(format!("table entry for three triangles is {other:?}"))),
    }
    Ok(format!(
        "16 points feasible for four triangles, 560 triples clean, upper bound table-sourced [{:?}]",
        t0.elapsed()
    ))
}

fn c5_blowup_50() -> Result<String, String> {
    let t0 = Instant::now();
    let k3 = family("complete:3");
    let hs = vec![k3.clone(), k3.clone(), k3];
    let template = pentagon_template();
    let (colouring, count) =
        blowup_lower_bound(&hs, &template, 50).map_err(|e| err(e.to_string()))?;
    let target = turan_number(50, 5).map_err(|e| err(e.to_string()))?;
    if count != target {
        return Err(err(format!(
            "blow-up NIM count {count}, expected exactly {target}"
        )));
    }
    let report = nim_set(&colouring, &hs).map_err(|e| err(e.to_string()))?;
    let sizes = turan_part_sizes(50, 5);
    let mut part = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    for (u, v) in pairs(50) {
        let cross = part[u] != part[v];
        if cross != report.is_nim(u, v) {
            return Err(err(format!(
                "pair ({u},{v}) is {}, expected {}",
                if report.is_nim(u, v) {
                    "NIM"
                } else {
                    "non-NIM"
                },
                if cross {
                    "NIM (cross pair)"
                } else {
                    "non-NIM (inside pair)"
                }
            )));
        }
    }
    Ok(format!(
        "count=1000=t(50,5); cross pairs NIM, inside pairs covered [{:?}]",
        t0.elapsed()
    ))
}

fn c6_triangle_maxima() -> Result<String, String> {
    let t0 = Instant::now();
    let k3 = family("complete:3");
    let hs = vec![k3.clone(), k3.clone()];
    let expected = [
        (5usize, baseline::NIM_MAX_5_TRIANGLE),
        (6, baseline::NIM_MAX_6_TRIANGLE),
        (7, baseline::NIM_MAX_7_TRIANGLE),
    ];
    let mut nodes = 0;
    for &(n, want) in &expected {
        let out = nim_max_exact(n, &hs, None).map_err(|e| err(e.to_string()))?;
        if !out.optimal {
            return Err(err(format!("search at n={n} did not exhaust")));
        }
        if out.value != want {
            return Err(err(format!(
                "nim({n}) = {}, baseline says {want}",
                out.value
            )));
        }
        let ex = ex_exact(n, &k3, None).map_err(|e| err(e.to_string()))?;
        if out.value < ex.value {
            return Err(err(format!(
                "nim({n}) = {} below ex({n}) = {}",
                out.value, ex.value
            )));
        }
        let witness = out.witness.ok_or_else(|| err("missing witness"))?;
        let recount = nim_set(&witness, &hs)
            .map_err(|e| err(e.to_string()))?
            .count();
        if recount != out.value {
            return Err(err(format!(
                "witness recount {recount} != value {}",
                out.value
            )));
        }
        nodes += out.nodes;
    }
    Ok(format!(
        "nim(5)={}, nim(6)={}, nim(7)={} all exhausted and stable ({} nodes) [{:?}]",
        baseline::NIM_MAX_5_TRIANGLE,
        baseline::NIM_MAX_6_TRIANGLE,
        baseline::NIM_MAX_7_TRIANGLE,
        nodes,
        t0.elapsed()
    ))
}

fn c7_c4_equality() -> Result<String, String> {
    let t0 = Instant::now();
    let c4 = family("cycle:4");
    let ex = ex_exact(7, &c4, None).map_err(|e| err(e.to_string()))?;
    if !ex.optimal || ex.value != baseline::EX_7_C4 {
        return Err(err(format!(
            "ex(7, C4) = {}, baseline says {}",
            ex.value,
            baseline::EX_7_C4
        )));
    }
    let out = nim_max_exact(7, &[c4.clone(), c4], None).map_err(|e| err(e.to_string()))?;
    if !out.optimal {
        return Err(err("four-cycle search at n=7 did not exhaust"));
    }
    if out.value < ex.value {
        return Err(err(format!(
            "nim(7; C4) = {} fell below ex(7, C4) = {}",
            out.value, ex.value
        )));
    }
    if out.value != baseline::NIM_MAX_7_C4 {
        return Err(err(format!(
            "nim(7; C4) = {} drifted from the recorded baseline {}",
            out.value,
            baseline::NIM_MAX_7_C4
        )));
    }
    let note = if out.value == ex.value {
        "equality with ex confirmed at n=7"
    } else {
        "DISCREPANCY: maximum exceeds ex(7, C4); flagged for investigation"
    };
    Ok(format!(
        "ex=9, nim={} exhausted; {note} [{:?}]",
        out.value,
        t0.elapsed()
    ))
}

// ---------------------------------------------------------------------------
// Criterion 8: property suites
// ---------------------------------------------------------------------------

const SUITE_INSTANCES: usize = 1000;

fn random_colouring(rng: &mut ChaCha8Rng, n: usize, k: usize) -> EdgeColouring {
    EdgeColouring::from_fn(n, k, |_, _| rng.gen_range(1..=k) as u8).expect("valid colouring")
}

/// True if the graph contains a complete bipartite `K_{4,2}`: some pair of
/// vertices with at least four common neighbours.
fn contains_k42(g: &Graph) -> bool {
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            if (g.neighbours(x) & g.neighbours(y)).count_ones() >= 4 {
                return true;
            }
        }
    }
    false
}

/// NIM neighbourhoods shed complete bipartite graphs: for every vertex `v`
/// and colour `i`, the colour-`i` graph between the NIM-`i`-neighbourhood
/// of `v` and the remaining vertices has no `K_{4,2}` when the forbidden
/// graph is the four-cycle (order 4).
fn suite_k42_freeness() -> Result<(), String> {
    let c4 = family("cycle:4");
    let hs = vec![c4.clone(), c4];
    let mut rng = ChaCha8Rng::seed_from_u64(0x4211);
    for instance in 0..SUITE_INSTANCES {
        let n = rng.gen_range(6..=14);
        let colouring = random_colouring(&mut rng, n, 2);
        let report = nim_set(&colouring, &hs).map_err(|e| e.to_string())?;
        for v in 0..n {
            for c0 in 0..2usize {
                let hood = report.per_colour_nim()[c0].neighbours(v);
                if hood == 0 {
                    continue;
                }
                let class = colouring
                    .colour_class((c0 + 1) as u8)
                    .map_err(|e| e.to_string())?;
                let rest = crate::graph::mask_n(n) & !hood & !((1 as crate::graph::VertexSet) << v);
                let mut cross = Graph::empty(n).map_err(|e| e.to_string())?;
                for x in BitIter(hood) {
                    for y in BitIter(class.neighbours(x) & rest) {
                        cross.add_edge(x, y);
                    }
                }
                if contains_k42(&cross) {
                    return Err(format!(
                        "instance {instance}: K_4,2 against vertex {v} in colour {}",
                        c0 + 1
                    ));
                }
            }
        }
    }
    Ok(())
}

fn random_forbidden(rng: &mut ChaCha8Rng) -> Graph {
    match rng.gen_range(0..5) {
        0 => family("complete:3"),
        1 => family("complete:4"),
        2 => family("cycle:4"),
        3 => family("cycle:5"),
        _ => family("path:4"),
    }
}

/// Deleting a vertex never destroys a NIM-edge elsewhere.
fn suite_restriction_monotonicity() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e57);
    for instance in 0..SUITE_INSTANCES {
        let n = rng.gen_range(3..=12);
        let k = rng.gen_range(1..=3);
        let hs: Vec<Graph> = (0..k).map(|_| random_forbidden(&mut rng)).collect();
        let colouring = random_colouring(&mut rng, n, k);
        let x = rng.gen_range(0..n);
        let whole = nim_set(&colouring, &hs).map_err(|e| e.to_string())?;
        let restricted = nim_set(&colouring.delete_vertex(x), &hs).map_err(|e| e.to_string())?;
        let relabel = |w: usize| if w < x { w } else { w - 1 };
        for (u, v) in whole.nim_edges() {
            if u == x || v == x {
                continue;
            }
            if !restricted.is_nim(relabel(u), relabel(v)) {
                return Err(format!(
                    "instance {instance}: NIM edge ({u},{v}) lost after deleting vertex {x}"
                ));
            }
        }
    }
    Ok(())
}

/// The NIM count is invariant under vertex relabelling and, with equal
/// forbidden graphs, under colour relabelling.
fn suite_relabelling_invariance() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e1a);
    for instance in 0..SUITE_INSTANCES {
        let n = rng.gen_range(2..=12);
        let k = rng.gen_range(1..=3);
        let h = random_forbidden(&mut rng);
        let hs: Vec<Graph> = (0..k).map(|_| h.clone()).collect();
        let colouring = random_colouring(&mut rng, n, k);
        let base = nim_set(&colouring, &hs).map_err(|e| e.to_string())?.count();

        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let vperm = nim_set(&colouring.permute_vertices(&perm), &hs).map_err(|e| e.to_string())?;
        if vperm.count() != base {
            return Err(format!(
                "instance {instance}: vertex relabelling changed the count"
            ));
        }

        let mut cperm: Vec<u8> = (1..=k as u8).collect();
        for i in (1..k).rev() {
            cperm.swap(i, rng.gen_range(0..=i));
        }
        let cpermuted =
            nim_set(&colouring.permute_colours(&cperm), &hs).map_err(|e| e.to_string())?;
        if cpermuted.count() != base {
            return Err(format!(
                "instance {instance}: colour relabelling changed the count"
            ));
        }
    }
    Ok(())
}

/// Every reported witness is an injective copy of the right forbidden graph
/// inside the right colour class, through its edge.
fn suite_witness_reverification() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x31f5);
    for instance in 0..SUITE_INSTANCES {
        let n = rng.gen_range(3..=12);
        let k = rng.gen_range(1..=3);
        let hs: Vec<Graph> = (0..k).map(|_| random_forbidden(&mut rng)).collect();
        let colouring = random_colouring(&mut rng, n, k);
        let report = nim_set(&colouring, &hs).map_err(|e| e.to_string())?;
        for (&(u, v), emb) in report.witnesses() {
            let c = colouring.colour(u, v) as usize;
            let class = colouring.colour_class(c as u8).map_err(|e| e.to_string())?;
            let h = &hs[c - 1];
            if !emb.verify(h, &class, true) || !emb.covers_edge(h, u, v) {
                return Err(format!("instance {instance}: witness for ({u},{v}) failed"));
            }
        }
    }
    Ok(())
}

fn c8_property_suites() -> Result<String, String> {
    let t0 = Instant::now();
    suite_k42_freeness()?;
    suite_restriction_monotonicity()?;
    suite_relabelling_invariance()?;
    suite_witness_reverification()?;
    Ok(format!(
        "4 suites x {SUITE_INSTANCES} seeded instances, zero violations [{:?}]",
        t0.elapsed()
    ))
}

fn c9_overlay() -> Result<String, String> {
    let t0 = Instant::now();
    let tree = family("path:4");
    let (k, n, h) = (3usize, 81usize, 3usize);
    let colouring = overlay_construction(&tree, k, n, 2024).map_err(|e| e.to_string())?;
    let host_edges = (n / h) * h * (h - 1) / 2;
    for c in 1..k as u8 {
        let size = colouring.colour_class(c).map_err(|e| e.to_string())?.size();
        if size != host_edges {
            return Err(err(format!(
                "placement {c} kept {size} edges of {host_edges}; placements overlapped"
            )));
        }
    }
    let hs = vec![tree.clone(), tree.clone(), tree];
    let count = nim_set(&colouring, &hs).map_err(|e| e.to_string())?.count();
    let threshold = (k - 1) * host_edges - k * k * h * h;
    if count < threshold {
        return Err(err(format!(
            "NIM count {count} below the packing bound {threshold}"
        )));
    }
    Ok(format!(
        "placements edge-disjoint ({host_edges} edges each), nim={count} >= {threshold} [{:?}]",
        t0.elapsed()
    ))
}

fn c10_matching_stars() -> Result<String, String> {
    let t0 = Instant::now();
    let m2 = family("matching:2");
    let (n, k) = (12usize, 3usize);
    let colouring = nested_star_colouring(n, k).map_err(|e| e.to_string())?;
    let hs = vec![m2.clone(), m2.clone(), m2];
    let count = nim_set(&colouring, &hs).map_err(|e| e.to_string())?.count();
    let target = (k - 1) * (n - 1) - (k - 1) * (k - 2) / 2;
    if count < target {
        return Err(err(format!("nested-star NIM count {count} below {target}")));
    }
    Ok(format!(
        "nim={count} >= {target} = (k-1)(n-1) - (k-1)(k-2)/2 [{:?}]",
        t0.elapsed()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_template_is_feasible_for_triangles() {
        let k3 = family("complete:3");
        let verdict = is_feasible(&pentagon_template(), &[k3.clone(), k3.clone(), k3]).unwrap();
        assert!(verdict.feasible());
    }

    #[test]
    fn nested_star_colouring_counts() {
        let col = nested_star_colouring(12, 3).unwrap();
        assert_eq!(col.colour_class(1).unwrap().size(), 11);
        assert_eq!(col.colour_class(2).unwrap().size(), 10);
        assert_eq!(col.colour_class(3).unwrap().size(), 45);
    }

    #[test]
    fn k42_detector() {
        assert!(contains_k42(&family("cm:4-2")));
        assert!(contains_k42(&family("cm:2-4")));
        assert!(!contains_k42(&family("cm:3-2")));
        assert!(!contains_k42(&family("cycle:8")));
    }

    #[test]
    fn criteria_are_numbered_in_order() {
        let all = criteria();
        assert_eq!(all.len(), 10);
        for (i, c) in all.iter().enumerate() {
            assert_eq!(c.id, i + 1);
        }
    }
}
