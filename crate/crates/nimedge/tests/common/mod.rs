//! Brute-force oracles, independent of the library's search paths: plain
//! exhaustive enumeration over maps, permutations and edge subsets.
//!
//! Each test binary uses its own subset of these.
#![allow(dead_code)]

use nimedge::graph::{choose2, pairs, Graph};

/// Homomorphism existence by sweeping all `|V(G)|^{|V(H)|}` vertex maps.
pub fn brute_hom_exists(h: &Graph, g: &Graph) -> bool {
    let hn = h.order();
    let gn = g.order();
    if hn == 0 {
        return true;
    }
    if gn == 0 {
        return false;
    }
    let mut map = vec![0usize; hn];
    loop {
        let ok = h.edges().all(|(a, b)| g.has_edge(map[a], map[b]));
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == hn {
                return false;
            }
            map[i] += 1;
            if map[i] < gn {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Clique containment by direct subset extension.
pub fn brute_contains_clique(g: &Graph, a: usize) -> bool {
    fn extend(g: &Graph, clique: &mut Vec<usize>, start: usize, a: usize) -> bool {
        if clique.len() == a {
            return true;
        }
        for v in start..g.order() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                if extend(g, clique, v + 1, a) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    if a == 0 {
        return true;
    }
    extend(g, &mut Vec::new(), 0, a)
}

/// True if `g` has a simple cycle of odd length at most `l`, by enumerating
/// all simple paths from each start vertex.
pub fn brute_has_odd_cycle_at_most(g: &Graph, l: usize) -> bool {
    fn dfs(g: &Graph, start: usize, v: usize, visited: &mut Vec<usize>, l: usize) -> bool {
        if visited.len() >= 3 && visited.len() % 2 == 1 && g.has_edge(v, start) {
            return true;
        }
        if visited.len() == l {
            return false;
        }
        for w in start + 1..g.order() {
            if g.has_edge(v, w) && !visited.contains(&w) {
                visited.push(w);
                if dfs(g, start, w, visited, l) {
                    return true;
                }
                visited.pop();
            }
        }
        false
    }
    for start in 0..g.order() {
        let mut visited = vec![start];
        if dfs(g, start, start, &mut visited, l) {
            return true;
        }
    }
    false
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    fn rec(g: &Graph, h: &Graph, image: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let pos = image.len();
        if pos == h.order() {
            return true;
        }
        for w in 0..g.order() {
            if used[w] {
                continue;
            }
            if (0..pos).all(|i| h.has_edge(i, pos) == g.has_edge(image[i], w)) {
                image.push(w);
                used[w] = true;
                if rec(g, h, image, used) {
                    return true;
                }
                used[w] = false;
                image.pop();
            }
        }
        false
    }
    rec(g, h, &mut Vec::new(), &mut vec![false; g.order()])
}

/// Edit distance by trying every bijection, no pruning.
pub fn brute_edit_distance(g: &Graph, h: &Graph) -> usize {
    assert_eq!(g.order(), h.order());
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut diff = 0;
        for (u, v) in pairs(n) {
            if h.has_edge(u, v) != g.has_edge(p[u], p[v]) {
                diff += 1;
            }
        }
        best = best.min(diff);
    });
    best
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// All graphs on exactly `n` labelled vertices, as edge-subset codes.
pub fn all_graphs_on(n: usize) -> impl Iterator<Item = Graph> {
    let pair_list: Vec<(usize, usize)> = pairs(n).collect();
    (0u64..(1u64 << choose2(n))).map(move |code| {
        let mut g = Graph::empty(n).unwrap();
        for (idx, &(u, v)) in pair_list.iter().enumerate() {
            if (code >> idx) & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}
