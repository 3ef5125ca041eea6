//! Small simple graphs on at most [`MAX_VERTICES`] vertices, stored as
//! per-vertex neighbour bitmasks, plus the named families used throughout
//! (cliques, cycles, paths, stars, matchings, complete multipartite and
//! Turán graphs) and a line-based text format.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Vertex sets are fixed-width bitmasks; widen this alias to raise the
/// order cap.
pub type VertexSet = u128;

/// Hard cap on graph order; a vertex set must fit in a [`VertexSet`].
pub const MAX_VERTICES: usize = VertexSet::BITS as usize;

/// Default order bound for the exact chromatic-number search.
pub const CHROMATIC_MAX_VERTICES: usize = 16;

/// `n choose 2`.
#[inline]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Index of the pair `{u, v}` (`u < v`) in lexicographic pair order on `[n]`.
#[inline]
pub const fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// All pairs `{u, v}` with `u < v < n` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Iterates the set bits of a mask in ascending order.
#[derive(Clone, Copy)]
pub struct BitIter(pub VertexSet);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// An undirected simple graph on vertices `0..n`.
///
/// No loops, adjacency symmetric. Isolated vertices are allowed and preserved.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// An empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::parameter(format!(
                "graph order {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// A graph on `n` vertices with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = mask_n(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> v) & 1 == 1
    }

    /// Neighbour set of `v` as a bitmask.
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Adds the edge `{u, v}`; idempotent. Panics on a loop or range error.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::parameter(format!(
                "edge ({u},{v}) invalid on {} vertices",
                self.n
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Edges in lexicographic pair order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            BitIter(self.adj[u].unbounded_shr(u as u32 + 1)).map(move |d| (u, u + 1 + d))
        })
    }

    pub fn complement(&self) -> Graph {
        let all = mask_n(self.n);
        let adj = (0..self.n)
            .map(|v| all & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by the vertices of `keep` (a bitmask), relabelled
    /// compactly in ascending order of the original indices.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let verts: Vec<usize> = BitIter(keep & mask_n(self.n)).collect();
        let mut g = Graph {
            n: verts.len(),
            adj: vec![0; verts.len()],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// The graph with vertex `x` deleted, remaining vertices relabelled
    /// compactly in order.
    pub fn delete_vertex(&self, x: usize) -> Graph {
        self.induced(mask_n(self.n) & !(1 << x))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// True if the graph has no odd cycle (two-colourable by traversal).
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![-1i8; self.n];
        for start in 0..self.n {
            if colour[start] >= 0 {
                continue;
            }
            colour[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in BitIter(self.adj[v]) {
                    if colour[u] < 0 {
                        colour[u] = 1 - colour[v];
                        stack.push(u);
                    } else if colour[u] == colour[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True if the graph is connected (vacuously true for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen: VertexSet = 1;
        let mut frontier: VertexSet = 1;
        while frontier != 0 {
            let mut next: VertexSet = 0;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask_n(self.n)
    }

    /// Exact chromatic number by branch-and-bound over vertex colourings.
    ///
    /// Rejects graphs on more than [`CHROMATIC_MAX_VERTICES`] vertices.
    pub fn chromatic_number(&self) -> Result<usize> {
        if self.n > CHROMATIC_MAX_VERTICES {
            return Err(Error::budget(format!(
                "chromatic number restricted to at most {CHROMATIC_MAX_VERTICES} vertices, got {}",
                self.n
            )));
        }
        if self.n == 0 {
            return Ok(0);
        }
        if self.size() == 0 {
            return Ok(1);
        }
        if self.is_bipartite() {
            return Ok(2);
        }
        // Order vertices by degree descending: colours get forced early.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut best = self.n; // K_n always works
        let mut colours = vec![usize::MAX; self.n];
        self.chromatic_rec(&order, 0, 0, &mut colours, &mut best);
        Ok(best)
    }

    fn chromatic_rec(
        &self,
        order: &[usize],
        pos: usize,
        used: usize,
        colours: &mut [usize],
        best: &mut usize,
    ) {
        if used >= *best {
            return;
        }
        if pos == order.len() {
            *best = used;
            return;
        }
        let v = order[pos];
        let mut forbidden = 0u64;
        for u in BitIter(self.adj[v]) {
            if colours[u] != usize::MAX {
                forbidden |= 1 << colours[u];
            }
        }
        for c in 0..(used + 1).min(*best - 1) {
            if (forbidden >> c) & 1 == 0 {
                colours[v] = c;
                self.chromatic_rec(order, pos + 1, used.max(c + 1), colours, best);
                colours[v] = usize::MAX;
            }
        }
    }

    /// Writes the graph in the text format read by [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("e {u} {v}\n"));
        }
        s
    }

    /// Parses the graph file format: a `graph <n>` header, one `e <u> <v>`
    /// line per edge with `0 <= u < v < n`, `#` starting a comment.
    /// Duplicate edges are rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tok = content.split_whitespace();
            match tok.next() {
                Some("graph") => {
                    if graph.is_some() {
                        return Err(Error::Parse {
                            line,
                            msg: "duplicate graph header".into(),
                        });
                    }
                    let n = parse_num(tok.next(), line, "vertex count")?;
                    expect_end(tok.next(), line)?;
                    graph = Some(Graph::empty(n).map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })?);
                }
                Some("e") => {
                    let g = graph.as_mut().ok_or(Error::Parse {
                        line,
                        msg: "edge before graph header".into(),
                    })?;
                    let u: usize = parse_num(tok.next(), line, "endpoint")?;
                    let v: usize = parse_num(tok.next(), line, "endpoint")?;
                    expect_end(tok.next(), line)?;
                    if !(u < v && v < g.n) {
                        return Err(Error::Parse {
                            line,
                            msg: format!("edge ({u},{v}) must satisfy 0 <= u < v < {}", g.n),
                        });
                    }
                    if g.has_edge(u, v) {
                        return Err(Error::Parse {
                            line,
                            msg: format!("duplicate edge ({u},{v})"),
                        });
                    }
                    g.add_edge(u, v);
                }
                Some(other) => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unexpected token `{other}`"),
                    })
                }
                None => unreachable!(),
            }
        }
        graph.ok_or(Error::Parse {
            line: 0,
            msg: "missing graph header".into(),
        })
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Graph::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, self.to_text())?)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or(Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?
    .parse()
    .map_err(|_| Error::Parse {
        line,
        msg: format!("invalid {what}"),
    })
}

fn expect_end(tok: Option<&str>, line: usize) -> Result<()> {
    match tok {
        None => Ok(()),
        Some(t) => Err(Error::Parse {
            line,
            msg: format!("trailing token `{t}`"),
        }),
    }
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn mask_n(n: usize) -> VertexSet {
    if n >= MAX_VERTICES {
        VertexSet::MAX
    } else {
        ((1 as VertexSet) << n) - 1
    }
}

/// Part sizes of the Turán graph `T(n, r)`: `r` parts as balanced as
/// possible, larger parts first.
pub fn turan_part_sizes(n: usize, r: usize) -> Vec<usize> {
    let q = n / r;
    let s = n % r;
    (0..r).map(|i| if i < s { q + 1 } else { q }).collect()
}

/// `t(n, r)`: the number of edges of the Turán graph `T(n, r)`.
pub fn turan_number(n: usize, r: usize) -> Result<usize> {
    if r == 0 || r > n {
        return Err(Error::parameter(format!(
            "turan number needs 1 <= r <= n, got n={n} r={r}"
        )));
    }
    let inside: usize = turan_part_sizes(n, r).iter().map(|&p| choose2(p)).sum();
    Ok(choose2(n) - inside)
}

/// A named graph family, or a graph loaded from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamilySpec {
    /// `K_a`.
    Complete(usize),
    /// The cycle `C_a`, `a >= 3`, vertices in cyclic order.
    Cycle(usize),
    /// The path on `a` vertices.
    Path(usize),
    /// The star `K_{1,h}` with `h` edges, centre first.
    Star(usize),
    /// The matching `M_h` with `h` disjoint edges on `2h` vertices.
    Matching(usize),
    /// Complete multipartite graph with the given part sizes, parts laid out
    /// as consecutive blocks in declared order.
    CompleteMultipartite(Vec<usize>),
    /// The Turán graph `T(n, r)`.
    Turan { n: usize, r: usize },
    /// A graph file in the `graph`/`e` format.
    File(PathBuf),
}

impl GraphFamilySpec {
    /// Builds the named graph with its canonical vertex order.
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphFamilySpec::Complete(a) => {
                require(*a >= 1, "complete graph needs at least 1 vertex")?;
                Graph::complete(*a)
            }
            GraphFamilySpec::Cycle(a) => {
                require(*a >= 3, "cycle needs at least 3 vertices")?;
                let mut g = Graph::empty(*a)?;
                for v in 0..*a {
                    g.add_edge(v, (v + 1) % a);
                }
                Ok(g)
            }
            GraphFamilySpec::Path(a) => {
                require(*a >= 1, "path needs at least 1 vertex")?;
                let mut g = Graph::empty(*a)?;
                for v in 1..*a {
                    g.add_edge(v - 1, v);
                }
                Ok(g)
            }
            GraphFamilySpec::Star(h) => {
                require(*h >= 1, "star needs at least 1 edge")?;
                let mut g = Graph::empty(h + 1)?;
                for v in 1..=*h {
                    g.add_edge(0, v);
                }
                Ok(g)
            }
            GraphFamilySpec::Matching(h) => {
                require(*h >= 1, "matching needs at least 1 edge")?;
                let mut g = Graph::empty(2 * h)?;
                for i in 0..*h {
                    g.add_edge(2 * i, 2 * i + 1);
                }
                Ok(g)
            }
            GraphFamilySpec::CompleteMultipartite(parts) => {
                require(!parts.is_empty(), "multipartite graph needs parts")?;
                require(parts.iter().all(|&p| p >= 1), "part sizes must be >= 1")?;
                complete_multipartite(parts)
            }
            GraphFamilySpec::Turan { n, r } => {
                if *r == 0 || *r > *n {
                    return Err(Error::parameter(format!(
                        "turan graph needs 1 <= r <= n, got n={n} r={r}"
                    )));
                }
                complete_multipartite(&turan_part_sizes(*n, *r))
            }
            GraphFamilySpec::File(path) => Graph::read_file(path),
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::parameter(msg.to_string()))
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut starts = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    for (i, &pi) in parts.iter().enumerate() {
        for (j, &pj) in parts.iter().enumerate().skip(i + 1) {
            for u in starts[i]..starts[i] + pi {
                for v in starts[j]..starts[j] + pj {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

impl FromStr for GraphFamilySpec {
    type Err = Error;

    /// Shorthand grammar: `complete:a`, `cycle:a`, `path:a`, `star:h`,
    /// `matching:h`, `cm:a1-a2-...`, `turan:n-r`, `file:<path>`.
    fn from_str(s: &str) -> Result<Self> {
        let (tag, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::parameter(format!("graph spec `{s}` missing `:`")))?;
        let num = |x: &str| -> Result<usize> {
            x.parse()
                .map_err(|_| Error::parameter(format!("bad number `{x}` in graph spec `{s}`")))
        };
        match tag {
            "complete" => Ok(GraphFamilySpec::Complete(num(arg)?)),
            "cycle" => Ok(GraphFamilySpec::Cycle(num(arg)?)),
            "path" => Ok(GraphFamilySpec::Path(num(arg)?)),
            "star" => Ok(GraphFamilySpec::Star(num(arg)?)),
            "matching" => Ok(GraphFamilySpec::Matching(num(arg)?)),
            "cm" => {
                let parts = arg.split('-').map(num).collect::<Result<Vec<_>>>()?;
                Ok(GraphFamilySpec::CompleteMultipartite(parts))
            }
            "turan" => {
                let (n, r) = arg
                    .split_once('-')
                    .ok_or_else(|| Error::parameter(format!("turan spec `{s}` needs `n-r`")))?;
                Ok(GraphFamilySpec::Turan {
                    n: num(n)?,
                    r: num(r)?,
                })
            }
            "file" => Ok(GraphFamilySpec::File(PathBuf::from(arg))),
            _ => Err(Error::parameter(format!("unknown graph family `{tag}`"))),
        }
    }
}

impl fmt::Display for GraphFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamilySpec::Complete(a) => write!(f, "complete:{a}"),
            GraphFamilySpec::Cycle(a) => write!(f, "cycle:{a}"),
            GraphFamilySpec::Path(a) => write!(f, "path:{a}"),
            GraphFamilySpec::Star(h) => write!(f, "star:{h}"),
            GraphFamilySpec::Matching(h) => write!(f, "matching:{h}"),
            GraphFamilySpec::CompleteMultipartite(parts) => {
                write!(f, "cm:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "-")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            GraphFamilySpec::Turan { n, r } => write!(f, "turan:{n}-{r}"),
            GraphFamilySpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}
