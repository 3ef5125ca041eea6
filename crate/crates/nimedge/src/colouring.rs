//! Edge colourings of complete graphs, template colourings on singletons and
//! pairs, the feasibility check, and blow-ups.
//!
//! Colours are 1-based throughout. A *template* colours the singletons and
//! pairs of a small point set; a template is *feasible* for forbidden graphs
//! `H_1..H_k` if no pair-colour class contains a homomorphic copy of its
//! `H_i` (P1) and no pair shares a colour with one of its points (P2).

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{choose2, pair_index, pairs, Graph};
use crate::hom::{homomorphism_exists, Embedding};

/// A total `k`-edge-colouring of the complete graph on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    n: usize,
    k: usize,
    colours: Vec<u8>, // lexicographic pair order, values 1..=k
}

impl EdgeColouring {
    /// All pairs coloured `colour`.
    pub fn uniform(n: usize, k: usize, colour: u8) -> Result<Self> {
        Self::validate_header(n, k)?;
        if colour == 0 || colour as usize > k {
            return Err(Error::parameter(format!("colour {colour} outside 1..={k}")));
        }
        Ok(EdgeColouring {
            n,
            k,
            colours: vec![colour; choose2(n)],
        })
    }

    /// Builds a colouring from a function on pairs `u < v`.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        Self::validate_header(n, k)?;
        let mut colours = Vec::with_capacity(choose2(n));
        for (u, v) in pairs(n) {
            let c = f(u, v);
            if c == 0 || c as usize > k {
                return Err(Error::parameter(format!(
                    "colour {c} on pair ({u},{v}) outside 1..={k}"
                )));
            }
            colours.push(c);
        }
        Ok(EdgeColouring { n, k, colours })
    }

    fn validate_header(n: usize, k: usize) -> Result<()> {
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::parameter(format!(
                "colouring order {n} exceeds the supported maximum {}",
                crate::graph::MAX_VERTICES
            )));
        }
        if k == 0 {
            return Err(Error::parameter("colour count must be at least 1"));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn colour_count(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> u8 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colours[pair_index(self.n, a, b)]
    }

    pub fn set_colour(&mut self, u: usize, v: usize, c: u8) {
        assert!(
            c >= 1 && c as usize <= self.k,
            "colour {c} outside 1..={}",
            self.k
        );
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colours[pair_index(self.n, a, b)] = c;
    }

    /// The spanning subgraph carrying exactly the colour-`i` pairs.
    pub fn colour_class(&self, i: u8) -> Result<Graph> {
        if i == 0 || i as usize > self.k {
            return Err(Error::parameter(format!(
                "colour {i} outside 1..={}",
                self.k
            )));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in pairs(self.n) {
            if self.colour(u, v) == i {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// All colour classes at once (index `i` holds colour `i + 1`).
    pub fn colour_classes(&self) -> Vec<Graph> {
        (1..=self.k as u8)
            .map(|i| self.colour_class(i).expect("colour in range"))
            .collect()
    }

    /// Restriction to the complement of vertex `x`, relabelled compactly.
    pub fn delete_vertex(&self, x: usize) -> EdgeColouring {
        assert!(x < self.n);
        let old = |w: usize| if w < x { w } else { w + 1 };
        EdgeColouring::from_fn(self.n - 1, self.k, |u, v| self.colour(old(u), old(v)))
            .expect("restriction stays valid")
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> EdgeColouring {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        EdgeColouring::from_fn(self.n, self.k, |u, v| self.colour(inv[u], inv[v]))
            .expect("permutation stays valid")
    }

    /// Renames colours: colour `c` becomes `perm[c - 1]`.
    pub fn permute_colours(&self, perm: &[u8]) -> EdgeColouring {
        assert_eq!(perm.len(), self.k);
        EdgeColouring::from_fn(self.n, self.k, |u, v| perm[self.colour(u, v) as usize - 1])
            .expect("colour renaming stays valid")
    }

    /// Writes the colouring file format read by [`EdgeColouring::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("colouring {} {}\n", self.n, self.k);
        for (u, v) in pairs(self.n) {
            s.push_str(&format!("{u} {v} {}\n", self.colour(u, v)));
        }
        s
    }

    /// Parses `colouring <n> <k>` followed by one `<u> <v> <c>` line for
    /// every pair `u < v`; all pairs are required exactly once.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut seen: Vec<Option<u8>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            if header.is_none() {
                if toks.len() != 3 || toks[0] != "colouring" {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `colouring <n> <k>` header".into(),
                    });
                }
                let n = parse_usize(toks[1], line)?;
                let k = parse_usize(toks[2], line)?;
                Self::validate_header(n, k).map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
                if k > u8::MAX as usize {
                    return Err(Error::Parse {
                        line,
                        msg: "too many colours".into(),
                    });
                }
                seen = vec![None; choose2(n)];
                header = Some((n, k));
                continue;
            }
            let (n, k) = header.unwrap();
            if toks.len() != 3 {
                return Err(Error::Parse {
                    line,
                    msg: "expected `<u> <v> <c>`".into(),
                });
            }
            let u = parse_usize(toks[0], line)?;
            let v = parse_usize(toks[1], line)?;
            let c = parse_usize(toks[2], line)?;
            if !(u < v && v < n) {
                return Err(Error::Parse {
                    line,
                    msg: format!("pair ({u},{v}) must satisfy 0 <= u < v < {n}"),
                });
            }
            if c == 0 || c > k {
                return Err(Error::Parse {
                    line,
                    msg: format!("colour {c} outside 1..={k}"),
                });
            }
            let slot = &mut seen[pair_index(n, u, v)];
            if slot.is_some() {
                return Err(Error::Parse {
                    line,
                    msg: format!("pair ({u},{v}) coloured twice"),
                });
            }
            *slot = Some(c as u8);
        }
        let (n, k) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing colouring header".into(),
        })?;
        let colours = seen
            .into_iter()
            .collect::<Option<Vec<u8>>>()
            .ok_or(Error::Parse {
                line: 0,
                msg: "not all pairs coloured".into(),
            })?;
        Ok(EdgeColouring { n, k, colours })
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        EdgeColouring::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, self.to_text())?)
    }
}

impl fmt::Debug for EdgeColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts = vec![0usize; self.k];
        for &c in &self.colours {
            counts[c as usize - 1] += 1;
        }
        write!(
            f,
            "EdgeColouring(n={}, k={}, class sizes={counts:?})",
            self.n, self.k
        )
    }
}

/// A colouring of the singletons and pairs of a point set `[r]`.
///
/// Points are 0-based in the API; the file format uses 1-based points to
/// match the usual `[r]` notation. The colour of the empty set is not
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TemplateColouring {
    r: usize,
    k: usize,
    vcolour: Vec<u8>,
    pcolour: Vec<u8>, // lexicographic pair order
}

impl TemplateColouring {
    pub fn new(r: usize, k: usize, vcolour: Vec<u8>, pcolour: Vec<u8>) -> Result<Self> {
        if k == 0 {
            return Err(Error::parameter("colour count must be at least 1"));
        }
        if r == 0 {
            return Err(Error::parameter("templates need at least one point"));
        }
        if vcolour.len() != r || pcolour.len() != choose2(r) {
            return Err(Error::parameter(format!(
                "template needs {r} point colours and {} pair colours",
                choose2(r)
            )));
        }
        if vcolour
            .iter()
            .chain(&pcolour)
            .any(|&c| c == 0 || c as usize > k)
        {
            return Err(Error::parameter(format!(
                "template colours must lie in 1..={k}"
            )));
        }
        Ok(TemplateColouring {
            r,
            k,
            vcolour,
            pcolour,
        })
    }

    pub fn points(&self) -> usize {
        self.r
    }

    pub fn colour_count(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn point_colour(&self, i: usize) -> u8 {
        self.vcolour[i]
    }

    #[inline]
    pub fn pair_colour(&self, i: usize, j: usize) -> u8 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.pcolour[pair_index(self.r, a, b)]
    }

    /// The graph on the points carrying exactly the colour-`c` pairs.
    pub fn pair_class(&self, c: u8) -> Result<Graph> {
        if c == 0 || c as usize > self.k {
            return Err(Error::parameter(format!(
                "colour {c} outside 1..={}",
                self.k
            )));
        }
        let mut g = Graph::empty(self.r)?;
        for (i, j) in pairs(self.r) {
            if self.pair_colour(i, j) == c {
                g.add_edge(i, j);
            }
        }
        Ok(g)
    }

    /// Distinct colours used on points, ascending.
    pub fn point_colour_set(&self) -> Vec<u8> {
        let mut cs: Vec<u8> = self.vcolour.clone();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    /// Relabels points: point `i` becomes `perm[i]`.
    pub fn permute_points(&self, perm: &[usize]) -> TemplateColouring {
        assert_eq!(perm.len(), self.r);
        let mut inv = vec![0usize; self.r];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let vcolour = (0..self.r).map(|i| self.vcolour[inv[i]]).collect();
        let pcolour = pairs(self.r)
            .map(|(i, j)| self.pair_colour(inv[i], inv[j]))
            .collect();
        TemplateColouring {
            r: self.r,
            k: self.k,
            vcolour,
            pcolour,
        }
    }

    /// Writes the template file format read by [`TemplateColouring::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("template {} {}\n", self.r, self.k);
        for i in 0..self.r {
            s.push_str(&format!("v {} {}\n", i + 1, self.vcolour[i]));
        }
        for (i, j) in pairs(self.r) {
            s.push_str(&format!(
                "p {} {} {}\n",
                i + 1,
                j + 1,
                self.pair_colour(i, j)
            ));
        }
        s
    }

    /// Parses `template <r> <k>`, then `r` lines `v <i> <c>`, then `C(r,2)`
    /// lines `p <i> <j> <c>`, with 1-based point indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut vseen: Vec<Option<u8>> = Vec::new();
        let mut pseen: Vec<Option<u8>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            if header.is_none() {
                if toks.len() != 3 || toks[0] != "template" {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `template <r> <k>` header".into(),
                    });
                }
                let r = parse_usize(toks[1], line)?;
                let k = parse_usize(toks[2], line)?;
                if r == 0 || r > crate::graph::MAX_VERTICES || k == 0 || k > u8::MAX as usize {
                    return Err(Error::Parse {
                        line,
                        msg: "bad template dimensions".into(),
                    });
                }
                vseen = vec![None; r];
                pseen = vec![None; choose2(r)];
                header = Some((r, k));
                continue;
            }
            let (r, k) = header.unwrap();
            let colour_tok = |c: usize| -> Result<u8> {
                if c == 0 || c > k {
                    Err(Error::Parse {
                        line,
                        msg: format!("colour {c} outside 1..={k}"),
                    })
                } else {
                    Ok(c as u8)
                }
            };
            match toks.as_slice() {
                ["v", i, c] => {
                    let i = parse_usize(i, line)?;
                    if i == 0 || i > r {
                        return Err(Error::Parse {
                            line,
                            msg: format!("point {i} outside 1..={r}"),
                        });
                    }
                    let c = colour_tok(parse_usize(c, line)?)?;
                    if vseen[i - 1].replace(c).is_some() {
                        return Err(Error::Parse {
                            line,
                            msg: format!("point {i} coloured twice"),
                        });
                    }
                }
                ["p", i, j, c] => {
                    let i = parse_usize(i, line)?;
                    let j = parse_usize(j, line)?;
                    if i == 0 || j == 0 || i > r || j > r || i == j {
                        return Err(Error::Parse {
                            line,
                            msg: format!("bad pair ({i},{j})"),
                        });
                    }
                    let (a, b) = if i < j {
                        (i - 1, j - 1)
                    } else {
                        (j - 1, i - 1)
                    };
                    let c = colour_tok(parse_usize(c, line)?)?;
                    if pseen[pair_index(r, a, b)].replace(c).is_some() {
                        return Err(Error::Parse {
                            line,
                            msg: format!("pair ({i},{j}) coloured twice"),
                        });
                    }
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `v <i> <c>` or `p <i> <j> <c>`".into(),
                    })
                }
            }
        }
        let (r, k) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing template header".into(),
        })?;
        let vcolour = vseen
            .into_iter()
            .collect::<Option<Vec<u8>>>()
            .ok_or(Error::Parse {
                line: 0,
                msg: "not all points coloured".into(),
            })?;
        let pcolour = pseen
            .into_iter()
            .collect::<Option<Vec<u8>>>()
            .ok_or(Error::Parse {
                line: 0,
                msg: "not all pairs coloured".into(),
            })?;
        TemplateColouring::new(r, k, vcolour, pcolour)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        TemplateColouring::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, self.to_text())?)
    }
}

impl fmt::Debug for TemplateColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TemplateColouring(r={}, k={}, vcolour={:?})",
            self.r, self.k, self.vcolour
        )
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid number `{tok}`"),
    })
}

/// The blow-up of a template: point `i` becomes a block of `sizes[i]`
/// consecutive vertices; pairs inside block `i` take the point colour of
/// `i`, pairs across blocks `i`, `j` take the pair colour of `{i, j}`.
pub fn blow_up(template: &TemplateColouring, sizes: &[usize]) -> Result<EdgeColouring> {
    if sizes.len() != template.points() {
        return Err(Error::parameter(format!(
            "blow-up needs {} part sizes, got {}",
            template.points(),
            sizes.len()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::parameter("blow-up part sizes must be at least 1"));
    }
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    EdgeColouring::from_fn(n, template.colour_count(), |u, v| {
        if part[u] == part[v] {
            template.point_colour(part[u])
        } else {
            template.pair_colour(part[u], part[v])
        }
    })
}

/// Why a template failed the feasibility check.
#[derive(Clone, Debug)]
pub enum FeasibilityViolation {
    /// A pair shares its colour with one of its points.
    PointPairClash { pair: (usize, usize), point: usize },
    /// A pair-colour class contains a homomorphic copy of its forbidden
    /// graph; the embedding maps that graph into the class.
    MonochromaticHom { colour: u8, embedding: Embedding },
}

/// Outcome of the feasibility check; feasible iff no violation.
#[derive(Clone, Debug)]
pub struct FeasibilityVerdict {
    pub violation: Option<FeasibilityViolation>,
}

impl FeasibilityVerdict {
    pub fn feasible(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks a template against forbidden graphs, one per colour: no pair may
/// share a colour with one of its points, and no pair-colour class may
/// contain a homomorphic copy of its forbidden graph.
pub fn is_feasible(template: &TemplateColouring, hs: &[Graph]) -> Result<FeasibilityVerdict> {
    if hs.len() != template.colour_count() {
        return Err(Error::parameter(format!(
            "expected {} forbidden graphs, got {}",
            template.colour_count(),
            hs.len()
        )));
    }
    for (i, j) in pairs(template.points()) {
        let c = template.pair_colour(i, j);
        for p in [i, j] {
            if template.point_colour(p) == c {
                return Ok(FeasibilityVerdict {
                    violation: Some(FeasibilityViolation::PointPairClash {
                        pair: (i, j),
                        point: p,
                    }),
                });
            }
        }
    }
    for (idx, h) in hs.iter().enumerate() {
        let c = (idx + 1) as u8;
        let class = template.pair_class(c)?;
        if let Some(embedding) = homomorphism_exists(h, &class) {
            return Ok(FeasibilityVerdict {
                violation: Some(FeasibilityViolation::MonochromaticHom {
                    colour: c,
                    embedding,
                }),
            });
        }
    }
    Ok(FeasibilityVerdict { violation: None })
}
