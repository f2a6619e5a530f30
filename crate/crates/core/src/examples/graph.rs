use crate::doublecat::FiniteDoubleCategory;
use crate::error::{Error, Result};
use crate::simplicial::{FiniteCategory, TruncatedSimplicialSet};
use std::collections::HashMap;

/// A finite simple graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from vertex names and edges given by name.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(k, v)| (v.as_str(), k)).collect();
        let mut out = Vec::new();
        for (a, b) in edges {
            let look = |v: &str| index.get(v).copied().ok_or_else(|| Error::Malformed(format!("unknown vertex {v:?}")));
            out.push((look(a.as_ref())?, look(b.as_ref())?));
        }
        let g = Graph { vertices, edges: out };
        let problems = g.validate();
        if problems.is_empty() {
            Ok(g)
        } else {
            Err(Error::Malformed(problems.join("; ")))
        }
    }

    /// The path on the given vertices.
    pub fn path<S: AsRef<str>>(vertices: &[S]) -> Graph {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let edges = (1..vertices.len()).map(|k| (k - 1, k)).collect();
        Graph { vertices, edges }
    }

    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for v in &self.vertices {
            if v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_') {
                out.push(format!("vertex name {v:?} must be a nonempty alphanumeric word"));
            }
            if !seen.insert(v) {
                out.push(format!("duplicate vertex {v:?}"));
            }
        }
        if self.vertices.len() > 16 {
            out.push("at most 16 vertices are supported".into());
        }
        let mut pairs = std::collections::HashSet::new();
        for &(a, b) in &self.edges {
            if a >= self.vertices.len() || b >= self.vertices.len() {
                out.push(format!("edge ({a}, {b}) has an endpoint out of range"));
            } else if a == b {
                out.push(format!("loop at {}", self.vertices[a]));
            } else if !pairs.insert((a.min(b), a.max(b))) {
                out.push(format!("duplicate edge {}-{}", self.vertices[a], self.vertices[b]));
            }
        }
        if self.edges.len() > 64 {
            out.push("at most 64 edges are supported".into());
        }
        out
    }
}

/// A subgraph as a vertex mask and a mask over the edges of the ambient
/// graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgraph {
    pub vertices: u32,
    pub edges: u64,
}

/// Sorted vertex order and edge endpoint masks of a graph, used for
/// enumeration and naming.
struct Ambient<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    edge_mask: Vec<u32>,
}

impl<'a> Ambient<'a> {
    fn new(g: &'a Graph) -> Result<Self> {
        let problems = g.validate();
        if !problems.is_empty() {
            return Err(Error::Malformed(problems.join("; ")));
        }
        let mut order: Vec<usize> = (0..g.vertices.len()).collect();
        order.sort_by(|&a, &b| g.vertices[a].cmp(&g.vertices[b]));
        let edge_mask = g.edges.iter().map(|&(a, b)| (1u32 << a) | (1u32 << b)).collect();
        Ok(Ambient { g, order, edge_mask })
    }

    fn induced_edges(&self, vertices: u32) -> u64 {
        let mut m = 0u64;
        for (k, &e) in self.edge_mask.iter().enumerate() {
            if e & vertices == e {
                m |= 1 << k;
            }
        }
        m
    }

    fn restrict(&self, h: Subgraph, vertices: u32) -> Subgraph {
        Subgraph { vertices: h.vertices & vertices, edges: h.edges & self.induced_edges(h.vertices & vertices) }
    }

    fn subgraphs(&self) -> Vec<Subgraph> {
        let nv = self.g.vertices.len();
        let mut out = Vec::new();
        for vm in 0u32..(1 << nv) {
            let induced = self.induced_edges(vm);
            // all submasks of the induced edge mask
            let mut e = induced;
            loop {
                out.push(Subgraph { vertices: vm, edges: e });
                if e == 0 {
                    break;
                }
                e = (e - 1) & induced;
            }
        }
        out.sort();
        out
    }

    fn block_name(&self, mask: u32) -> String {
        let names: Vec<&str> =
            self.order.iter().filter(|&&v| mask >> v & 1 == 1).map(|&v| self.g.vertices[v].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    fn subgraph_name(&self, h: Subgraph) -> String {
        let names: Vec<&str> =
            self.order.iter().filter(|&&v| h.vertices >> v & 1 == 1).map(|&v| self.g.vertices[v].as_str()).collect();
        let mut edges: Vec<String> = (0..self.g.edges.len())
            .filter(|&k| h.edges >> k & 1 == 1)
            .map(|k| {
                let (a, b) = self.g.edges[k];
                let (a, b) = (&self.g.vertices[a], &self.g.vertices[b]);
                if a <= b {
                    format!("{a}-{b}")
                } else {
                    format!("{b}-{a}")
                }
            })
            .collect();
        edges.sort();
        format!("{{{}|{}}}", names.join(","), edges.join(","))
    }

    /// Identifier of `(H; S_1, ..., S_n)`: the subgraph alone on levels 0
    /// and 1, followed by the blocks above that.
    fn cell_name(&self, h: Subgraph, blocks: &[u32]) -> String {
        let mut s = self.subgraph_name(h);
        if blocks.len() >= 2 {
            for &b in blocks {
                s.push(';');
                s.push_str(&self.block_name(b));
            }
        }
        s
    }
}

fn check_budget(subgraphs: &[Subgraph], dim: usize, budget: usize) -> Result<()> {
    let mut total: usize = 0;
    for n in 0..=dim {
        for h in subgraphs {
            let k = h.vertices.count_ones();
            let cells = if n == 0 {
                usize::from(k == 0)
            } else {
                (n as u128).checked_pow(k).map_or(usize::MAX, |c| usize::try_from(c).unwrap_or(usize::MAX))
            };
            total = total.saturating_add(cells);
        }
        if total > budget {
            return Err(Error::Budget { what: "cells".into(), count: total, limit: budget });
        }
    }
    Ok(())
}

/// All ordered partitions of `mask` into `n` possibly empty blocks.
fn ordered_partitions(mask: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if mask == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut first = mask;
    loop {
        for mut rest in ordered_partitions(mask & !first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
        if first == 0 {
            break;
        }
        first = (first - 1) & mask;
    }
    out
}

/// The 2-Segal set of a graph up to level `dim`.
///
/// Level `n` consists of a subgraph `H` with an ordered partition of its
/// vertices into `n` possibly empty blocks. The outer faces drop the first
/// or last block and pass to the full subgraph on the remaining vertices,
/// inner faces merge adjacent blocks, and degeneracies insert an empty
/// block. Fails with a budget error when the number of cells would exceed
/// `budget`.
pub fn graph_two_segal(g: &Graph, dim: usize, budget: usize) -> Result<TruncatedSimplicialSet> {
    let amb = Ambient::new(g)?;
    let subgraphs = amb.subgraphs();
    check_budget(&subgraphs, dim, budget)?;
    let mut levels: Vec<Vec<(Subgraph, Vec<u32>)>> = Vec::new();
    for n in 0..=dim {
        let mut l = Vec::new();
        for &h in &subgraphs {
            for p in ordered_partitions(h.vertices, n) {
                l.push((h, p));
            }
        }
        levels.push(l);
    }
    let index: Vec<HashMap<(Subgraph, &[u32]), usize>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(k, (h, p))| ((*h, p.as_slice()), k)).collect())
        .collect();
    let look = |n: usize, h: Subgraph, p: &[u32]| -> Result<usize> {
        index[n].get(&(h, p)).copied().ok_or_else(|| Error::Internal(format!("cell missing on level {n}")))
    };
    let mut face = vec![Vec::new()];
    for n in 1..=dim {
        let mut per_i = Vec::new();
        for i in 0..=n {
            let mut t = Vec::with_capacity(levels[n].len());
            for (h, p) in &levels[n] {
                let k = if i == 0 {
                    look(n - 1, amb.restrict(*h, h.vertices & !p[0]), &p[1..])?
                } else if i == n {
                    look(n - 1, amb.restrict(*h, h.vertices & !p[n - 1]), &p[..n - 1])?
                } else {
                    let mut q = p.clone();
                    q[i - 1] |= q[i];
                    q.remove(i);
                    look(n - 1, *h, &q)?
                };
                t.push(k);
            }
            per_i.push(t);
        }
        face.push(per_i);
    }
    let mut degen = Vec::new();
    for n in 0..dim {
        let mut per_i = Vec::new();
        for i in 0..=n {
            let mut t = Vec::with_capacity(levels[n].len());
            for (h, p) in &levels[n] {
                let mut q = p.clone();
                q.insert(i, 0);
                t.push(look(n + 1, *h, &q)?);
            }
            per_i.push(t);
        }
        degen.push(per_i);
    }
    let cells = levels.iter().map(|l| l.iter().map(|(h, p)| amb.cell_name(*h, p)).collect()).collect();
    TruncatedSimplicialSet::from_tables(dim, cells, face, degen)
}

/// The double category of a graph, described directly.
///
/// Objects are subgraphs. A subgraph `H` with a vertex subset `S` is both
/// the horizontal morphism `H|S -> H` and the vertical morphism
/// `H -> H|(v(H) \ S)`, where `H|T` is the full subgraph on `T`. Squares are
/// subgraphs with an ordered partition `(S_1, S_2, S_3)` of their vertices.
/// The augmentation is the empty graph.
pub fn graph_double(g: &Graph) -> Result<(FiniteDoubleCategory, Vec<usize>)> {
    let amb = Ambient::new(g)?;
    let subgraphs = amb.subgraphs();
    let obj: HashMap<Subgraph, usize> = subgraphs.iter().enumerate().map(|(k, &h)| (h, k)).collect();
    let mut mors: Vec<(Subgraph, u32)> = Vec::new();
    let mut sqs: Vec<(Subgraph, [u32; 3])> = Vec::new();
    for &h in &subgraphs {
        for p in ordered_partitions(h.vertices, 2) {
            mors.push((h, p[0]));
        }
        for p in ordered_partitions(h.vertices, 3) {
            sqs.push((h, [p[0], p[1], p[2]]));
        }
    }
    let midx: HashMap<(Subgraph, u32), usize> = mors.iter().enumerate().map(|(k, &m)| (m, k)).collect();
    let sidx: HashMap<(Subgraph, [u32; 3]), usize> = sqs.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let names: Vec<String> = subgraphs.iter().map(|&h| amb.subgraph_name(h)).collect();
    let mor_names: Vec<String> =
        mors.iter().map(|&(h, s)| amb.cell_name(h, &[s, h.vertices & !s])).collect();
    let restrict = |h: Subgraph, s: u32| amb.restrict(h, s);
    let mut hor = FiniteCategory {
        objects: names.clone(),
        morphisms: mor_names.clone(),
        src: mors.iter().map(|&(h, s)| obj[&restrict(h, s)]).collect(),
        tgt: mors.iter().map(|&(h, _)| obj[&h]).collect(),
        identity: subgraphs.iter().map(|&h| midx[&(h, h.vertices)]).collect(),
        compose: HashMap::new(),
    };
    let mut ver = FiniteCategory {
        objects: names,
        morphisms: mor_names,
        src: mors.iter().map(|&(h, _)| obj[&h]).collect(),
        tgt: mors.iter().map(|&(h, s)| obj[&restrict(h, h.vertices & !s)]).collect(),
        identity: subgraphs.iter().map(|&h| midx[&(h, 0)]).collect(),
        compose: HashMap::new(),
    };
    // morphisms grouped by their graph
    let mut over: HashMap<Subgraph, Vec<usize>> = HashMap::new();
    for (k, &(h, _)) in mors.iter().enumerate() {
        over.entry(h).or_default().push(k);
    }
    for (k, &(h, s)) in mors.iter().enumerate() {
        // horizontal: (h, s) then (h2, t) with h2|t = h gives (h2, s)
        for (l, &(h2, t)) in mors.iter().enumerate() {
            if restrict(h2, t) == h {
                hor.compose.insert((k, l), midx[&(h2, s)]);
            }
        }
        // vertical: (h, s) then (h|(v \ s), t) gives (h, s + t)
        let rest = restrict(h, h.vertices & !s);
        for &l in &over[&rest] {
            ver.compose.insert((k, l), midx[&(h, s | mors[l].1)]);
        }
    }
    let mut d = FiniteDoubleCategory {
        hor,
        ver,
        squares: sqs.iter().map(|(h, p)| amb.cell_name(*h, p)).collect(),
        s_h: sqs.iter().map(|&(h, [a, b, _])| midx[&(restrict(h, a | b), a)]).collect(),
        t_h: sqs.iter().map(|&(h, [a, _, _])| midx[&(h, a)]).collect(),
        s_v: sqs.iter().map(|&(h, [a, b, _])| midx[&(h, a | b)]).collect(),
        t_v: sqs.iter().map(|&(h, [_, b, c])| midx[&(restrict(h, b | c), b)]).collect(),
        ..Default::default()
    };
    let mut sq_over: HashMap<Subgraph, Vec<usize>> = HashMap::new();
    for (k, &(h, _)) in sqs.iter().enumerate() {
        sq_over.entry(h).or_default().push(k);
    }
    for (k, &(h, [a, b, c])) in sqs.iter().enumerate() {
        // horizontal: a square over h2 with blocks (a, b + c, c2) and h2|(a + b + c) = h
        for (l, &(h2, [a2, bc, c2])) in sqs.iter().enumerate() {
            if a2 == a && bc == b | c && restrict(h2, a | b | c) == h {
                d.comp_h.insert((k, l), sidx[&(h2, [a, b, c | c2])]);
            }
        }
        // vertical: a square over h|(b + c) with blocks (a2, b2, c) and a2 + b2 = b
        for &l in &sq_over[&restrict(h, b | c)] {
            let (_, [a2, b2, c2]) = sqs[l];
            if c2 == c && a2 | b2 == b {
                d.comp_v.insert((k, l), sidx[&(h, [a | a2, b2, c])]);
            }
        }
    }
    d.id_h = mors.iter().map(|&(h, s)| sidx[&(h, [s, h.vertices & !s, 0])]).collect();
    d.id_v = mors.iter().map(|&(h, s)| sidx[&(h, [0, s, h.vertices & !s])]).collect();
    let empty = obj[&Subgraph { vertices: 0, edges: 0 }];
    Ok((d, vec![empty]))
}
