use std::collections::BTreeMap;
#[cfg(test)]
use std::collections::BTreeSet;
use std::fmt;

/// A triangulation of the polygon with vertices `0..=n`, stored as a sorted
/// list of triangles with ascending vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    n: usize,
    triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Canonicalizes `triangles`; the result is not checked, see
    /// [`validate`](Self::validate).
    pub fn new(n: usize, triangles: impl IntoIterator<Item = [usize; 3]>) -> Self {
        let mut ts: Vec<[usize; 3]> = triangles
            .into_iter()
            .map(|mut t| {
                t.sort_unstable();
                t
            })
            .collect();
        ts.sort_unstable();
        ts.dedup();
        Triangulation { n, triangles: ts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// The fan of triangles `{0, j, j+1}`.
    pub fn fan(n: usize) -> Self {
        Triangulation::new(n, (1..n).map(|j| [0, j, j + 1]))
    }

    /// Edges used by the triangles, each with its multiplicity.
    fn edge_counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for &[a, b, c] in &self.triangles {
            for e in [(a, b), (a, c), (b, c)] {
                *m.entry(e).or_insert(0) += 1;
            }
        }
        m
    }

    /// Diagonals: edges that are not sides of the polygon.
    pub fn diagonals(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        self.edge_counts()
            .into_keys()
            .filter(|&(a, b)| b != a + 1 && !(a == 0 && b == n))
            .collect()
    }

    /// Problems with the triangulation; empty iff it is one.
    pub fn validate(&self) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        if n < 2 {
            out.push(format!("a polygon needs at least 3 vertices, got {}", n + 1));
            return out;
        }
        if self.triangles.len() != n - 1 {
            out.push(format!("{} triangles, expected {}", self.triangles.len(), n - 1));
        }
        for t in &self.triangles {
            if t[2] > n || t[0] == t[1] || t[1] == t[2] {
                out.push(format!("bad triangle {t:?}"));
            }
        }
        let counts = self.edge_counts();
        for a in 0..n {
            if counts.get(&(a, a + 1)) != Some(&1) {
                out.push(format!("side {a}{} not covered exactly once", a + 1));
            }
        }
        if counts.get(&(0, n)) != Some(&1) {
            out.push(format!("side 0{n} not covered exactly once"));
        }
        let diags = self.diagonals();
        for &d in &diags {
            if counts[&d] != 2 {
                out.push(format!("diagonal {d:?} lies in {} triangles", counts[&d]));
            }
        }
        for (k, &(a, b)) in diags.iter().enumerate() {
            for &(c, d) in &diags[k + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    out.push(format!("diagonals {a}{b} and {c}{d} cross"));
                }
            }
        }
        if !self.dual_is_tree() {
            out.push("dual graph is not a tree".into());
        }
        out
    }

    /// Adjacency of triangles sharing an edge.
    pub fn dual_edges(&self) -> Vec<(usize, usize, (usize, usize))> {
        let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (k, &[a, b, c]) in self.triangles.iter().enumerate() {
            for e in [(a, b), (a, c), (b, c)] {
                by_edge.entry(e).or_default().push(k);
            }
        }
        let mut out = Vec::new();
        for (e, ts) in by_edge {
            for x in 0..ts.len() {
                for y in x + 1..ts.len() {
                    out.push((ts[x], ts[y], e));
                }
            }
        }
        out
    }

    fn dual_is_tree(&self) -> bool {
        let m = self.triangles.len();
        if m == 0 {
            return false;
        }
        let edges = self.dual_edges();
        if edges.len() != m - 1 {
            return false;
        }
        let mut seen = vec![false; m];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for &(a, b, _) in &edges {
                for (u, v) in [(a, b), (b, a)] {
                    if u == t && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// All triangulations obtained by flipping one diagonal.
    pub fn flips(&self) -> Vec<Triangulation> {
        let mut out = Vec::new();
        for (x, y, (a, b)) in self.dual_edges() {
            let apex = |t: [usize; 3]| t.into_iter().find(|&v| v != a && v != b).unwrap();
            let c = apex(self.triangles[x]);
            let d = apex(self.triangles[y]);
            let mut ts: Vec<[usize; 3]> = self
                .triangles
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != x && k != y)
                .map(|(_, &t)| t)
                .collect();
            ts.push([a, c, d]);
            ts.push([b, c, d]);
            out.push(Triangulation::new(self.n, ts));
        }
        out.sort();
        out
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .triangles
            .iter()
            .map(|t| {
                if self.n < 10 {
                    format!("{}{}{}", t[0], t[1], t[2])
                } else {
                    format!("{}.{}.{}", t[0], t[1], t[2])
                }
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All triangulations of the polygon with vertices `0..=n`, sorted. Empty for
/// `n < 2`.
///
/// The side `{0, n}` lies in exactly one triangle `{0, k, n}`; the two
/// remaining sub-polygons are triangulated recursively.
pub fn enumerate_triangulations(n: usize) -> Vec<Triangulation> {
    if n < 2 {
        return Vec::new();
    }
    let mut out: Vec<Triangulation> = interval(0, n)
        .into_iter()
        .map(|ts| Triangulation::new(n, ts))
        .collect();
    out.sort();
    out
}

fn interval(a: usize, b: usize) -> Vec<Vec<[usize; 3]>> {
    if b < a + 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in a + 1..b {
        let left = interval(a, k);
        let right = interval(k, b);
        for l in &left {
            for r in &right {
                let mut ts = l.clone();
                ts.extend_from_slice(r);
                ts.push([a, k, b]);
                out.push(ts);
            }
        }
    }
    out
}
