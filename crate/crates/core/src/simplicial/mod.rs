//! Truncated simplicial sets with explicit face and degeneracy tables.

mod extend;
mod nerve;
mod segal;
mod triangulation;

pub use extend::{coskeletal_extend, extend_map};
pub use nerve::{fundamental_category, nerve, validate_category, FiniteCategory};
pub use segal::{
    check_1segal, check_2segal_pathspace, check_2segal_triangulations, check_tsegal,
    check_unital, path_space, segal_map_1, segal_map_t, spine_codomain,
    triangulation_codomain, PathSide, SegalCodomain,
};
pub use triangulation::{enumerate_triangulations, Triangulation};

use crate::error::{Error, Result};
use std::collections::HashMap;

/// Default truncation level.
pub const DEFAULT_DIM: usize = 4;

/// A simplicial set stored up to level `dim`.
///
/// Cells are addressed by `(level, index)`; each cell also carries a string
/// identifier, unique within its level. `face(n, i, x)` is defined for
/// `1 <= n <= dim`, `i <= n`; `degen(n, i, x)` for `n < dim`, `i <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSimplicialSet {
    dim: usize,
    cells: Vec<Vec<String>>,
    index: Vec<HashMap<String, usize>>,
    face: Vec<Vec<Vec<usize>>>,
    degen: Vec<Vec<Vec<usize>>>,
}

impl TruncatedSimplicialSet {
    /// Builds a set from index tables. `face[n][i][x]` for `n` in `1..=dim`
    /// (the entry for `n = 0` must be empty) and `degen[n][i][x]` for `n` in
    /// `0..dim`.
    pub fn from_tables(
        dim: usize,
        cells: Vec<Vec<String>>,
        face: Vec<Vec<Vec<usize>>>,
        degen: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if cells.len() != dim + 1 {
            return Err(Error::Malformed(format!(
                "expected {} levels of cells, got {}",
                dim + 1,
                cells.len()
            )));
        }
        let mut index = Vec::with_capacity(dim + 1);
        for (n, level) in cells.iter().enumerate() {
            let mut map = HashMap::with_capacity(level.len());
            for (k, id) in level.iter().enumerate() {
                if map.insert(id.clone(), k).is_some() {
                    return Err(Error::Malformed(format!("duplicate cell {id:?} at level {n}")));
                }
            }
            index.push(map);
        }
        if face.len() != dim + 1 || !face[0].is_empty() {
            return Err(Error::Malformed("face table has the wrong shape".into()));
        }
        for n in 1..=dim {
            if face[n].len() != n + 1 {
                return Err(Error::Malformed(format!("level {n} needs {} face maps", n + 1)));
            }
            for (i, t) in face[n].iter().enumerate() {
                check_table(t, cells[n].len(), cells[n - 1].len(), "face", n, i)?;
            }
        }
        if degen.len() != dim {
            return Err(Error::Malformed("degeneracy table has the wrong shape".into()));
        }
        for n in 0..dim {
            if degen[n].len() != n + 1 {
                return Err(Error::Malformed(format!(
                    "level {n} needs {} degeneracy maps",
                    n + 1
                )));
            }
            for (i, t) in degen[n].iter().enumerate() {
                check_table(t, cells[n].len(), cells[n + 1].len(), "degeneracy", n, i)?;
            }
        }
        Ok(TruncatedSimplicialSet {
            dim,
            cells,
            index,
            face,
            degen,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self, n: usize) -> usize {
        self.cells[n].len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|l| l.is_empty())
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(|l| l.len()).collect()
    }

    pub fn cells(&self, n: usize) -> &[String] {
        &self.cells[n]
    }

    pub fn id(&self, n: usize, x: usize) -> &str {
        &self.cells[n][x]
    }

    pub fn lookup(&self, n: usize, id: &str) -> Option<usize> {
        self.index.get(n)?.get(id).copied()
    }

    #[inline]
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.face[n][i][x]
    }

    #[inline]
    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.degen[n][i][x]
    }

    /// Restriction of the `n`-cell `x` to the vertex subset `keep` (strictly
    /// increasing, nonempty, entries `<= n`): applies `d_i` for every omitted
    /// `i`, in decreasing order.
    pub fn face_restrict(&self, n: usize, x: usize, keep: &[usize]) -> usize {
        debug_assert!(!keep.is_empty() && keep.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(*keep.last().unwrap() <= n);
        let mut cur = x;
        let mut level = n;
        for i in (0..=n).rev() {
            if keep.binary_search(&i).is_err() {
                cur = self.face(level, i, cur);
                level -= 1;
            }
        }
        cur
    }

    /// [`face_restrict`](Self::face_restrict) with argument checking.
    pub fn try_face_restrict(&self, n: usize, x: usize, keep: &[usize]) -> Result<usize> {
        if n > self.dim || x >= self.len(n) {
            return Err(Error::Argument(format!("no {n}-cell with index {x}")));
        }
        if keep.is_empty() || keep.windows(2).any(|w| w[0] >= w[1]) || keep.iter().any(|&i| i > n) {
            return Err(Error::Argument(format!("{keep:?} is not a nonempty increasing subset of 0..={n}")));
        }
        Ok(self.face_restrict(n, x, keep))
    }

    /// The image of the `n`-cell `x` under the simplicial operator of the
    /// monotone map `[k] -> [n]` with values `verts`: restriction to the
    /// distinct values, then one degeneracy for each repeat.
    pub fn operator(&self, n: usize, x: usize, verts: &[usize]) -> usize {
        debug_assert!(!verts.is_empty() && verts.windows(2).all(|w| w[0] <= w[1]));
        let mut keep = verts.to_vec();
        keep.dedup();
        let mut cur = self.face_restrict(n, x, &keep);
        let mut level = keep.len() - 1;
        for p in 0..verts.len() - 1 {
            if verts[p] == verts[p + 1] {
                cur = self.degen(level, p, cur);
                level += 1;
            }
        }
        cur
    }

    /// The truncation to levels `0..=dim`.
    pub fn truncate(&self, dim: usize) -> Result<Self> {
        if dim > self.dim {
            return Err(Error::Argument(format!(
                "cannot truncate a {}-truncated set to level {dim}",
                self.dim
            )));
        }
        Ok(TruncatedSimplicialSet {
            dim,
            cells: self.cells[..=dim].to_vec(),
            index: self.index[..=dim].to_vec(),
            face: self.face[..=dim].to_vec(),
            degen: self.degen[..dim].to_vec(),
        })
    }

    /// Face tables as `(level, i, table)`; used by serialization.
    pub(crate) fn face_tables(&self) -> &[Vec<Vec<usize>>] {
        &self.face
    }

    pub(crate) fn degen_tables(&self) -> &[Vec<Vec<usize>>] {
        &self.degen
    }
}

fn check_table(
    t: &[usize],
    src: usize,
    tgt: usize,
    what: &str,
    n: usize,
    i: usize,
) -> Result<()> {
    if t.len() != src {
        return Err(Error::Malformed(format!(
            "{what} {i} at level {n} is not total: {} of {src} entries",
            t.len()
        )));
    }
    if let Some(bad) = t.iter().find(|&&y| y >= tgt) {
        return Err(Error::Malformed(format!(
            "{what} {i} at level {n} points to missing cell {bad}"
        )));
    }
    Ok(())
}

/// Assembles a [`TruncatedSimplicialSet`] from identifier-level data, as read
/// from a document. Missing entries are reported by [`build`](Self::build).
#[derive(Clone, Debug, Default)]
pub struct SimplicialSetBuilder {
    dim: usize,
    cells: Vec<Vec<String>>,
    face: HashMap<(usize, usize, String), String>,
    degen: HashMap<(usize, usize, String), String>,
}

impl SimplicialSetBuilder {
    pub fn new(dim: usize) -> Self {
        SimplicialSetBuilder {
            dim,
            cells: vec![Vec::new(); dim + 1],
            ..Default::default()
        }
    }

    pub fn cell(&mut self, n: usize, id: impl Into<String>) -> &mut Self {
        self.cells[n].push(id.into());
        self
    }

    pub fn face(&mut self, n: usize, i: usize, x: impl Into<String>, y: impl Into<String>) -> &mut Self {
        self.face.insert((n, i, x.into()), y.into());
        self
    }

    pub fn degen(&mut self, n: usize, i: usize, x: impl Into<String>, y: impl Into<String>) -> &mut Self {
        self.degen.insert((n, i, x.into()), y.into());
        self
    }

    /// Fails with [`Error::Malformed`] listing the first problems found:
    /// duplicate or unknown identifiers and missing table entries.
    pub fn build(&self) -> Result<TruncatedSimplicialSet> {
        let dim = self.dim;
        let mut problems = Vec::new();
        let mut index: Vec<HashMap<&str, usize>> = Vec::new();
        for (n, level) in self.cells.iter().enumerate() {
            let mut m = HashMap::new();
            for (k, id) in level.iter().enumerate() {
                if m.insert(id.as_str(), k).is_some() {
                    problems.push(format!("duplicate cell {id:?} at level {n}"));
                }
            }
            index.push(m);
        }
        for (key, table, what) in [(0usize, &self.face, "face"), (1, &self.degen, "degeneracy")] {
            for ((n, i, x), y) in table {
                let (ok_level, target) = if key == 0 {
                    (*n >= 1 && *n <= dim && *i <= *n, n.wrapping_sub(1))
                } else {
                    (*n < dim && *i <= *n, n + 1)
                };
                if !ok_level {
                    problems.push(format!("{what} entry ({n},{i}) is out of range"));
                    continue;
                }
                if !index[*n].contains_key(x.as_str()) {
                    problems.push(format!("{what} ({n},{i}) mentions unknown cell {x:?}"));
                }
                if !index[target].contains_key(y.as_str()) {
                    problems.push(format!(
                        "{what} ({n},{i}) of {x:?} is unknown cell {y:?} at level {target}"
                    ));
                }
            }
        }
        let mut face = vec![Vec::new()];
        for n in 1..=dim {
            let mut per_i = Vec::new();
            for i in 0..=n {
                let mut t = Vec::with_capacity(self.cells[n].len());
                for x in &self.cells[n] {
                    match self.face.get(&(n, i, x.clone())) {
                        Some(y) => t.push(index[n - 1].get(y.as_str()).copied().unwrap_or(0)),
                        None => problems.push(format!("face ({n},{i}) undefined on {x:?}")),
                    }
                }
                per_i.push(t);
            }
            face.push(per_i);
        }
        let mut degen = Vec::new();
        for n in 0..dim {
            let mut per_i = Vec::new();
            for i in 0..=n {
                let mut t = Vec::with_capacity(self.cells[n].len());
                for x in &self.cells[n] {
                    match self.degen.get(&(n, i, x.clone())) {
                        Some(y) => t.push(index[n + 1].get(y.as_str()).copied().unwrap_or(0)),
                        None => problems.push(format!("degeneracy ({n},{i}) undefined on {x:?}")),
                    }
                }
                per_i.push(t);
            }
            degen.push(per_i);
        }
        if !problems.is_empty() {
            problems.sort();
            let shown = problems.len().min(8);
            let mut msg = problems[..shown].join("; ");
            if problems.len() > shown {
                msg.push_str(&format!("; and {} more", problems.len() - shown));
            }
            return Err(Error::Malformed(msg));
        }
        TruncatedSimplicialSet::from_tables(dim, self.cells.clone(), face, degen)
    }
}

/// A failed simplicial identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityViolation {
    pub identity: String,
    pub level: usize,
    pub cell: String,
}

impl std::fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} fails on {:?} at level {}", self.identity, self.cell, self.level)
    }
}

/// Checks every simplicial identity on every cell; the result is empty iff
/// `x` is a (truncated) simplicial set.
pub fn validate_simplicial(x: &TruncatedSimplicialSet) -> Vec<IdentityViolation> {
    let mut out = Vec::new();
    let d = x.dim();
    let mut bad = |identity: String, level: usize, c: usize| {
        out.push(IdentityViolation {
            identity,
            level,
            cell: x.id(level, c).to_string(),
        })
    };
    // d_i d_j = d_{j-1} d_i for i < j, on level n >= 2
    for n in 2..=d {
        for j in 1..=n {
            for i in 0..j {
                for c in 0..x.len(n) {
                    if x.face(n - 1, i, x.face(n, j, c)) != x.face(n - 1, j - 1, x.face(n, i, c)) {
                        bad(format!("d{i} d{j} = d{} d{i}", j - 1), n, c);
                    }
                }
            }
        }
    }
    // s_i s_j = s_{j+1} s_i for i <= j, on level n <= d-2
    for n in 0..d.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                for c in 0..x.len(n) {
                    if x.degen(n + 1, i, x.degen(n, j, c)) != x.degen(n + 1, j + 1, x.degen(n, i, c)) {
                        bad(format!("s{i} s{j} = s{} s{i}", j + 1), n, c);
                    }
                }
            }
        }
    }
    // mixed identities for d_i s_j on level n (s_j: n -> n+1, d_i: n+1 -> n)
    for n in 0..d {
        for j in 0..=n {
            for i in 0..=n + 1 {
                for c in 0..x.len(n) {
                    let lhs = x.face(n + 1, i, x.degen(n, j, c));
                    let (rhs, name) = if i < j {
                        (x.degen(n - 1, j - 1, x.face(n, i, c)), format!("d{i} s{j} = s{} d{i}", j - 1))
                    } else if i == j || i == j + 1 {
                        (c, format!("d{i} s{j} = id"))
                    } else {
                        (x.degen(n - 1, j, x.face(n, i - 1, c)), format!("d{i} s{j} = s{j} d{}", i - 1))
                    };
                    if lhs != rhs {
                        bad(name, n, c);
                    }
                }
            }
        }
    }
    out
}

/// A levelwise map between truncated simplicial sets: `components[n][x]` is
/// the image of the `n`-cell `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub components: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn dim(&self) -> usize {
        self.components.len().saturating_sub(1)
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.components[n][x]
    }

    pub fn identity(x: &TruncatedSimplicialSet) -> Self {
        SimplicialMap {
            components: (0..=x.dim()).map(|n| (0..x.len(n)).collect()).collect(),
        }
    }

    /// Builds a map by translating identifiers level by level.
    pub fn from_ids<F>(
        src: &TruncatedSimplicialSet,
        tgt: &TruncatedSimplicialSet,
        dim: usize,
        mut f: F,
    ) -> Result<Self>
    where
        F: FnMut(usize, &str) -> Result<String>,
    {
        let mut components = Vec::new();
        for n in 0..=dim {
            let mut comp = Vec::with_capacity(src.len(n));
            for id in src.cells(n) {
                let image = f(n, id)?;
                let y = tgt.lookup(n, &image).ok_or_else(|| {
                    Error::Incompatible(format!("image {image:?} of {id:?} is not a {n}-cell"))
                })?;
                comp.push(y);
            }
            components.push(comp);
        }
        Ok(SimplicialMap { components })
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        let dim = self.dim().min(other.dim());
        SimplicialMap {
            components: (0..=dim)
                .map(|n| self.components[n].iter().map(|&y| other.components[n][y]).collect())
                .collect(),
        }
    }

    pub fn is_levelwise_bijective(&self, tgt: &TruncatedSimplicialSet) -> bool {
        self.components.iter().enumerate().all(|(n, comp)| {
            if comp.len() != tgt.len(n) {
                return false;
            }
            let mut seen = vec![false; comp.len()];
            comp.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
    }
}

/// Checks that `f` is defined on levels `0..=dim`, lands in `tgt`, and
/// commutes with all faces and degeneracies there.
pub fn check_simplicial_map(
    src: &TruncatedSimplicialSet,
    tgt: &TruncatedSimplicialSet,
    f: &SimplicialMap,
) -> Vec<String> {
    let mut out = Vec::new();
    let dim = f.dim();
    if dim > src.dim() || dim > tgt.dim() {
        out.push(format!("map has {} levels but the sets have dimensions {} and {}", dim + 1, src.dim(), tgt.dim()));
        return out;
    }
    for n in 0..=dim {
        if f.components[n].len() != src.len(n) {
            out.push(format!("component {n} is not total"));
            return out;
        }
        if let Some(&y) = f.components[n].iter().find(|&&y| y >= tgt.len(n)) {
            out.push(format!("component {n} names missing cell {y}"));
            return out;
        }
    }
    for n in 1..=dim {
        for i in 0..=n {
            for x in 0..src.len(n) {
                if f.apply(n - 1, src.face(n, i, x)) != tgt.face(n, i, f.apply(n, x)) {
                    out.push(format!("d{i} not preserved at {:?} (level {n})", src.id(n, x)));
                }
            }
        }
    }
    for n in 0..dim {
        for i in 0..=n {
            for x in 0..src.len(n) {
                if f.apply(n + 1, src.degen(n, i, x)) != tgt.degen(n, i, f.apply(n, x)) {
                    out.push(format!("s{i} not preserved at {:?} (level {n})", src.id(n, x)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;
    use crate::simplicial::nerve::FiniteCategory;

    /// Nerve of the poset `[k]` truncated at `dim`.
    pub fn ordinal_nerve(k: usize, dim: usize) -> TruncatedSimplicialSet {
        nerve(&FiniteCategory::ordinal(k), dim).unwrap()
    }
}
