use crate::doublecat::FiniteDoubleCategory;
use crate::error::{Error, Result};
use crate::simplicial::{FiniteCategory, TruncatedSimplicialSet};
use crate::tuple_key;
use std::collections::HashMap;

/// A category whose composition is only partially defined: `compose[(f, g)]`
/// exists for some pairs with `tgt f = src g`, and is associative in the
/// sense that `(fg)h` is defined iff `f(gh)` is, with equal values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<String>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub identity: Vec<usize>,
    pub compose: HashMap<(usize, usize), usize>,
}

impl PartialCategory {
    pub fn comp(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }

    /// Pairs `(g, fg)` for each `f`, i.e. the defined composites starting
    /// with `f`.
    pub fn after(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.morphisms.len()];
        for (&(f, g), &h) in &self.compose {
            out[f].push((g, h));
        }
        for v in &mut out {
            v.sort_unstable();
        }
        out
    }

    /// Units, endpoints and the associativity condition, checked over all
    /// triples.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (no, nm) = (self.objects.len(), self.morphisms.len());
        if self.src.len() != nm || self.tgt.len() != nm || self.identity.len() != no {
            return vec!["source, target or identity table is not total".into()];
        }
        if self.src.iter().chain(&self.tgt).any(|&o| o >= no)
            || self.identity.iter().any(|&m| m >= nm)
            || self.compose.iter().any(|(&(f, g), &h)| f >= nm || g >= nm || h >= nm)
        {
            return vec!["table entry out of range".into()];
        }
        for (&(f, g), &h) in &self.compose {
            if self.tgt[f] != self.src[g] || self.src[h] != self.src[f] || self.tgt[h] != self.tgt[g] {
                out.push(format!("composite of {} and {} has the wrong endpoints", self.morphisms[f], self.morphisms[g]));
            }
        }
        for f in 0..nm {
            let (l, r) = (self.identity[self.src[f]], self.identity[self.tgt[f]]);
            if self.comp(l, f) != Some(f) || self.comp(f, r) != Some(f) {
                out.push(format!("unit law fails at {}", self.morphisms[f]));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let outgoing = {
            let mut o = vec![Vec::new(); no];
            for m in 0..nm {
                o[self.src[m]].push(m);
            }
            o
        };
        for f in 0..nm {
            for &g in &outgoing[self.tgt[f]] {
                for &h in &outgoing[self.tgt[g]] {
                    let left = self.comp(f, g).and_then(|fg| self.comp(fg, h));
                    let right = self.comp(g, h).and_then(|gh| self.comp(f, gh));
                    if left != right {
                        out.push(format!(
                            "associativity fails at ({}, {}, {})",
                            self.morphisms[f], self.morphisms[g], self.morphisms[h]
                        ));
                    }
                }
            }
        }
        out
    }

    /// The ordinary category obtained when composition is total.
    pub fn to_category(&self) -> Option<FiniteCategory> {
        let c = FiniteCategory {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            identity: self.identity.clone(),
            compose: self.compose.clone(),
        };
        crate::simplicial::validate_category(&c).is_empty().then_some(c)
    }
}

/// The nerve of a partial category: level `k` holds the strings
/// `(f_1, ..., f_k)` whose partial composites `f_1 ... f_i` are all defined.
/// Level 0 holds the objects; level `k >= 1` cells are identified by
/// [`tuple_key`] of the morphism identifiers. `budget` bounds the total
/// number of cells.
///
/// The input is not validated; see [`PartialCategory::validate`].
pub fn partial_nerve(c: &PartialCategory, dim: usize, budget: usize) -> Result<TruncatedSimplicialSet> {
    let after = c.after();
    // each string with its total composite
    let mut levels: Vec<Vec<(Vec<usize>, usize)>> = vec![(0..c.objects.len()).map(|o| (vec![o], c.identity[o])).collect()];
    let mut total = c.objects.len();
    if dim >= 1 {
        levels.push((0..c.morphisms.len()).map(|m| (vec![m], m)).collect());
        total += c.morphisms.len();
    }
    for _ in 2..=dim {
        let mut next = Vec::new();
        for (s, comp) in levels.last().unwrap() {
            let last = *s.last().unwrap();
            for &(g, fg) in &after[*comp] {
                if c.src[g] == c.tgt[last] {
                    let mut t = s.clone();
                    t.push(g);
                    next.push((t, fg));
                }
            }
            if total + next.len() > budget {
                return Err(Error::Budget { what: "cells".into(), count: total + next.len(), limit: budget });
            }
        }
        total += next.len();
        levels.push(next);
    }
    let index: Vec<HashMap<&[usize], usize>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(k, (s, _))| (s.as_slice(), k)).collect())
        .collect();
    let missing = |n: usize| Error::Internal(format!("a face or degeneracy leaves level {n}"));
    let mut face = vec![Vec::new()];
    for n in 1..=dim {
        let mut per_i = Vec::new();
        for i in 0..=n {
            let mut t = Vec::with_capacity(levels[n].len());
            for (s, _) in &levels[n] {
                let img: Vec<usize> = if n == 1 {
                    vec![if i == 0 { c.tgt[s[0]] } else { c.src[s[0]] }]
                } else if i == 0 {
                    s[1..].to_vec()
                } else if i == n {
                    s[..n - 1].to_vec()
                } else {
                    let mut v = s.clone();
                    v[i - 1] = c.comp(s[i - 1], s[i]).ok_or_else(|| missing(n - 1))?;
                    v.remove(i);
                    v
                };
                t.push(*index[n - 1].get(img.as_slice()).ok_or_else(|| missing(n - 1))?);
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
            for (s, _) in &levels[n] {
                let img: Vec<usize> = if n == 0 {
                    vec![c.identity[s[0]]]
                } else {
                    let obj = if i == 0 { c.src[s[0]] } else { c.tgt[s[i - 1]] };
                    let mut v = s.clone();
                    v.insert(i, c.identity[obj]);
                    v
                };
                t.push(*index[n + 1].get(img.as_slice()).ok_or_else(|| missing(n + 1))?);
            }
            per_i.push(t);
        }
        degen.push(per_i);
    }
    let cells = levels
        .iter()
        .enumerate()
        .map(|(n, l)| {
            l.iter()
                .map(|(s, _)| {
                    if n == 0 {
                        c.objects[s[0]].clone()
                    } else {
                        let names: Vec<&str> = s.iter().map(|&m| c.morphisms[m].as_str()).collect();
                        tuple_key(&names)
                    }
                })
                .collect()
        })
        .collect();
    TruncatedSimplicialSet::from_tables(dim, cells, face, degen)
}

/// The double category of a partial category, described directly.
///
/// Objects are the morphisms. A composable pair `(a, b)` is the horizontal
/// morphism `a -> ab` and the vertical morphism `ab -> b`. A composable
/// triple `(a, b, c)` is the square with top `ab -> abc`, bottom `b -> bc`,
/// left `ab -> b` and right `abc -> bc`. The identities form the
/// augmentation.
///
/// The input is not validated; see [`PartialCategory::validate`].
pub fn partial_category_double(c: &PartialCategory) -> Result<(FiniteDoubleCategory, Vec<usize>)> {
    let key1 = |a: usize| tuple_key(&[c.morphisms[a].as_str()]);
    let key2 = |a: usize, b: usize| tuple_key(&[c.morphisms[a].as_str(), c.morphisms[b].as_str()]);
    let nm = c.morphisms.len();
    let mut pairs: Vec<(usize, usize)> = c.compose.keys().copied().collect();
    pairs.sort_unstable();
    let pidx: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let after = c.after();
    let mut triples = Vec::new();
    for &(a, b) in &pairs {
        let ab = c.compose[&(a, b)];
        for &(cc, _) in &after[ab] {
            triples.push((a, b, cc));
        }
    }
    triples.sort_unstable();
    let tidx: HashMap<(usize, usize, usize), usize> = triples.iter().enumerate().map(|(k, &t)| (t, k)).collect();
    let m = |a: usize, b: usize| c.compose[&(a, b)];
    let unit_after = |a: usize| c.identity[c.tgt[a]];
    let unit_before = |a: usize| c.identity[c.src[a]];

    let objects: Vec<String> = (0..nm).map(key1).collect();
    let morphisms: Vec<String> = pairs.iter().map(|&(a, b)| key2(a, b)).collect();
    let mut hor = FiniteCategory {
        objects: objects.clone(),
        morphisms: morphisms.clone(),
        src: pairs.iter().map(|&(a, _)| a).collect(),
        tgt: pairs.iter().map(|&(a, b)| m(a, b)).collect(),
        identity: (0..nm).map(|a| pidx[&(a, unit_after(a))]).collect(),
        compose: HashMap::new(),
    };
    let mut ver = FiniteCategory {
        objects,
        morphisms,
        src: pairs.iter().map(|&(a, b)| m(a, b)).collect(),
        tgt: pairs.iter().map(|&(_, b)| b).collect(),
        identity: (0..nm).map(|a| pidx[&(unit_before(a), a)]).collect(),
        compose: HashMap::new(),
    };
    let mut factors: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nm];
    for &(x, y) in &pairs {
        factors[m(x, y)].push((x, y));
    }
    for (k, &(x, y)) in pairs.iter().enumerate() {
        // (x, y) then (xy, z) is (x, yz)
        let xy = m(x, y);
        for &(z, _) in &after[xy] {
            if let Some(yz) = c.comp(y, z) {
                hor.compose.insert((k, pidx[&(xy, z)]), pidx[&(x, yz)]);
            }
        }
        // (x, y) then (x', y') with x'y' = y is (xx', y')
        for &(x2, z) in &factors[y] {
            if let Some(xx) = c.comp(x, x2) {
                ver.compose.insert((k, pidx[&(x2, z)]), pidx[&(xx, z)]);
            }
        }
    }
    let mut d = FiniteDoubleCategory {
        hor,
        ver,
        squares: triples
            .iter()
            .map(|&(a, b, cc)| tuple_key(&[c.morphisms[a].as_str(), c.morphisms[b].as_str(), c.morphisms[cc].as_str()]))
            .collect(),
        s_h: triples.iter().map(|&(a, b, _)| pidx[&(a, b)]).collect(),
        t_h: triples.iter().map(|&(a, b, cc)| pidx[&(a, m(b, cc))]).collect(),
        s_v: triples.iter().map(|&(a, b, cc)| pidx[&(m(a, b), cc)]).collect(),
        t_v: triples.iter().map(|&(_, b, cc)| pidx[&(b, cc)]).collect(),
        ..Default::default()
    };
    for (k, &(a, b, cc)) in triples.iter().enumerate() {
        let bc = m(b, cc);
        for &(c2, _) in &after[m(a, bc)] {
            if let (Some(&l), Some(cc2)) = (tidx.get(&(a, bc, c2)), c.comp(cc, c2)) {
                d.comp_h.insert((k, l), tidx[&(a, b, cc2)]);
            }
        }
        for &(a2, b2) in &factors[b] {
            if let (Some(&l), Some(aa2)) = (tidx.get(&(a2, b2, cc)), c.comp(a, a2)) {
                d.comp_v.insert((k, l), tidx[&(aa2, b2, cc)]);
            }
        }
    }
    d.id_h = pairs.iter().map(|&(a, b)| tidx[&(a, b, unit_after(b))]).collect();
    d.id_v = pairs.iter().map(|&(b, cc)| tidx[&(unit_before(b), b, cc)]).collect();
    let aug = (0..c.objects.len()).map(|o| c.identity[o]).collect();
    Ok((d, aug))
}
