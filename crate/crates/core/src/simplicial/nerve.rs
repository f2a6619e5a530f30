use super::segal::check_1segal;
use super::TruncatedSimplicialSet;
use crate::error::{Error, Result};
use crate::tuple_key;
use std::collections::HashMap;

/// A finite category. Composition is written in diagrammatic order:
/// `compose[(f, g)]` is "f then g" and is defined iff `tgt f = src g`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<String>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// Identity morphism of each object.
    pub identity: Vec<usize>,
    pub compose: HashMap<(usize, usize), usize>,
}

impl FiniteCategory {
    pub fn comp(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }

    /// Morphisms grouped by source object.
    pub fn outgoing(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.objects.len()];
        for (m, &s) in self.src.iter().enumerate() {
            out[s].push(m);
        }
        out
    }

    /// Morphisms grouped by target object.
    pub fn incoming(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.objects.len()];
        for (m, &t) in self.tgt.iter().enumerate() {
            out[t].push(m);
        }
        out
    }

    pub fn object_index(&self) -> HashMap<&str, usize> {
        self.objects.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect()
    }

    pub fn morphism_index(&self) -> HashMap<&str, usize> {
        self.morphisms.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect()
    }

    /// The poset `0 < 1 < ... < k` with morphisms named `"i<j"`.
    pub fn ordinal(k: usize) -> Self {
        let mut c = FiniteCategory {
            objects: (0..=k).map(|i| i.to_string()).collect(),
            ..Default::default()
        };
        let mut idx = HashMap::new();
        for i in 0..=k {
            for j in i..=k {
                idx.insert((i, j), c.morphisms.len());
                c.morphisms.push(format!("{i}<{j}"));
                c.src.push(i);
                c.tgt.push(j);
            }
        }
        c.identity = (0..=k).map(|i| idx[&(i, i)]).collect();
        for i in 0..=k {
            for j in i..=k {
                for l in j..=k {
                    c.compose.insert((idx[&(i, j)], idx[&(j, l)]), idx[&(i, l)]);
                }
            }
        }
        c
    }
}

/// Category axioms; empty iff `c` is a category.
pub fn validate_category(c: &FiniteCategory) -> Vec<String> {
    let mut out = Vec::new();
    let (no, nm) = (c.objects.len(), c.morphisms.len());
    if c.src.len() != nm || c.tgt.len() != nm || c.identity.len() != no {
        out.push("source, target or identity table is not total".into());
        return out;
    }
    if c.src.iter().chain(&c.tgt).any(|&o| o >= no) || c.identity.iter().any(|&m| m >= nm) {
        out.push("table entry out of range".into());
        return out;
    }
    for (o, &e) in c.identity.iter().enumerate() {
        if c.src[e] != o || c.tgt[e] != o {
            out.push(format!("identity of {} has the wrong endpoints", c.objects[o]));
        }
    }
    for (&(f, g), &h) in &c.compose {
        if f >= nm || g >= nm || h >= nm {
            out.push("composition entry out of range".into());
            return out;
        }
        if c.tgt[f] != c.src[g] {
            out.push(format!("composite of non-composable {} and {}", c.morphisms[f], c.morphisms[g]));
        } else if c.src[h] != c.src[f] || c.tgt[h] != c.tgt[g] {
            out.push(format!("composite of {} and {} has the wrong endpoints", c.morphisms[f], c.morphisms[g]));
        }
    }
    let outgoing = c.outgoing();
    for f in 0..nm {
        for &g in &outgoing[c.tgt[f]] {
            if c.comp(f, g).is_none() {
                out.push(format!("composite of {} and {} undefined", c.morphisms[f], c.morphisms[g]));
            }
        }
        if c.comp(c.identity[c.src[f]], f) != Some(f) || c.comp(f, c.identity[c.tgt[f]]) != Some(f) {
            out.push(format!("unit law fails at {}", c.morphisms[f]));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in 0..nm {
        for &g in &outgoing[c.tgt[f]] {
            let fg = c.comp(f, g).unwrap();
            for &h in &outgoing[c.tgt[g]] {
                if c.comp(fg, h) != c.comp(f, c.comp(g, h).unwrap()) {
                    out.push(format!(
                        "associativity fails at {}, {}, {}",
                        c.morphisms[f], c.morphisms[g], c.morphisms[h]
                    ));
                }
            }
        }
    }
    out
}

/// The nerve of `c` up to level `dim`: level 0 is the objects (by their
/// identifiers), level `n >= 1` the composable strings of `n` morphisms,
/// identified by [`tuple_key`] of the morphism identifiers.
pub fn nerve(c: &FiniteCategory, dim: usize) -> Result<TruncatedSimplicialSet> {
    let problems = validate_category(c);
    if !problems.is_empty() {
        return Err(Error::Malformed(problems.join("; ")));
    }
    let outgoing = c.outgoing();
    let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..c.objects.len()).map(|o| vec![o]).collect()];
    if dim >= 1 {
        levels.push((0..c.morphisms.len()).map(|m| vec![m]).collect());
    }
    for n in 2..=dim {
        let mut next = Vec::new();
        for s in &levels[n - 1] {
            for &g in &outgoing[c.tgt[*s.last().unwrap()]] {
                let mut t = s.clone();
                t.push(g);
                next.push(t);
            }
        }
        levels.push(next);
    }
    let key = |n: usize, s: &[usize]| -> String {
        if n == 0 {
            c.objects[s[0]].clone()
        } else {
            let names: Vec<&str> = s.iter().map(|&m| c.morphisms[m].as_str()).collect();
            tuple_key(&names)
        }
    };
    let index: Vec<HashMap<&[usize], usize>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(k, s)| (s.as_slice(), k)).collect())
        .collect();
    let face_of = |n: usize, i: usize, s: &[usize]| -> Vec<usize> {
        if n == 1 {
            return vec![if i == 0 { c.tgt[s[0]] } else { c.src[s[0]] }];
        }
        let mut t = s.to_vec();
        if i == 0 {
            t.remove(0);
        } else if i == n {
            t.pop();
        } else {
            let h = c.comp(t[i - 1], t[i]).expect("composable");
            t[i - 1] = h;
            t.remove(i);
        }
        t
    };
    let degen_of = |n: usize, i: usize, s: &[usize]| -> Vec<usize> {
        if n == 0 {
            return vec![c.identity[s[0]]];
        }
        let obj = if i == 0 { c.src[s[0]] } else { c.tgt[s[i - 1]] };
        let mut t = s.to_vec();
        t.insert(i, c.identity[obj]);
        t
    };
    let mut face = vec![Vec::new()];
    for n in 1..=dim {
        face.push(
            (0..=n)
                .map(|i| levels[n].iter().map(|s| index[n - 1][face_of(n, i, s).as_slice()]).collect())
                .collect(),
        );
    }
    let degen = (0..dim)
        .map(|n| {
            (0..=n)
                .map(|i| levels[n].iter().map(|s| index[n + 1][degen_of(n, i, s).as_slice()]).collect())
                .collect()
        })
        .collect();
    let cells = levels
        .iter()
        .enumerate()
        .map(|(n, l)| l.iter().map(|s| key(n, s)).collect())
        .collect();
    TruncatedSimplicialSet::from_tables(dim, cells, face, degen)
}

/// The category with objects `X_0`, morphisms `X_1` (source `d1`, target
/// `d0`, identity `s0`) and composition `(d2, d0)^{-1}` followed by `d1`.
/// Requires `x` to be 1-Segal with `dim >= 2`.
pub fn fundamental_category(x: &TruncatedSimplicialSet) -> Result<FiniteCategory> {
    if x.dim() < 2 {
        return Err(Error::Argument("needs level 2".into()));
    }
    check_1segal(x)?;
    let mut compose = HashMap::new();
    for y in 0..x.len(2) {
        compose.insert((x.face(2, 2, y), x.face(2, 0, y)), x.face(2, 1, y));
    }
    let c = FiniteCategory {
        objects: x.cells(0).to_vec(),
        morphisms: x.cells(1).to_vec(),
        src: (0..x.len(1)).map(|e| x.face(1, 1, e)).collect(),
        tgt: (0..x.len(1)).map(|e| x.face(1, 0, e)).collect(),
        identity: (0..x.len(0)).map(|a| x.degen(0, 0, a)).collect(),
        compose,
    };
    let problems = validate_category(&c);
    if !problems.is_empty() {
        return Err(Error::Internal(format!("fundamental category: {}", problems.join("; "))));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{check_1segal, validate_simplicial};

    fn count_monotone_maps(n: usize, k: usize) -> usize {
        // maps [n] -> [k] that are order preserving, by direct enumeration
        let mut count = 0;
        let mut v = vec![0usize; n + 1];
        loop {
            if v.windows(2).all(|w| w[0] <= w[1]) {
                count += 1;
            }
            let mut p = 0;
            loop {
                if p > n {
                    return count;
                }
                v[p] += 1;
                if v[p] <= k {
                    break;
                }
                v[p] = 0;
                p += 1;
            }
        }
    }

    #[test]
    fn ordinal_nerve_counts_match_monotone_maps() {
        let x = nerve(&FiniteCategory::ordinal(2), 3).unwrap();
        for n in 0..=3 {
            assert_eq!(x.len(n), count_monotone_maps(n, 2));
        }
        assert_eq!(x.level_sizes(), vec![3, 6, 10, 15]);
    }

    #[test]
    fn fundamental_category_of_nerve_recovers_category() {
        let c = FiniteCategory::ordinal(3);
        let x = nerve(&c, 3).unwrap();
        assert!(validate_simplicial(&x).is_empty());
        assert_eq!(check_1segal(&x), Ok(()));
        let t = fundamental_category(&x).unwrap();
        assert_eq!(t.objects, c.objects);
        assert_eq!(t.morphisms.len(), c.morphisms.len());
        for (f, name) in c.morphisms.iter().enumerate() {
            let e = x.lookup(1, &tuple_key(&[name])).unwrap();
            assert_eq!(t.objects[t.src[e]], c.objects[c.src[f]]);
            assert_eq!(t.objects[t.tgt[e]], c.objects[c.tgt[f]]);
        }
        for (&(f, g), &h) in &c.compose {
            let e = |m: usize| x.lookup(1, &tuple_key(&[&c.morphisms[m]])).unwrap();
            assert_eq!(t.comp(e(f), e(g)), Some(e(h)));
        }
    }

    #[test]
    fn broken_category_is_rejected() {
        let mut c = FiniteCategory::ordinal(2);
        let key = *c.compose.keys().find(|(f, g)| f != g && c.src[*f] != c.tgt[*g]).unwrap();
        c.compose.remove(&key);
        assert!(!validate_category(&c).is_empty());
        assert!(nerve(&c, 2).is_err());
    }
}
