use super::builders::{build_h, build_v, build_w, h_cosimplicial, v_cosimplicial, w_cosimplicial};
use super::{DoubleFunctor, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::simplicial::TruncatedSimplicialSet;
use crate::tuple_key;
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    Obj(usize),
    Hor(usize),
    Ver(usize),
    Sq(usize),
}

#[derive(Clone, Copy, Debug)]
enum Constraint {
    HorComp(usize, usize, usize),
    VerComp(usize, usize, usize),
    CompH(usize, usize, usize),
    CompV(usize, usize, usize),
}

struct Search<'a> {
    c: &'a FiniteDoubleCategory,
    d: &'a FiniteDoubleCategory,
    order: Vec<Var>,
    checks: Vec<Vec<Constraint>>,
    allowed_obj: Vec<Option<BTreeSet<usize>>>,
    hor_between: HashMap<(usize, usize), Vec<usize>>,
    ver_between: HashMap<(usize, usize), Vec<usize>>,
    by_boundary: HashMap<[usize; 4], Vec<usize>>,
    f: DoubleFunctor,
    out: Vec<DoubleFunctor>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    fn candidates(&self, var: Var) -> Vec<usize> {
        let (c, d, f) = (self.c, self.d, &self.f);
        match var {
            Var::Obj(x) => match &self.allowed_obj[x] {
                Some(s) => s.iter().copied().collect(),
                None => (0..d.n_objects()).collect(),
            },
            Var::Hor(m) => {
                let (s, t) = (f.obj[c.hor.src[m]], f.obj[c.hor.tgt[m]]);
                if c.hor.identity[c.hor.src[m]] == m {
                    return vec![d.hor.identity[s]];
                }
                self.hor_between.get(&(s, t)).cloned().unwrap_or_default()
            }
            Var::Ver(m) => {
                let (s, t) = (f.obj[c.ver.src[m]], f.obj[c.ver.tgt[m]]);
                if c.ver.identity[c.ver.src[m]] == m {
                    return vec![d.ver.identity[s]];
                }
                self.ver_between.get(&(s, t)).cloned().unwrap_or_default()
            }
            Var::Sq(a) => {
                if let Some(v) = c.id_h.iter().position(|&x| x == a) {
                    return vec![d.id_h[f.ver[v]]];
                }
                if let Some(h) = c.id_v.iter().position(|&x| x == a) {
                    return vec![d.id_v[f.hor[h]]];
                }
                let key = [f.ver[c.s_h[a]], f.ver[c.t_h[a]], f.hor[c.s_v[a]], f.hor[c.t_v[a]]];
                self.by_boundary.get(&key).cloned().unwrap_or_default()
            }
        }
    }

    fn set(&mut self, var: Var, val: usize) {
        match var {
            Var::Obj(x) => self.f.obj[x] = val,
            Var::Hor(m) => self.f.hor[m] = val,
            Var::Ver(m) => self.f.ver[m] = val,
            Var::Sq(a) => self.f.sq[a] = val,
        }
    }

    fn holds(&self, k: &Constraint) -> bool {
        let (d, f) = (self.d, &self.f);
        match *k {
            Constraint::HorComp(a, b, ab) => d.hor.comp(f.hor[a], f.hor[b]) == Some(f.hor[ab]),
            Constraint::VerComp(a, b, ab) => d.ver.comp(f.ver[a], f.ver[b]) == Some(f.ver[ab]),
            Constraint::CompH(a, b, ab) => d.comp_h.get(&(f.sq[a], f.sq[b])) == Some(&f.sq[ab]),
            Constraint::CompV(a, b, ab) => d.comp_v.get(&(f.sq[a], f.sq[b])) == Some(&f.sq[ab]),
        }
    }

    fn go(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.out.push(self.f.clone());
            return;
        }
        let var = self.order[depth];
        for val in self.candidates(var) {
            self.set(var, val);
            if self.checks[depth].iter().all(|k| self.holds(k)) {
                self.go(depth + 1);
            }
        }
        self.set(var, UNSET);
    }
}

/// Order in which to assign the cells of `c`: morphisms are placed right
/// after both of their endpoints, squares after their four sides.
fn variable_order(c: &FiniteDoubleCategory) -> Vec<Var> {
    let no = c.n_objects();
    let mut order = Vec::new();
    let mut placed = vec![false; no];
    let mut hor_done = vec![false; c.hor.morphisms.len()];
    let mut ver_done = vec![false; c.ver.morphisms.len()];
    let h_out = c.hor.outgoing();
    let v_out = c.ver.outgoing();
    let h_in = c.hor.incoming();
    let v_in = c.ver.incoming();
    let mut queue: Vec<usize> = Vec::new();
    for root in 0..no {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        order.push(Var::Obj(root));
        queue.push(root);
        while let Some(x) = queue.pop() {
            let mut neighbours = Vec::new();
            for &m in h_out[x].iter().chain(&h_in[x]) {
                neighbours.push((c.hor.src[m], c.hor.tgt[m]));
            }
            for &m in v_out[x].iter().chain(&v_in[x]) {
                neighbours.push((c.ver.src[m], c.ver.tgt[m]));
            }
            for (s, t) in neighbours {
                for y in [s, t] {
                    if !placed[y] {
                        placed[y] = true;
                        order.push(Var::Obj(y));
                        queue.insert(0, y);
                    }
                }
                // every morphism whose endpoints are now placed
                for m in 0..c.hor.morphisms.len() {
                    if !hor_done[m] && placed[c.hor.src[m]] && placed[c.hor.tgt[m]] {
                        hor_done[m] = true;
                        order.push(Var::Hor(m));
                    }
                }
                for m in 0..c.ver.morphisms.len() {
                    if !ver_done[m] && placed[c.ver.src[m]] && placed[c.ver.tgt[m]] {
                        ver_done[m] = true;
                        order.push(Var::Ver(m));
                    }
                }
            }
        }
        for m in 0..c.hor.morphisms.len() {
            if !hor_done[m] && placed[c.hor.src[m]] && placed[c.hor.tgt[m]] {
                hor_done[m] = true;
                order.push(Var::Hor(m));
            }
        }
        for m in 0..c.ver.morphisms.len() {
            if !ver_done[m] && placed[c.ver.src[m]] && placed[c.ver.tgt[m]] {
                ver_done[m] = true;
                order.push(Var::Ver(m));
            }
        }
    }
    order.extend((0..c.squares.len()).map(Var::Sq));
    order
}

/// All double functors `c -> d`, sorted. With `augmentations = Some((a, b))`
/// only those sending `a` into `b`.
///
/// Backtracking search: objects, then morphisms between assigned objects,
/// then squares with assigned boundaries; each composition constraint is
/// checked as soon as its last cell is assigned.
pub fn hom_double_functors(
    c: &FiniteDoubleCategory,
    d: &FiniteDoubleCategory,
    augmentations: Option<(&[usize], &[usize])>,
) -> Vec<DoubleFunctor> {
    let order = variable_order(c);
    let pos = |v: Var| order.iter().position(|&w| w == v).unwrap();
    let mut checks = vec![Vec::new(); order.len()];
    for (&(a, b), &ab) in &c.hor.compose {
        let p = pos(Var::Hor(a)).max(pos(Var::Hor(b))).max(pos(Var::Hor(ab)));
        checks[p].push(Constraint::HorComp(a, b, ab));
    }
    for (&(a, b), &ab) in &c.ver.compose {
        let p = pos(Var::Ver(a)).max(pos(Var::Ver(b))).max(pos(Var::Ver(ab)));
        checks[p].push(Constraint::VerComp(a, b, ab));
    }
    for (&(a, b), &ab) in &c.comp_h {
        let p = pos(Var::Sq(a)).max(pos(Var::Sq(b))).max(pos(Var::Sq(ab)));
        checks[p].push(Constraint::CompH(a, b, ab));
    }
    for (&(a, b), &ab) in &c.comp_v {
        let p = pos(Var::Sq(a)).max(pos(Var::Sq(b))).max(pos(Var::Sq(ab)));
        checks[p].push(Constraint::CompV(a, b, ab));
    }
    let mut allowed_obj = vec![None; c.n_objects()];
    if let Some((a, b)) = augmentations {
        let b: BTreeSet<usize> = b.iter().copied().collect();
        for &x in a {
            allowed_obj[x] = Some(b.clone());
        }
    }
    let mut hor_between: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for m in 0..d.hor.morphisms.len() {
        hor_between.entry((d.hor.src[m], d.hor.tgt[m])).or_default().push(m);
    }
    let mut ver_between: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for m in 0..d.ver.morphisms.len() {
        ver_between.entry((d.ver.src[m], d.ver.tgt[m])).or_default().push(m);
    }
    let mut s = Search {
        c,
        d,
        order,
        checks,
        allowed_obj,
        hor_between,
        ver_between,
        by_boundary: d.boundaries(),
        f: DoubleFunctor {
            obj: vec![UNSET; c.n_objects()],
            hor: vec![UNSET; c.hor.morphisms.len()],
            ver: vec![UNSET; c.ver.morphisms.len()],
            sq: vec![UNSET; c.squares.len()],
        },
        out: Vec::new(),
    };
    s.go(0);
    let mut out = s.out;
    out.sort_by(|x, y| (&x.obj, &x.hor, &x.ver, &x.sq).cmp(&(&y.obj, &y.hor, &y.ver, &y.sq)));
    out
}

/// The cosimplicial double categories whose Hom sets are computed by
/// [`hom_simplicial`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `W_n`, with augmented functors.
    W,
    /// `H_n`.
    H,
    /// `V_n`.
    V,
}

impl Family {
    fn build(self, n: usize) -> (FiniteDoubleCategory, Vec<usize>) {
        match self {
            Family::W => build_w(n),
            Family::H => (build_h(n), Vec::new()),
            Family::V => (build_v(n), Vec::new()),
        }
    }

    fn map(self, alpha: &[usize], n: usize) -> Result<DoubleFunctor> {
        match self {
            Family::W => w_cosimplicial(alpha, n),
            Family::H => h_cosimplicial(alpha, n),
            Family::V => v_cosimplicial(alpha, n),
        }
    }
}

/// Identifier of a functor into `d`: all of its components by name.
pub fn functor_key(f: &DoubleFunctor, d: &FiniteDoubleCategory) -> String {
    let mut parts: Vec<&str> = f.obj.iter().map(|&x| d.objects()[x].as_str()).collect();
    parts.extend(f.hor.iter().map(|&x| d.hor.morphisms[x].as_str()));
    parts.extend(f.ver.iter().map(|&x| d.ver.morphisms[x].as_str()));
    parts.extend(f.sq.iter().map(|&x| d.squares[x].as_str()));
    tuple_key(&parts)
}

/// The simplicial set `n -> Hom(F_n, d)` of a cosimplicial family, by brute
/// force. For [`Family::W`] the functors are augmented and `aug` is the
/// augmentation of `d`.
pub fn hom_simplicial(family: Family, d: &FiniteDoubleCategory, aug: &[usize], dim: usize) -> Result<TruncatedSimplicialSet> {
    let mut levels = Vec::new();
    for n in 0..=dim {
        let (c, a) = family.build(n);
        let augs = (family == Family::W).then_some((a.as_slice(), aug));
        levels.push(hom_double_functors(&c, d, augs));
    }
    let keys: Vec<Vec<String>> = levels.iter().map(|l| l.iter().map(|f| functor_key(f, d)).collect()).collect();
    let index: Vec<HashMap<&str, usize>> =
        keys.iter().map(|l| l.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect()).collect();
    let pull = |phi: &DoubleFunctor, n: usize, f: &DoubleFunctor| -> Result<usize> {
        let g = phi.then(f);
        index[n]
            .get(functor_key(&g, d).as_str())
            .copied()
            .ok_or_else(|| Error::Internal("precomposite is not among the enumerated functors".into()))
    };
    let mut face = vec![Vec::new()];
    for n in 1..=dim {
        let mut per_i = Vec::new();
        for i in 0..=n {
            let alpha: Vec<usize> = (0..=n).filter(|&k| k != i).collect();
            let phi = family.map(&alpha, n)?;
            per_i.push(levels[n].iter().map(|f| pull(&phi, n - 1, f)).collect::<Result<Vec<_>>>()?);
        }
        face.push(per_i);
    }
    let mut degen = Vec::new();
    for n in 0..dim {
        let mut per_i = Vec::new();
        for i in 0..=n {
            let alpha: Vec<usize> = (0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect();
            let phi = family.map(&alpha, n)?;
            per_i.push(levels[n].iter().map(|f| pull(&phi, n + 1, f)).collect::<Result<Vec<_>>>()?);
        }
        degen.push(per_i);
    }
    TruncatedSimplicialSet::from_tables(dim, keys, face, degen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::check_double_functor;
    use crate::simplicial::{nerve, validate_simplicial};

    #[test]
    fn hom_w0_is_the_augmentation() {
        let (w2, a) = build_w(2);
        let (w0, a0) = build_w(0);
        let fs = hom_double_functors(&w0, &w2, Some((&a0, &a)));
        assert_eq!(fs.len(), a.len());
    }

    #[test]
    fn hom_w1_w1_contains_identity_and_all_are_functors() {
        let (w1, a) = build_w(1);
        let fs = hom_double_functors(&w1, &w1, Some((&a, &a)));
        assert!(fs.contains(&DoubleFunctor::identity(&w1)));
        for f in &fs {
            assert!(check_double_functor(f, &w1, &w1, Some((&a, &a))).is_empty());
        }
    }

    #[test]
    fn hom_h_matches_nerve_of_horizontal_category() {
        let (w2, a) = build_w(2);
        let x = hom_simplicial(Family::H, &w2, &a, 3).unwrap();
        assert!(validate_simplicial(&x).is_empty());
        let n = nerve(&w2.hor, 3).unwrap();
        assert_eq!(x.level_sizes(), n.level_sizes());
        let y = hom_simplicial(Family::V, &w2, &a, 3).unwrap();
        assert_eq!(y.level_sizes(), nerve(&w2.ver, 3).unwrap().level_sizes());
    }

    #[test]
    fn hom_w_into_w2_is_simplicial() {
        let (w2, a) = build_w(2);
        let x = hom_simplicial(Family::W, &w2, &a, 3).unwrap();
        assert!(validate_simplicial(&x).is_empty());
        assert_eq!(x.len(0), 3);
        assert_eq!(x.len(1), 6);
        assert_eq!(x.len(2), w2.hor.morphisms.len());
        assert_eq!(x.len(3), w2.squares.len());
    }
}
