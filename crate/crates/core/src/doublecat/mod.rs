//! Finite double categories, their axioms, stability and augmentations.

mod assemble;
mod hom;
mod builders;

pub use assemble::{assemble_stable, StableData};
pub use builders::{build_h, build_v, build_w, commutative_squares, h_cosimplicial, v_cosimplicial, w_cosimplicial};
pub use hom::{hom_double_functors, hom_simplicial, Family};

use crate::report::{Verdict, Witness, WitnessKind};
use crate::simplicial::{validate_category, FiniteCategory};
use std::collections::{BTreeSet, HashMap};

/// A finite double category.
///
/// Picture a square `a` with its source object in the top-left corner:
/// `s_v[a]` is the top horizontal side, `t_v[a]` the bottom one, `s_h[a]`
/// the left vertical side and `t_h[a]` the right one. `comp_h[(a, b)]`
/// places `b` to the right of `a` (defined iff `t_h a = s_h b`), and
/// `comp_v[(a, c)]` places `c` below `a` (defined iff `t_v a = s_v c`).
/// Both categories of morphisms compose in diagrammatic order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FiniteDoubleCategory {
    pub hor: FiniteCategory,
    pub ver: FiniteCategory,
    pub squares: Vec<String>,
    pub s_h: Vec<usize>,
    pub t_h: Vec<usize>,
    pub s_v: Vec<usize>,
    pub t_v: Vec<usize>,
    pub comp_h: HashMap<(usize, usize), usize>,
    pub comp_v: HashMap<(usize, usize), usize>,
    /// Horizontal identity square on each vertical morphism.
    pub id_h: Vec<usize>,
    /// Vertical identity square on each horizontal morphism.
    pub id_v: Vec<usize>,
}

impl FiniteDoubleCategory {
    pub fn objects(&self) -> &[String] {
        &self.hor.objects
    }

    pub fn n_objects(&self) -> usize {
        self.hor.objects.len()
    }

    pub fn square_index(&self) -> HashMap<&str, usize> {
        self.squares.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect()
    }

    /// Squares by their source span `(s_h, s_v)`.
    pub fn spans(&self) -> HashMap<(usize, usize), Vec<usize>> {
        let mut m: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for a in 0..self.squares.len() {
            m.entry((self.s_h[a], self.s_v[a])).or_default().push(a);
        }
        m
    }

    /// Squares by their target cospan `(t_h, t_v)`.
    pub fn cospans(&self) -> HashMap<(usize, usize), Vec<usize>> {
        let mut m: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for a in 0..self.squares.len() {
            m.entry((self.t_h[a], self.t_v[a])).or_default().push(a);
        }
        m
    }

    /// Squares by their full boundary `(s_h, t_h, s_v, t_v)`.
    pub fn boundaries(&self) -> HashMap<[usize; 4], Vec<usize>> {
        let mut m: HashMap<[usize; 4], Vec<usize>> = HashMap::new();
        for a in 0..self.squares.len() {
            m.entry([self.s_h[a], self.t_h[a], self.s_v[a], self.t_v[a]]).or_default().push(a);
        }
        m
    }

    /// Swaps the horizontal and vertical directions (the transpose).
    pub fn transpose(&self) -> FiniteDoubleCategory {
        FiniteDoubleCategory {
            hor: self.ver.clone(),
            ver: self.hor.clone(),
            squares: self.squares.clone(),
            s_h: self.s_v.clone(),
            t_h: self.t_v.clone(),
            s_v: self.s_h.clone(),
            t_v: self.t_h.clone(),
            comp_h: self.comp_v.clone(),
            comp_v: self.comp_h.clone(),
            id_h: self.id_v.clone(),
            id_v: self.id_h.clone(),
        }
    }
}

/// A set of objects, given by index.
pub type Augmentation = Vec<usize>;

/// A failed double-category axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: String,
    pub cells: Vec<String>,
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.axiom)?;
        if !self.cells.is_empty() {
            write!(f, " at {}", self.cells.join(", "))?;
        }
        Ok(())
    }
}

/// Checks every axiom of a double category, including the interchange law on
/// every composable 2x2 grid; the result is empty iff `d` is one.
pub fn validate_double_category(d: &FiniteDoubleCategory) -> Vec<AxiomViolation> {
    let mut out = Vec::new();
    fn push(out: &mut Vec<AxiomViolation>, axiom: &str, cells: Vec<&str>) {
        out.push(AxiomViolation {
            axiom: axiom.to_string(),
            cells: cells.into_iter().map(String::from).collect(),
        })
    }
    for (name, c) in [("horizontal", &d.hor), ("vertical", &d.ver)] {
        for p in validate_category(c) {
            push(&mut out, &format!("{name} category: {p}"), vec![]);
        }
    }
    if d.hor.objects != d.ver.objects {
        push(&mut out, "horizontal and vertical categories have different objects", vec![]);
    }
    let ns = d.squares.len();
    let (nh, nv) = (d.hor.morphisms.len(), d.ver.morphisms.len());
    if [&d.s_v, &d.t_v].iter().any(|t| t.len() != ns || t.iter().any(|&m| m >= nh))
        || [&d.s_h, &d.t_h].iter().any(|t| t.len() != ns || t.iter().any(|&m| m >= nv))
        || d.id_h.len() != nv
        || d.id_v.len() != nh
        || d.id_h.iter().chain(&d.id_v).any(|&a| a >= ns)
        || d.comp_h.iter().chain(&d.comp_v).any(|(&(a, b), &c)| a >= ns || b >= ns || c >= ns)
    {
        push(&mut out, "boundary, identity or composition table is not total or out of range", vec![]);
    }
    if !out.is_empty() {
        return out;
    }
    let sq = |a: usize| d.squares[a].as_str();
    let (h, v) = (&d.hor, &d.ver);
    for a in 0..ns {
        let ok = h.src[d.s_v[a]] == v.src[d.s_h[a]]
            && h.tgt[d.s_v[a]] == v.src[d.t_h[a]]
            && v.tgt[d.s_h[a]] == h.src[d.t_v[a]]
            && h.tgt[d.t_v[a]] == v.tgt[d.t_h[a]];
        if !ok {
            push(&mut out, "square corners do not match", vec![sq(a)]);
        }
    }
    // identities
    for f in 0..nv {
        let a = d.id_h[f];
        if d.s_h[a] != f || d.t_h[a] != f || d.s_v[a] != h.identity[v.src[f]] || d.t_v[a] != h.identity[v.tgt[f]] {
            push(&mut out, "horizontal identity square has the wrong boundary", vec![&v.morphisms[f]]);
        }
    }
    for f in 0..nh {
        let a = d.id_v[f];
        if d.s_v[a] != f || d.t_v[a] != f || d.s_h[a] != v.identity[h.src[f]] || d.t_h[a] != v.identity[h.tgt[f]] {
            push(&mut out, "vertical identity square has the wrong boundary", vec![&h.morphisms[f]]);
        }
    }
    for x in 0..d.n_objects() {
        if d.id_h[v.identity[x]] != d.id_v[h.identity[x]] {
            push(&mut out, "the two identity squares of an object differ", vec![&d.hor.objects[x]]);
        }
    }
    // composition domains and boundaries
    let mut by_s_h: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut by_s_v: Vec<Vec<usize>> = vec![Vec::new(); nh];
    for a in 0..ns {
        by_s_h[d.s_h[a]].push(a);
        by_s_v[d.s_v[a]].push(a);
    }
    for a in 0..ns {
        for &b in &by_s_h[d.t_h[a]] {
            match d.comp_h.get(&(a, b)) {
                None => push(&mut out, "horizontal composite undefined", vec![sq(a), sq(b)]),
                Some(&c) => {
                    let ok = d.s_h[c] == d.s_h[a]
                        && d.t_h[c] == d.t_h[b]
                        && Some(d.s_v[c]) == h.comp(d.s_v[a], d.s_v[b])
                        && Some(d.t_v[c]) == h.comp(d.t_v[a], d.t_v[b]);
                    if !ok {
                        push(&mut out, "horizontal composite has the wrong boundary", vec![sq(a), sq(b)]);
                    }
                }
            }
        }
        for &c in &by_s_v[d.t_v[a]] {
            match d.comp_v.get(&(a, c)) {
                None => push(&mut out, "vertical composite undefined", vec![sq(a), sq(c)]),
                Some(&e) => {
                    let ok = d.s_v[e] == d.s_v[a]
                        && d.t_v[e] == d.t_v[c]
                        && Some(d.s_h[e]) == v.comp(d.s_h[a], d.s_h[c])
                        && Some(d.t_h[e]) == v.comp(d.t_h[a], d.t_h[c]);
                    if !ok {
                        push(&mut out, "vertical composite has the wrong boundary", vec![sq(a), sq(c)]);
                    }
                }
            }
        }
    }
    for (&(a, b), _) in d.comp_h.iter() {
        if d.t_h[a] != d.s_h[b] {
            push(&mut out, "horizontal composite defined on a non-composable pair", vec![sq(a), sq(b)]);
        }
    }
    for (&(a, c), _) in d.comp_v.iter() {
        if d.t_v[a] != d.s_v[c] {
            push(&mut out, "vertical composite defined on a non-composable pair", vec![sq(a), sq(c)]);
        }
    }
    if !out.is_empty() {
        return out;
    }
    let ch = |a: usize, b: usize| d.comp_h[&(a, b)];
    let cv = |a: usize, c: usize| d.comp_v[&(a, c)];
    // unit laws
    for a in 0..ns {
        if ch(d.id_h[d.s_h[a]], a) != a || ch(a, d.id_h[d.t_h[a]]) != a {
            push(&mut out, "horizontal unit law", vec![sq(a)]);
        }
        if cv(d.id_v[d.s_v[a]], a) != a || cv(a, d.id_v[d.t_v[a]]) != a {
            push(&mut out, "vertical unit law", vec![sq(a)]);
        }
    }
    // identities compose to identities
    for f in 0..nh {
        for &g in &h.outgoing()[h.tgt[f]] {
            if ch(d.id_v[f], d.id_v[g]) != d.id_v[h.comp(f, g).unwrap()] {
                push(&mut out, "vertical identities do not compose horizontally", vec![&h.morphisms[f], &h.morphisms[g]]);
            }
        }
    }
    let v_out = v.outgoing();
    for f in 0..nv {
        for &g in &v_out[v.tgt[f]] {
            if cv(d.id_h[f], d.id_h[g]) != d.id_h[v.comp(f, g).unwrap()] {
                push(&mut out, "horizontal identities do not compose vertically", vec![&v.morphisms[f], &v.morphisms[g]]);
            }
        }
    }
    // associativity
    for a in 0..ns {
        for &b in &by_s_h[d.t_h[a]] {
            let ab = ch(a, b);
            for &c in &by_s_h[d.t_h[b]] {
                if ch(ab, c) != ch(a, ch(b, c)) {
                    push(&mut out, "horizontal associativity", vec![sq(a), sq(b), sq(c)]);
                }
            }
        }
        for &b in &by_s_v[d.t_v[a]] {
            let ab = cv(a, b);
            for &c in &by_s_v[d.t_v[b]] {
                if cv(ab, c) != cv(a, cv(b, c)) {
                    push(&mut out, "vertical associativity", vec![sq(a), sq(b), sq(c)]);
                }
            }
        }
    }
    // interchange: a b on top, c e below
    for a in 0..ns {
        for &b in &by_s_h[d.t_h[a]] {
            let top = ch(a, b);
            for &c in &by_s_v[d.t_v[a]] {
                for &e in &by_s_v[d.t_v[b]] {
                    if d.s_h[e] != d.t_h[c] {
                        continue;
                    }
                    if cv(top, ch(c, e)) != ch(cv(a, c), cv(b, e)) {
                        push(&mut out, "interchange law", vec![sq(a), sq(b), sq(c), sq(e)]);
                    }
                }
            }
        }
    }
    out
}

/// Every span `(v, h)` with a common source has exactly one square with
/// `(s_h, s_v) = (v, h)`, and every cospan with a common target exactly one
/// square with `(t_h, t_v) = (v, h)`.
pub fn check_stable(d: &FiniteDoubleCategory) -> Verdict {
    let (h, v) = (&d.hor, &d.ver);
    let h_out = h.outgoing();
    let h_in = h.incoming();
    for (name, map, pairs) in [
        ("stable-span", d.spans(), {
            let mut p = Vec::new();
            for f in 0..v.morphisms.len() {
                for &g in &h_out[v.src[f]] {
                    p.push((f, g));
                }
            }
            p
        }),
        ("stable-cospan", d.cospans(), {
            let mut p = Vec::new();
            for f in 0..v.morphisms.len() {
                for &g in &h_in[v.tgt[f]] {
                    p.push((f, g));
                }
            }
            p
        }),
    ] {
        for &(f, g) in &pairs {
            let fillers = map.get(&(f, g)).map(Vec::as_slice).unwrap_or(&[]);
            if fillers.len() != 1 {
                let kind = if fillers.is_empty() { WitnessKind::NotSurjective } else { WitnessKind::NotInjective };
                let mut cells = vec![v.morphisms[f].clone(), h.morphisms[g].clone()];
                cells.extend(fillers.iter().map(|&a| d.squares[a].clone()));
                return Err(Witness::new(name, kind, format!("{} fillers", fillers.len())).with_cells(cells));
            }
        }
    }
    Ok(())
}

/// Both `{h : src h in A} -> Ob, h -> tgt h` and
/// `{v : tgt v in A} -> Ob, v -> src v` are bijections.
pub fn check_augmentation(d: &FiniteDoubleCategory, a: &[usize]) -> Verdict {
    let n = d.n_objects();
    if a.iter().any(|&x| x >= n) {
        return Err(Witness::new("augmentation", WitnessKind::NotWellDefined, "unknown object in A"));
    }
    let in_a: BTreeSet<usize> = a.iter().copied().collect();
    if in_a.len() != a.len() {
        return Err(Witness::new("augmentation", WitnessKind::NotWellDefined, "A lists an object twice"));
    }
    for (name, cat, from_a) in [("augmentation-hor", &d.hor, true), ("augmentation-ver", &d.ver, false)] {
        let mut hits: Vec<Vec<usize>> = vec![Vec::new(); n];
        for m in 0..cat.morphisms.len() {
            let (end_in_a, other) = if from_a { (cat.src[m], cat.tgt[m]) } else { (cat.tgt[m], cat.src[m]) };
            if in_a.contains(&end_in_a) {
                hits[other].push(m);
            }
        }
        for (x, ms) in hits.iter().enumerate() {
            if ms.len() != 1 {
                let kind = if ms.is_empty() { WitnessKind::NotSurjective } else { WitnessKind::NotInjective };
                let mut cells = vec![d.objects()[x].clone()];
                cells.extend(ms.iter().map(|&m| cat.morphisms[m].clone()));
                return Err(Witness::new(name, kind, format!("{} arrows", ms.len())).with_cells(cells));
            }
        }
    }
    Ok(())
}

/// `|A| = 1`.
pub fn is_pointed(a: &[usize]) -> bool {
    a.len() == 1
}

/// For each object, the unique horizontal arrow into it from `A` and the
/// unique vertical arrow out of it into `A`.
pub(crate) fn augmentation_arrows(d: &FiniteDoubleCategory, a: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let in_a: BTreeSet<usize> = a.iter().copied().collect();
    let mut into = vec![usize::MAX; d.n_objects()];
    for m in 0..d.hor.morphisms.len() {
        if in_a.contains(&d.hor.src[m]) {
            into[d.hor.tgt[m]] = m;
        }
    }
    let mut out = vec![usize::MAX; d.n_objects()];
    for m in 0..d.ver.morphisms.len() {
        if in_a.contains(&d.ver.tgt[m]) {
            out[d.ver.src[m]] = m;
        }
    }
    (into, out)
}

/// The bijection from horizontal to vertical morphisms of a stable augmented
/// double category, with its inverse.
///
/// A horizontal `h : x -> y` goes to the right side of the unique square
/// whose source span is `(x -> a, h)` with `a` in `A`; a vertical `v : y -> z`
/// goes back to the top side of the unique square whose target cospan is
/// `(v, b -> z)` with `b` in `A`.
pub fn hor_ver_bijection(d: &FiniteDoubleCategory, a: &[usize]) -> Result<(Vec<usize>, Vec<usize>), Witness> {
    check_stable(d)?;
    check_augmentation(d, a)?;
    let (into, out) = augmentation_arrows(d, a);
    let spans = d.spans();
    let cospans = d.cospans();
    let fwd: Vec<usize> = (0..d.hor.morphisms.len())
        .map(|f| d.t_h[spans[&(out[d.hor.src[f]], f)][0]])
        .collect();
    let back: Vec<usize> = (0..d.ver.morphisms.len())
        .map(|g| d.s_v[cospans[&(g, into[d.ver.tgt[g]])][0]])
        .collect();
    Ok((fwd, back))
}

/// A double functor given on objects, both kinds of morphisms, and squares.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DoubleFunctor {
    pub obj: Vec<usize>,
    pub hor: Vec<usize>,
    pub ver: Vec<usize>,
    pub sq: Vec<usize>,
}

impl DoubleFunctor {
    pub fn identity(d: &FiniteDoubleCategory) -> Self {
        DoubleFunctor {
            obj: (0..d.n_objects()).collect(),
            hor: (0..d.hor.morphisms.len()).collect(),
            ver: (0..d.ver.morphisms.len()).collect(),
            sq: (0..d.squares.len()).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &DoubleFunctor) -> DoubleFunctor {
        DoubleFunctor {
            obj: self.obj.iter().map(|&x| other.obj[x]).collect(),
            hor: self.hor.iter().map(|&x| other.hor[x]).collect(),
            ver: self.ver.iter().map(|&x| other.ver[x]).collect(),
            sq: self.sq.iter().map(|&x| other.sq[x]).collect(),
        }
    }

    pub fn is_bijective(&self, tgt: &FiniteDoubleCategory) -> bool {
        fn bij(m: &[usize], n: usize) -> bool {
            m.len() == n && m.iter().collect::<BTreeSet<_>>().len() == n
        }
        bij(&self.obj, tgt.n_objects())
            && bij(&self.hor, tgt.hor.morphisms.len())
            && bij(&self.ver, tgt.ver.morphisms.len())
            && bij(&self.sq, tgt.squares.len())
    }
}

/// Checks that `f` preserves all structure; with `augmentations` it must
/// also send the first augmentation into the second.
pub fn check_double_functor(
    f: &DoubleFunctor,
    src: &FiniteDoubleCategory,
    tgt: &FiniteDoubleCategory,
    augmentations: Option<(&[usize], &[usize])>,
) -> Vec<String> {
    let mut out = Vec::new();
    let sizes_ok = f.obj.len() == src.n_objects()
        && f.hor.len() == src.hor.morphisms.len()
        && f.ver.len() == src.ver.morphisms.len()
        && f.sq.len() == src.squares.len()
        && f.obj.iter().all(|&x| x < tgt.n_objects())
        && f.hor.iter().all(|&x| x < tgt.hor.morphisms.len())
        && f.ver.iter().all(|&x| x < tgt.ver.morphisms.len())
        && f.sq.iter().all(|&x| x < tgt.squares.len());
    if !sizes_ok {
        out.push("components are not total or out of range".into());
        return out;
    }
    for (name, fm, c, c2) in [("horizontal", &f.hor, &src.hor, &tgt.hor), ("vertical", &f.ver, &src.ver, &tgt.ver)] {
        for m in 0..c.morphisms.len() {
            if c2.src[fm[m]] != f.obj[c.src[m]] || c2.tgt[fm[m]] != f.obj[c.tgt[m]] {
                out.push(format!("{name} {} endpoints not preserved", c.morphisms[m]));
            }
        }
        for x in 0..c.objects.len() {
            if fm[c.identity[x]] != c2.identity[f.obj[x]] {
                out.push(format!("{name} identity of {} not preserved", c.objects[x]));
            }
        }
        for (&(a, b), &ab) in &c.compose {
            if c2.comp(fm[a], fm[b]) != Some(fm[ab]) {
                out.push(format!("{name} composite of {} and {} not preserved", c.morphisms[a], c.morphisms[b]));
            }
        }
    }
    for s in 0..src.squares.len() {
        let t = f.sq[s];
        if tgt.s_h[t] != f.ver[src.s_h[s]]
            || tgt.t_h[t] != f.ver[src.t_h[s]]
            || tgt.s_v[t] != f.hor[src.s_v[s]]
            || tgt.t_v[t] != f.hor[src.t_v[s]]
        {
            out.push(format!("boundary of square {} not preserved", src.squares[s]));
        }
    }
    for (&(a, b), &ab) in &src.comp_h {
        if tgt.comp_h.get(&(f.sq[a], f.sq[b])) != Some(&f.sq[ab]) {
            out.push(format!("horizontal composite of {} and {} not preserved", src.squares[a], src.squares[b]));
        }
    }
    for (&(a, b), &ab) in &src.comp_v {
        if tgt.comp_v.get(&(f.sq[a], f.sq[b])) != Some(&f.sq[ab]) {
            out.push(format!("vertical composite of {} and {} not preserved", src.squares[a], src.squares[b]));
        }
    }
    for m in 0..src.ver.morphisms.len() {
        if f.sq[src.id_h[m]] != tgt.id_h[f.ver[m]] {
            out.push(format!("horizontal identity on {} not preserved", src.ver.morphisms[m]));
        }
    }
    for m in 0..src.hor.morphisms.len() {
        if f.sq[src.id_v[m]] != tgt.id_v[f.hor[m]] {
            out.push(format!("vertical identity on {} not preserved", src.hor.morphisms[m]));
        }
    }
    if let Some((a, b)) = augmentations {
        let b: BTreeSet<usize> = b.iter().copied().collect();
        for &x in a {
            if !b.contains(&f.obj[x]) {
                out.push(format!("augmentation object {} leaves the augmentation", src.objects()[x]));
            }
        }
    }
    out
}

/// Whether two double categories coincide after matching all cells by their
/// identifiers; returns the matching as a functor from `a` to `b`.
pub fn match_by_ids(a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> Result<DoubleFunctor, String> {
    fn by_id(xs: &[String], ys: &[String], what: &str) -> Result<Vec<usize>, String> {
        if xs.len() != ys.len() {
            return Err(format!("{what}: {} vs {} cells", xs.len(), ys.len()));
        }
        let idx: HashMap<&str, usize> = ys.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect();
        xs.iter()
            .map(|x| idx.get(x.as_str()).copied().ok_or_else(|| format!("{what}: {x:?} has no counterpart")))
            .collect()
    }
    let f = DoubleFunctor {
        obj: by_id(a.objects(), b.objects(), "objects")?,
        hor: by_id(&a.hor.morphisms, &b.hor.morphisms, "horizontal morphisms")?,
        ver: by_id(&a.ver.morphisms, &b.ver.morphisms, "vertical morphisms")?,
        sq: by_id(&a.squares, &b.squares, "squares")?,
    };
    let problems = check_double_functor(&f, a, b, None);
    if !problems.is_empty() {
        return Err(problems.join("; "));
    }
    let g = DoubleFunctor {
        obj: by_id(b.objects(), a.objects(), "objects")?,
        hor: by_id(&b.hor.morphisms, &a.hor.morphisms, "horizontal morphisms")?,
        ver: by_id(&b.ver.morphisms, &a.ver.morphisms, "vertical morphisms")?,
        sq: by_id(&b.squares, &a.squares, "squares")?,
    };
    let problems = check_double_functor(&g, b, a, None);
    if !problems.is_empty() {
        return Err(problems.join("; "));
    }
    Ok(f)
}
