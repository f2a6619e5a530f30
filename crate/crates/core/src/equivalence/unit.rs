use super::grid::Grid;
use super::path::{path_double_cat, path_on_map};
use super::sdot::{sdot, sdot_on_functor, Sdot};
use crate::doublecat::{
    check_augmentation, check_double_functor, check_stable, validate_double_category, DoubleFunctor,
    FiniteDoubleCategory,
};
use crate::error::{Error, Result};
use crate::report::{Report, Verdict, Witness, WitnessKind};
use crate::simplicial::{
    check_2segal_pathspace, check_2segal_triangulations, check_simplicial_map, check_unital, extend_map,
    SimplicialMap, TruncatedSimplicialSet,
};

/// The grid of the `n`-cell `c` of `x` in `S(P X)`: `obj(i,j)` is the edge
/// `{i,j}`, `hgen(i,j)` the triangle `{i,j,j+1}`, `vgen(i,j)` the triangle
/// `{i,i+1,j}` and `sqgen(i,j)` the tetrahedron `{i,i+1,j,j+1}`, with
/// repeated vertices meaning degenerate cells.
pub fn eta_grid(x: &TruncatedSimplicialSet, n: usize, c: usize) -> Grid {
    Grid::from_fn(
        n,
        |i, j| x.operator(n, c, &[i, j]),
        |i, j| x.operator(n, c, &[i, j, j + 1]),
        |i, j| x.operator(n, c, &[i, i + 1, j]),
        |i, j| x.operator(n, c, &[i, i + 1, j, j + 1]),
    )
}

/// The unit `eta: X -> S(P X)` of a unital 2-Segal set, with `S(P X)`.
///
/// On levels `0..=3` every cell goes to its [`eta_grid`], which must be the
/// completion of its top row; higher levels are obtained with
/// [`extend_map`].
pub fn eta(x: &TruncatedSimplicialSet) -> Result<(Sdot, SimplicialMap)> {
    let (d, a) = path_double_cat(x)?;
    let top = x.dim().min(4);
    let s = sdot(&d, &a, top)?;
    let mut components = Vec::new();
    for n in 0..=3 {
        let mut comp = Vec::with_capacity(x.len(n));
        for c in 0..x.len(n) {
            let g = eta_grid(x, n, c);
            let k = s
                .set
                .lookup(n, &g.key(&d))
                .ok_or_else(|| Error::Internal(format!("eta of {:?} is not a cell", x.id(n, c))))?;
            if s.grids[n][k] != g {
                return Err(Error::Internal(format!("eta of {:?} is not a completed grid", x.id(n, c))));
            }
            comp.push(k);
        }
        components.push(comp);
    }
    let low = SimplicialMap { components };
    let map = if top > 3 { extend_map(x, &s.set, &low)? } else { low };
    Ok((s, map))
}

/// The counit `epsilon: P(S D) -> D`, with `P(S D)` and its augmentation.
///
/// Objects go to `obj(0,1)`, horizontal morphisms to `hgen(0,1)`, vertical
/// morphisms to `vgen(0,2)` and squares to `sqgen(0,2)`.
pub fn epsilon(d: &FiniteDoubleCategory, a: &[usize]) -> Result<(Sdot, FiniteDoubleCategory, Vec<usize>, DoubleFunctor)> {
    let s = sdot(d, a, 4)?;
    let (p, pa) = path_double_cat(&s.set)?;
    let f = DoubleFunctor {
        obj: s.grids[1].iter().map(|g| g.obj(0, 1)).collect(),
        hor: s.grids[2].iter().map(|g| g.hgen(0, 1)).collect(),
        ver: s.grids[2].iter().map(|g| g.vgen(0, 2)).collect(),
        sq: s.grids[3].iter().map(|g| g.sqgen(0, 2)).collect(),
    };
    Ok((s, p, pa, f))
}

fn bijective(comp: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    comp.len() == n && comp.iter().all(|&y| y < n && !std::mem::replace(&mut seen[y], true))
}

/// Input to [`roundtrip_check`].
pub enum RoundtripInput<'a> {
    Simplicial(&'a TruncatedSimplicialSet),
    Double(&'a FiniteDoubleCategory, &'a [usize]),
}

/// Runs the unit or counit on `input` and records every verdict: the input
/// checks, the checks on the constructed object, and bijectivity and
/// compatibility of the comparison map.
pub fn roundtrip_check(input: RoundtripInput<'_>) -> Report {
    match input {
        RoundtripInput::Simplicial(x) => roundtrip_simplicial(x),
        RoundtripInput::Double(d, a) => roundtrip_double(d, a),
    }
}

fn roundtrip_simplicial(x: &TruncatedSimplicialSet) -> Report {
    let mut r = Report::new();
    for n in 0..=x.dim() {
        r.count(format!("X{n}"), x.len(n));
    }
    r.verdict("input: 2-Segal", &check_2segal_triangulations(x));
    r.verdict("input: unital", &check_unital(x));
    if !r.all_pass() {
        return r;
    }
    match path_double_cat(x) {
        Err(e) => {
            r.check("path construction", false, e.to_string());
        }
        Ok((d, a)) => {
            r.problems(
                "path: double category",
                &validate_double_category(&d).iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            );
            r.verdict("path: stable", &check_stable(&d));
            r.verdict("path: augmentation", &check_augmentation(&d, &a));
        }
    }
    match eta(x) {
        Err(e) => {
            r.check("eta", false, e.to_string());
        }
        Ok((s, m)) => {
            for n in 0..=s.set.dim() {
                r.count(format!("S{n}"), s.set.len(n));
            }
            r.verdict("sdot: 2-Segal", &check_2segal_triangulations(&s.set));
            r.verdict("sdot: unital", &check_unital(&s.set));
            r.problems("eta: simplicial map", &check_simplicial_map(x, &s.set, &m));
            for n in 0..=m.dim() {
                r.check(format!("eta: level {n} bijective"), bijective(&m.components[n], s.set.len(n)), "");
            }
        }
    }
    r
}

fn roundtrip_double(d: &FiniteDoubleCategory, a: &[usize]) -> Report {
    let mut r = Report::new();
    r.count("objects", d.n_objects());
    r.count("horizontal", d.hor.morphisms.len());
    r.count("vertical", d.ver.morphisms.len());
    r.count("squares", d.squares.len());
    r.count("augmentation", a.len());
    r.problems(
        "input: double category",
        &validate_double_category(d).iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    );
    r.verdict("input: stable", &check_stable(d));
    r.verdict("input: augmentation", &check_augmentation(d, a));
    if !r.all_pass() {
        return r;
    }
    match epsilon(d, a) {
        Err(e) => {
            r.check("epsilon", false, e.to_string());
        }
        Ok((s, p, pa, f)) => {
            for n in 0..=s.set.dim() {
                r.count(format!("S{n}"), s.set.len(n));
            }
            r.verdict("sdot: 2-Segal", &check_2segal_triangulations(&s.set));
            r.verdict("sdot: 2-Segal (path spaces)", &check_2segal_pathspace(&s.set));
            r.verdict("sdot: unital", &check_unital(&s.set));
            r.problems("epsilon: augmented double functor", &check_double_functor(&f, &p, d, Some((&pa, a))));
            r.check("epsilon: objects bijective", bijective(&f.obj, d.n_objects()), "");
            r.check("epsilon: horizontal bijective", bijective(&f.hor, d.hor.morphisms.len()), "");
            r.check("epsilon: vertical bijective", bijective(&f.ver, d.ver.morphisms.len()), "");
            r.check("epsilon: squares bijective", bijective(&f.sq, d.squares.len()), "");
            let pa_img: std::collections::BTreeSet<usize> = pa.iter().map(|&x| f.obj[x]).collect();
            let a_set: std::collections::BTreeSet<usize> = a.iter().copied().collect();
            r.check("epsilon: augmentation onto augmentation", pa_img == a_set, "");
        }
    }
    r
}

/// `eta_Y . f = S(P f) . eta_X` on all levels both sides have.
pub fn eta_naturality(f: &SimplicialMap, x: &TruncatedSimplicialSet, y: &TruncatedSimplicialSet) -> Result<Verdict> {
    let (sx, ex) = eta(x)?;
    let (sy, ey) = eta(y)?;
    let pf = path_on_map(f, x, y)?;
    let spf = sdot_on_functor(&pf, &sx, &sy)?;
    let top = f.dim().min(ex.dim()).min(ey.dim()).min(spf.dim());
    for n in 0..=top {
        for c in 0..x.len(n) {
            let one = ey.apply(n, f.apply(n, c));
            let two = spf.apply(n, ex.apply(n, c));
            if one != two {
                return Ok(Err(Witness::new("eta-naturality", WitnessKind::Axiom, "the square does not commute")
                    .at_level(n)
                    .with_cells([x.id(n, c)])));
            }
        }
    }
    Ok(Ok(()))
}

/// `epsilon_E . P(S F) = F . epsilon_D` for an augmented double functor
/// `F: D -> E`.
pub fn epsilon_naturality(
    f: &DoubleFunctor,
    (d, a): (&FiniteDoubleCategory, &[usize]),
    (e, b): (&FiniteDoubleCategory, &[usize]),
) -> Result<Verdict> {
    let (sd, _, _, ed) = epsilon(d, a)?;
    let (se, _, _, ee) = epsilon(e, b)?;
    let sf = sdot_on_functor(f, &sd, &se)?;
    let psf = path_on_map(&sf, &sd.set, &se.set)?;
    let one = psf.then(&ee);
    let two = ed.then(f);
    for (what, x, y, names) in [
        ("objects", &one.obj, &two.obj, sd.set.cells(1)),
        ("horizontal", &one.hor, &two.hor, sd.set.cells(2)),
        ("vertical", &one.ver, &two.ver, sd.set.cells(2)),
        ("squares", &one.sq, &two.sq, sd.set.cells(3)),
    ] {
        if let Some(k) = (0..x.len()).find(|&k| x[k] != y[k]) {
            return Ok(Err(Witness::new("epsilon-naturality", WitnessKind::Axiom, format!("differs on {what}"))
                .with_cells([names[k].clone()])));
        }
    }
    Ok(Ok(()))
}
