use super::triangulation::{enumerate_triangulations, Triangulation};
use super::{SimplicialMap, TruncatedSimplicialSet};
use crate::error::{Error, Result};
use crate::report::{Verdict, Witness, WitnessKind};
use std::collections::HashMap;

/// Codomain of a Segal-type map, listed as tuples of cell indices.
pub type SegalCodomain = Vec<Vec<usize>>;

/// The spine map at level `n`: each `n`-cell goes to its edges `{i, i+1}`.
pub fn segal_map_1(x: &TruncatedSimplicialSet, n: usize) -> Vec<Vec<usize>> {
    (0..x.len(n))
        .map(|c| (0..n).map(|i| x.face_restrict(n, c, &[i, i + 1])).collect())
        .collect()
}

/// Chains of `n` edges, each ending where the next begins.
pub fn spine_codomain(x: &TruncatedSimplicialSet, n: usize) -> SegalCodomain {
    let mut by_src = vec![Vec::new(); x.len(0)];
    for e in 0..x.len(1) {
        by_src[x.face(1, 1, e)].push(e);
    }
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(n);
    fn go(
        x: &TruncatedSimplicialSet,
        n: usize,
        by_src: &[Vec<usize>],
        chain: &mut Vec<usize>,
        out: &mut SegalCodomain,
    ) {
        if chain.len() == n {
            out.push(chain.clone());
            return;
        }
        let next: Vec<usize> = match chain.last() {
            None => (0..x.len(1)).collect(),
            Some(&e) => by_src[x.face(1, 0, e)].clone(),
        };
        for e in next {
            chain.push(e);
            go(x, n, by_src, chain, out);
            chain.pop();
        }
    }
    go(x, n, &by_src, &mut chain, &mut out);
    out
}

/// The `T`-Segal map: each `n`-cell goes to its restrictions to the
/// triangles of `t`, in the stored order of `t`.
pub fn segal_map_t(x: &TruncatedSimplicialSet, t: &Triangulation) -> Vec<Vec<usize>> {
    let n = t.n();
    (0..x.len(n))
        .map(|c| t.triangles().iter().map(|tri| x.face_restrict(n, c, tri)).collect())
        .collect()
}

/// Position of the face of a 2-simplex `tri` spanned by the edge `e`.
fn edge_face(tri: [usize; 3], e: (usize, usize)) -> usize {
    let omitted = tri.iter().position(|&v| v != e.0 && v != e.1).expect("edge of triangle");
    omitted
}

/// Families of 2-cells, one per triangle of `t`, agreeing on shared edges.
pub fn triangulation_codomain(x: &TruncatedSimplicialSet, t: &Triangulation) -> SegalCodomain {
    let tris = t.triangles();
    let m = tris.len();
    // order triangles along the dual tree, remembering the edge to the parent
    let dual = t.dual_edges();
    let mut order = vec![(0usize, None::<(usize, (usize, usize))>)];
    let mut placed = vec![false; m];
    placed[0] = true;
    let mut k = 0;
    while k < order.len() {
        let cur = order[k].0;
        for &(a, b, e) in &dual {
            for (u, v) in [(a, b), (b, a)] {
                if u == cur && !placed[v] {
                    placed[v] = true;
                    order.push((v, Some((u, e))));
                }
            }
        }
        k += 1;
    }
    let mut by_face: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); x.len(1)]; 3];
    for y in 0..x.len(2) {
        for (p, slot) in by_face.iter_mut().enumerate() {
            slot[x.face(2, p, y)].push(y);
        }
    }
    let mut out = Vec::new();
    let mut assign = vec![usize::MAX; m];
    #[allow(clippy::too_many_arguments)]
    fn go(
        x: &TruncatedSimplicialSet,
        tris: &[[usize; 3]],
        order: &[(usize, Option<(usize, (usize, usize))>)],
        by_face: &[Vec<Vec<usize>>],
        k: usize,
        assign: &mut Vec<usize>,
        out: &mut SegalCodomain,
    ) {
        if k == order.len() {
            out.push(assign.clone());
            return;
        }
        let (tri, parent) = order[k];
        let candidates: Vec<usize> = match parent {
            None => (0..x.len(2)).collect(),
            Some((p, e)) => {
                let shared = x.face(2, edge_face(tris[p], e), assign[p]);
                by_face[edge_face(tris[tri], e)][shared].clone()
            }
        };
        for y in candidates {
            assign[tri] = y;
            go(x, tris, order, by_face, k + 1, assign, out);
        }
        assign[tri] = usize::MAX;
    }
    go(x, tris, &order, &by_face, 0, &mut assign, &mut out);
    out
}

/// Compares a map given by its image tuples with the intended codomain.
fn check_bijection(
    check: &str,
    level: usize,
    x: &TruncatedSimplicialSet,
    images: &[Vec<usize>],
    codomain: &[Vec<usize>],
    render: &dyn Fn(&[usize]) -> Vec<String>,
) -> Verdict {
    let mut hit: HashMap<&[usize], usize> = HashMap::with_capacity(images.len());
    let cod: std::collections::HashSet<&[usize]> = codomain.iter().map(|v| v.as_slice()).collect();
    for (c, img) in images.iter().enumerate() {
        if !cod.contains(img.as_slice()) {
            return Err(Witness::new(check, WitnessKind::NotWellDefined, "image outside the fibre product")
                .at_level(level)
                .with_cells(std::iter::once(x.id(level, c).to_string()).chain(render(img))));
        }
        if let Some(&prev) = hit.get(img.as_slice()) {
            let mut cells = vec![x.id(level, prev).to_string(), x.id(level, c).to_string()];
            cells.extend(render(img));
            return Err(Witness::new(check, WitnessKind::NotInjective, "two cells with the same image")
                .at_level(level)
                .with_cells(cells));
        }
        hit.insert(img.as_slice(), c);
    }
    if let Some(missing) = codomain.iter().find(|t| !hit.contains_key(t.as_slice())) {
        return Err(Witness::new(check, WitnessKind::NotSurjective, "compatible family without a filler")
            .at_level(level)
            .with_cells(render(missing)));
    }
    Ok(())
}

fn render_level(x: &TruncatedSimplicialSet, level: usize) -> impl Fn(&[usize]) -> Vec<String> + '_ {
    move |t: &[usize]| t.iter().map(|&c| x.id(level, c).to_string()).collect()
}

/// Spine maps are bijections at every level `2..=dim`.
pub fn check_1segal(x: &TruncatedSimplicialSet) -> Verdict {
    for n in 2..=x.dim() {
        let images = segal_map_1(x, n);
        let cod = spine_codomain(x, n);
        check_bijection("spine", n, x, &images, &cod, &render_level(x, 1))?;
    }
    Ok(())
}

/// The `T`-Segal map for one triangulation is a bijection.
pub fn check_tsegal(x: &TruncatedSimplicialSet, t: &Triangulation) -> Verdict {
    if t.n() > x.dim() {
        return Err(Witness::new(
            format!("triangulation {t}"),
            WitnessKind::NotWellDefined,
            format!("level {} exceeds the truncation {}", t.n(), x.dim()),
        ));
    }
    let images = segal_map_t(x, t);
    let cod = triangulation_codomain(x, t);
    check_bijection(&format!("triangulation {t}"), t.n(), x, &images, &cod, &render_level(x, 2))
}

/// Every `T`-Segal map for `3 <= n <= dim` is a bijection.
pub fn check_2segal_triangulations(x: &TruncatedSimplicialSet) -> Verdict {
    for n in 3..=x.dim() {
        for t in enumerate_triangulations(n) {
            check_tsegal(x, &t)?;
        }
    }
    Ok(())
}

/// Which vertex the path space adjoins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathSide {
    /// Initial vertex: level `n` is `X_{n+1}`, `d_i = d_{i+1}`, `s_i = s_{i+1}`.
    Left,
    /// Final vertex: level `n` is `X_{n+1}`, `d_i = d_i`, `s_i = s_i` for `i <= n`.
    Right,
}

impl PathSide {
    fn name(self) -> &'static str {
        match self {
            PathSide::Left => "path-left",
            PathSide::Right => "path-right",
        }
    }
}

/// The path space of `x` together with its comparison map to `x` (`d_0` on
/// the left, the top face on the right). Requires `dim >= 1`; the result has
/// dimension `dim - 1`.
pub fn path_space(
    x: &TruncatedSimplicialSet,
    side: PathSide,
) -> Result<(TruncatedSimplicialSet, SimplicialMap)> {
    let d = x.dim();
    if d == 0 {
        return Err(Error::Argument("path space needs dimension at least 1".into()));
    }
    let shift = match side {
        PathSide::Left => 1,
        PathSide::Right => 0,
    };
    let cells: Vec<Vec<String>> = (0..d).map(|n| x.cells(n + 1).to_vec()).collect();
    let mut face = vec![Vec::new()];
    for n in 1..d {
        face.push(
            (0..=n)
                .map(|i| (0..x.len(n + 1)).map(|c| x.face(n + 1, i + shift, c)).collect())
                .collect(),
        );
    }
    let degen = (0..d - 1)
        .map(|n| {
            (0..=n)
                .map(|i| (0..x.len(n + 1)).map(|c| x.degen(n + 1, i + shift, c)).collect())
                .collect()
        })
        .collect();
    let p = TruncatedSimplicialSet::from_tables(d - 1, cells, face, degen)?;
    let components = (0..d)
        .map(|n| {
            let i = match side {
                PathSide::Left => 0,
                PathSide::Right => n + 1,
            };
            (0..x.len(n + 1)).map(|c| x.face(n + 1, i, c)).collect()
        })
        .collect();
    Ok((p, SimplicialMap { components }))
}

/// Both path spaces are 1-Segal.
pub fn check_2segal_pathspace(x: &TruncatedSimplicialSet) -> Verdict {
    if x.dim() == 0 {
        return Ok(());
    }
    for side in [PathSide::Left, PathSide::Right] {
        let (p, _) = path_space(x, side).expect("dimension checked");
        check_1segal(&p).map_err(|w| {
            let mut w = w.within(side.name());
            w.level = w.level.map(|l| l + 1);
            w
        })?;
    }
    Ok(())
}

/// The two unitality squares are pullbacks: `x -> (d0 x, s1 x)` is a
/// bijection onto pairs `(a, y)` with `s0 a = d0 y`, and `x -> (d1 x, s0 x)`
/// onto pairs with `s0 a = d2 y`. Requires `dim >= 2`.
pub fn check_unital(x: &TruncatedSimplicialSet) -> Verdict {
    if x.dim() < 2 {
        return Err(Witness::new("unital", WitnessKind::NotWellDefined, "needs level 2"));
    }
    let mut s0_inv: HashMap<usize, usize> = HashMap::new();
    for a in 0..x.len(0) {
        s0_inv.insert(x.degen(0, 0, a), a);
    }
    // (name, face of x giving a, degeneracy of x giving y, face of y matched with s0 a)
    for (name, fa, sy, fy) in [("unital-s1", 0usize, 1usize, 0usize), ("unital-s0", 1, 0, 2)] {
        let images: Vec<Vec<usize>> = (0..x.len(1))
            .map(|c| vec![x.face(1, fa, c), x.degen(1, sy, c)])
            .collect();
        let cod: Vec<Vec<usize>> = (0..x.len(2))
            .filter_map(|y| s0_inv.get(&x.face(2, fy, y)).map(|&a| vec![a, y]))
            .collect();
        let render = |t: &[usize]| vec![x.id(0, t[0]).to_string(), x.id(2, t[1]).to_string()];
        check_bijection(name, 1, x, &images, &cod, &render)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::testing::ordinal_nerve;
    use crate::simplicial::{check_simplicial_map, validate_simplicial};

    #[test]
    fn nerves_are_1segal_and_2segal() {
        let x = ordinal_nerve(2, 4);
        assert_eq!(check_1segal(&x), Ok(()));
        assert_eq!(check_2segal_triangulations(&x), Ok(()));
        assert_eq!(check_2segal_pathspace(&x), Ok(()));
        assert_eq!(check_unital(&x), Ok(()));
    }

    #[test]
    fn path_spaces_are_simplicial_with_simplicial_comparison_maps() {
        let x = ordinal_nerve(2, 4);
        for side in [PathSide::Left, PathSide::Right] {
            let (p, m) = path_space(&x, side).unwrap();
            assert!(validate_simplicial(&p).is_empty());
            assert!(check_simplicial_map(&p, &x.truncate(3).unwrap(), &m).is_empty());
        }
        let small = ordinal_nerve(1, 2);
        let (p, _) = path_space(&small, PathSide::Left).unwrap();
        assert_eq!(p.len(0), 3);
    }

    #[test]
    fn segal_map_for_the_square_triangulations() {
        let x = ordinal_nerve(3, 3);
        let t1 = Triangulation::new(3, [[0, 1, 3], [1, 2, 3]]);
        let t2 = Triangulation::new(3, [[0, 1, 2], [0, 2, 3]]);
        let f1 = segal_map_t(&x, &t1);
        let f2 = segal_map_t(&x, &t2);
        for c in 0..x.len(3) {
            assert_eq!(f1[c], vec![x.face(3, 2, c), x.face(3, 0, c)]);
            assert_eq!(f2[c], vec![x.face(3, 3, c), x.face(3, 1, c)]);
        }
    }

    #[test]
    fn codomain_entries_are_compatible() {
        let x = ordinal_nerve(2, 4);
        for t in enumerate_triangulations(4) {
            for fam in triangulation_codomain(&x, &t) {
                for (a, b, e) in t.dual_edges() {
                    let ta = t.triangles()[a];
                    let tb = t.triangles()[b];
                    assert_eq!(
                        x.face(2, edge_face(ta, e), fam[a]),
                        x.face(2, edge_face(tb, e), fam[b])
                    );
                }
            }
        }
    }
}
