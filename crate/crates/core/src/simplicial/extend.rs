use super::segal::{check_2segal_triangulations, segal_map_t};
use super::triangulation::enumerate_triangulations;
use super::{check_simplicial_map, SimplicialMap, TruncatedSimplicialSet};
use crate::error::{Error, Result};
use crate::tuple_key;
use std::collections::HashMap;

/// Extends `x` to level `to_dim` by coskeletal completion: a new `(n+1)`-cell
/// is a family `(x_0, ..., x_{n+1})` of `n`-cells with
/// `d_i x_j = d_{j-1} x_i` for `i < j`, and `d_i` is the projection to `x_i`.
/// New cells are identified by [`tuple_key`] of the family.
pub fn coskeletal_extend(x: &TruncatedSimplicialSet, to_dim: usize) -> Result<TruncatedSimplicialSet> {
    if to_dim < x.dim() {
        return Err(Error::Argument(format!("cannot extend a {}-truncated set down to {to_dim}", x.dim())));
    }
    if x.dim() == 0 && to_dim > 0 {
        return Err(Error::Argument("coskeletal extension needs level 1".into()));
    }
    let mut cur = x.clone();
    while cur.dim() < to_dim {
        cur = extend_once(&cur)?;
    }
    Ok(cur)
}

fn extend_once(x: &TruncatedSimplicialSet) -> Result<TruncatedSimplicialSet> {
    let n = x.dim();
    let m = n + 1;
    // n-cells grouped by d0
    let mut by_d0 = vec![Vec::new(); x.len(n - 1)];
    for c in 0..x.len(n) {
        by_d0[x.face(n, 0, c)].push(c);
    }
    let mut families: Vec<Vec<usize>> = Vec::new();
    let mut fam = Vec::with_capacity(m + 1);
    fn go(
        x: &TruncatedSimplicialSet,
        n: usize,
        by_d0: &[Vec<usize>],
        fam: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let j = fam.len();
        if j == n + 2 {
            out.push(fam.clone());
            return;
        }
        let candidates: Vec<usize> = if j == 0 {
            (0..x.len(n)).collect()
        } else {
            by_d0[x.face(n, j - 1, fam[0])].clone()
        };
        for c in candidates {
            if (1..j).all(|i| x.face(n, i, c) == x.face(n, j - 1, fam[i])) {
                fam.push(c);
                go(x, n, by_d0, fam, out);
                fam.pop();
            }
        }
    }
    go(x, n, &by_d0, &mut fam, &mut families);
    let index: HashMap<&[usize], usize> = families.iter().enumerate().map(|(k, f)| (f.as_slice(), k)).collect();

    let mut degen_new = Vec::with_capacity(m);
    for j in 0..=n {
        let mut t = Vec::with_capacity(x.len(n));
        for y in 0..x.len(n) {
            let family: Vec<usize> = (0..=m)
                .map(|i| {
                    if i < j {
                        x.degen(n - 1, j - 1, x.face(n, i, y))
                    } else if i == j || i == j + 1 {
                        y
                    } else {
                        x.degen(n - 1, j, x.face(n, i - 1, y))
                    }
                })
                .collect();
            let k = index.get(family.as_slice()).ok_or_else(|| {
                Error::Malformed(format!(
                    "degenerate family of {:?} is not matching; input violates the simplicial identities",
                    x.id(n, y)
                ))
            })?;
            t.push(*k);
        }
        degen_new.push(t);
    }
    let face_new: Vec<Vec<usize>> = (0..=m).map(|i| families.iter().map(|f| f[i]).collect()).collect();
    let new_ids: Vec<String> = families
        .iter()
        .map(|f| {
            let ids: Vec<&str> = f.iter().map(|&c| x.id(n, c)).collect();
            tuple_key(&ids)
        })
        .collect();

    let mut cells: Vec<Vec<String>> = (0..=n).map(|l| x.cells(l).to_vec()).collect();
    cells.push(new_ids);
    let mut face = x.face_tables().to_vec();
    face.push(face_new);
    let mut degen = x.degen_tables().to_vec();
    degen.push(degen_new);
    TruncatedSimplicialSet::from_tables(m, cells, face, degen)
}

/// Extends a map given on levels `0..=3` to all levels shared by `x` and `y`,
/// setting `g_n = f_T^{-1} . (g_2 x ... x g_2) . f_T` for every
/// triangulation `T` and insisting that all triangulations agree. `y` must
/// be 2-Segal.
pub fn extend_map(
    x: &TruncatedSimplicialSet,
    y: &TruncatedSimplicialSet,
    g: &SimplicialMap,
) -> Result<SimplicialMap> {
    if g.dim() < 3 {
        return Err(Error::Argument("the map must be given on levels 0..=3".into()));
    }
    let top = x.dim().min(y.dim());
    if top < 3 {
        return Err(Error::Argument("both sets need level 3".into()));
    }
    check_2segal_triangulations(y)?;
    let given = SimplicialMap {
        components: g.components[..=3].to_vec(),
    };
    let problems = check_simplicial_map(x, y, &given);
    if !problems.is_empty() {
        return Err(Error::Incompatible(format!("levels 0..=3: {}", problems.join("; "))));
    }
    let mut components = given.components;
    for n in 4..=top {
        let mut comp: Vec<Option<usize>> = vec![None; x.len(n)];
        for t in enumerate_triangulations(n) {
            let inv: HashMap<Vec<usize>, usize> =
                segal_map_t(y, &t).into_iter().enumerate().map(|(k, v)| (v, k)).collect();
            for (c, tuple) in segal_map_t(x, &t).into_iter().enumerate() {
                let image: Vec<usize> = tuple.iter().map(|&z| components[2][z]).collect();
                let target = *inv.get(&image).ok_or_else(|| {
                    Error::Incompatible(format!(
                        "no {n}-cell of the target decorates {t} like the image of {:?}",
                        x.id(n, c)
                    ))
                })?;
                match comp[c] {
                    None => comp[c] = Some(target),
                    Some(prev) if prev != target => {
                        return Err(Error::Incompatible(format!(
                            "triangulations disagree on {:?} at level {n}",
                            x.id(n, c)
                        )))
                    }
                    _ => {}
                }
            }
        }
        components.push(comp.into_iter().map(|v| v.expect("every triangulation covers every cell")).collect());
    }
    let out = SimplicialMap { components };
    let problems = check_simplicial_map(x, y, &out);
    if !problems.is_empty() {
        return Err(Error::Incompatible(format!("extension is not simplicial: {}", problems.join("; "))));
    }
    Ok(out)
}
