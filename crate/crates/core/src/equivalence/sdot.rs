use super::grid::{Completer, Grid};
use crate::doublecat::{build_w, check_double_functor, hom_double_functors, DoubleFunctor, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::report::{Verdict, Witness, WitnessKind};
use crate::simplicial::{SimplicialMap, TruncatedSimplicialSet};
use std::collections::{BTreeSet, HashMap};

/// The S-construction of an augmented stable double category, with the grid
/// behind every cell.
#[derive(Clone, Debug)]
pub struct Sdot {
    pub set: TruncatedSimplicialSet,
    pub grids: Vec<Vec<Grid>>,
    pub double: FiniteDoubleCategory,
    pub augmentation: Vec<usize>,
}

impl Sdot {
    pub fn grid(&self, n: usize, x: usize) -> &Grid {
        &self.grids[n][x]
    }
}

fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..=n).filter(|&k| k != i).collect()
}

fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    (0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect()
}

/// The discrete Waldhausen construction `S(D)` up to level `max_dim`.
///
/// Level 0 is `A`; level `n >= 1` has one cell per string of `n - 1`
/// composable horizontal morphisms, completed to a grid. Faces and
/// degeneracies reindex grids along cofaces and codegeneracies; the result
/// is looked up by its top row and must equal the stored completion.
pub fn sdot(d: &FiniteDoubleCategory, a: &[usize], max_dim: usize) -> Result<Sdot> {
    let completer = Completer::new(d, a)?;
    let mut grids: Vec<Vec<Grid>> = Vec::new();
    grids.push(a.iter().map(|&x| Grid::from_fn(0, |_, _| x, |_, _| 0, |_, _| 0, |_, _| 0)).collect());
    let mut strings: Vec<(usize, Vec<usize>)> = Vec::new();
    if max_dim >= 1 {
        strings = (0..d.n_objects()).map(|x| (x, Vec::new())).collect();
        grids.push(strings.iter().map(|(x, s)| completer.complete(*x, s)).collect());
    }
    let outgoing = d.hor.outgoing();
    for _ in 2..=max_dim {
        let mut next = Vec::new();
        for (x, s) in &strings {
            let end = s.last().map_or(*x, |&h| d.hor.tgt[h]);
            for &h in &outgoing[end] {
                let mut t = s.clone();
                t.push(h);
                next.push((*x, t));
            }
        }
        strings = next;
        grids.push(strings.iter().map(|(x, s)| completer.complete(*x, s)).collect());
    }
    let keys: Vec<Vec<String>> = grids.iter().map(|l| l.iter().map(|g| g.key(d)).collect()).collect();
    let index: Vec<HashMap<&str, usize>> =
        keys.iter().map(|l| l.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect()).collect();
    let find = |g: &Grid| -> Result<usize> {
        let n = g.n();
        let k = *index[n]
            .get(g.key(d).as_str())
            .ok_or_else(|| Error::Internal(format!("reindexed grid {:?} is not a cell", g.key(d))))?;
        if grids[n][k] != *g {
            return Err(Error::Internal(format!(
                "reindexed grid differs from the completion of its top row {:?}",
                g.key(d)
            )));
        }
        Ok(k)
    };
    let mut face = vec![Vec::new()];
    for n in 1..=max_dim {
        let mut per_i = Vec::new();
        for i in 0..=n {
            let alpha = coface(n, i);
            per_i.push(grids[n].iter().map(|g| find(&g.reindex(d, &alpha))).collect::<Result<Vec<_>>>()?);
        }
        face.push(per_i);
    }
    let mut degen = Vec::new();
    for n in 0..max_dim {
        let mut per_i = Vec::new();
        for i in 0..=n {
            let alpha = codegeneracy(n, i);
            per_i.push(grids[n].iter().map(|g| find(&g.reindex(d, &alpha))).collect::<Result<Vec<_>>>()?);
        }
        degen.push(per_i);
    }
    let set = TruncatedSimplicialSet::from_tables(max_dim, keys, face, degen)?;
    Ok(Sdot { set, grids, double: d.clone(), augmentation: a.to_vec() })
}

/// Compares level `n` of `s` with the brute-force set of augmented double
/// functors `W_n -> D`, component by component.
pub fn sdot_oracle_check(s: &Sdot, n: usize) -> Verdict {
    let name = "sdot-oracle";
    if n > s.set.dim() {
        return Err(Witness::new(name, WitnessKind::NotWellDefined, "level not computed").at_level(n));
    }
    let d = &s.double;
    let (w, wa) = build_w(n);
    let oracle: BTreeSet<Vec<Vec<usize>>> = hom_double_functors(&w, d, Some((&wa, &s.augmentation)))
        .into_iter()
        .map(|f| vec![f.obj, f.hor, f.ver, f.sq])
        .collect();
    let mut ours = BTreeSet::new();
    for (k, g) in s.grids[n].iter().enumerate() {
        let f = g.to_functor(d);
        let problems = check_double_functor(&f, &w, d, Some((&wa, &s.augmentation)));
        if !problems.is_empty() {
            return Err(Witness::new(name, WitnessKind::NotWellDefined, problems.join("; "))
                .at_level(n)
                .with_cells([s.set.id(n, k)]));
        }
        ours.insert(vec![f.obj, f.hor, f.ver, f.sq]);
    }
    if ours.len() != s.grids[n].len() {
        return Err(Witness::new(name, WitnessKind::NotInjective, "two grids give the same functor").at_level(n));
    }
    if let Some(_missing) = oracle.difference(&ours).next() {
        return Err(Witness::new(
            name,
            WitnessKind::NotSurjective,
            format!("{} functors, {} grids", oracle.len(), ours.len()),
        )
        .at_level(n));
    }
    if ours.len() != oracle.len() {
        return Err(Witness::new(name, WitnessKind::NotWellDefined, "a grid is not among the functors").at_level(n));
    }
    Ok(())
}

/// The simplicial map `S(F): S(D) -> S(D')` of an augmented double functor.
pub fn sdot_on_functor(f: &DoubleFunctor, src: &Sdot, tgt: &Sdot) -> Result<SimplicialMap> {
    let problems = check_double_functor(
        f,
        &src.double,
        &tgt.double,
        Some((&src.augmentation, &tgt.augmentation)),
    );
    if !problems.is_empty() {
        return Err(Error::Incompatible(format!("not an augmented double functor: {}", problems.join("; "))));
    }
    let dim = src.set.dim().min(tgt.set.dim());
    let mut components = Vec::new();
    for n in 0..=dim {
        let mut comp = Vec::with_capacity(src.grids[n].len());
        for g in &src.grids[n] {
            let image = g.map(f);
            let k = tgt
                .set
                .lookup(n, &image.key(&tgt.double))
                .ok_or_else(|| Error::Internal("image grid is not a cell".into()))?;
            if tgt.grids[n][k] != image {
                return Err(Error::Internal("image grid differs from the completion of its top row".into()));
            }
            comp.push(k);
        }
        components.push(comp);
    }
    Ok(SimplicialMap { components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::w_cosimplicial;
    use crate::simplicial::{check_2segal_triangulations, check_simplicial_map, check_unital, validate_simplicial};

    #[test]
    fn sdot_of_w2() {
        let (w, a) = build_w(2);
        let s = sdot(&w, &a, 4).unwrap();
        assert!(validate_simplicial(&s.set).is_empty());
        assert_eq!(s.set.len(0), 3);
        assert_eq!(s.set.len(1), 6);
        assert_eq!(s.set.len(2), w.hor.morphisms.len());
        assert_eq!(s.set.len(3), w.squares.len());
        assert_eq!(check_2segal_triangulations(&s.set), Ok(()));
        assert_eq!(check_unital(&s.set), Ok(()));
        for n in 0..=3 {
            assert_eq!(sdot_oracle_check(&s, n), Ok(()), "level {n}");
        }
    }

    #[test]
    fn sdot_of_pointed_w0_is_reduced() {
        let (w, a) = build_w(0);
        let s = sdot(&w, &a, 3).unwrap();
        assert_eq!(s.set.level_sizes(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn coface_functor_matches_induced_map() {
        let (w1, a1) = build_w(1);
        let (w2, a2) = build_w(2);
        let s1 = sdot(&w1, &a1, 3).unwrap();
        let s2 = sdot(&w2, &a2, 3).unwrap();
        for i in 0..=2 {
            let alpha = coface(2, i);
            let f = w_cosimplicial(&alpha, 2).unwrap();
            let m = sdot_on_functor(&f, &s1, &s2).unwrap();
            assert!(check_simplicial_map(&s1.set, &s2.set, &m).is_empty());
            // second route: push each grid through the functor entry by entry
            for n in 0..=3 {
                for (x, g) in s1.grids[n].iter().enumerate() {
                    let image = Grid::from_fn(
                        n,
                        |i, j| f.obj[g.to_functor(&w1).obj[pos_obj(n, i, j)]],
                        |i, j| f.hor[g.hgen(i, j)],
                        |i, j| f.ver[g.vgen(i, j)],
                        |i, j| f.sq[g.sqgen(i, j)],
                    );
                    assert_eq!(s2.grids[n][m.apply(n, x)], image);
                }
            }
        }
    }

    fn pos_obj(n: usize, i: usize, j: usize) -> usize {
        let mut k = 0;
        for a in 0..=n {
            for b in a..=n {
                if (a, b) == (i, j) {
                    return k;
                }
                k += 1;
            }
        }
        unreachable!()
    }
}
