use super::{Augmentation, DoubleFunctor, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::simplicial::FiniteCategory;
use std::collections::HashMap;

fn join(n: usize, parts: &[usize]) -> String {
    let sep = if n < 10 { "" } else { "." };
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(sep)
}

/// Object `ij` of `W_n`.
pub(crate) fn w_obj(n: usize, i: usize, j: usize) -> String {
    join(n, &[i, j])
}

/// The staircase double category `W_n` with its augmentation `{ii}`.
///
/// Objects are pairs `ij` with `i <= j`. The horizontal morphism `h ijk`
/// (`i <= j <= k`) goes `ij -> ik`, the vertical one `v ijk` (`i <= k <= j`)
/// goes `ij -> kj`, and the square `q ikjl` (`i <= k <= j <= l`) has corners
/// `ij`, `il` on top and `kj`, `kl` below.
pub fn build_w(n: usize) -> (FiniteDoubleCategory, Augmentation) {
    let mut objects = Vec::new();
    let mut oidx = HashMap::new();
    for i in 0..=n {
        for j in i..=n {
            oidx.insert((i, j), objects.len());
            objects.push(w_obj(n, i, j));
        }
    }
    let mut hor = FiniteCategory { objects: objects.clone(), ..Default::default() };
    let mut hidx = HashMap::new();
    for i in 0..=n {
        for j in i..=n {
            for k in j..=n {
                hidx.insert((i, j, k), hor.morphisms.len());
                hor.morphisms.push(format!("h{}", join(n, &[i, j, k])));
                hor.src.push(oidx[&(i, j)]);
                hor.tgt.push(oidx[&(i, k)]);
            }
        }
    }
    let mut ver = FiniteCategory { objects, ..Default::default() };
    let mut vidx = HashMap::new();
    for i in 0..=n {
        for j in i..=n {
            for k in i..=j {
                vidx.insert((i, j, k), ver.morphisms.len());
                ver.morphisms.push(format!("v{}", join(n, &[i, j, k])));
                ver.src.push(oidx[&(i, j)]);
                ver.tgt.push(oidx[&(k, j)]);
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = oidx.keys().copied().collect();
    pairs.sort();
    hor.identity = pairs.iter().map(|&(i, j)| hidx[&(i, j, j)]).collect();
    ver.identity = pairs.iter().map(|&(i, j)| vidx[&(i, j, i)]).collect();
    for (&(i, j, k), &f) in &hidx {
        for l in k..=n {
            hor.compose.insert((f, hidx[&(i, k, l)]), hidx[&(i, j, l)]);
        }
    }
    for (&(i, j, k), &f) in &vidx {
        for l in k..=j {
            ver.compose.insert((f, vidx[&(k, j, l)]), vidx[&(i, j, l)]);
        }
    }
    let mut d = FiniteDoubleCategory { hor, ver, ..Default::default() };
    let mut sidx = HashMap::new();
    for i in 0..=n {
        for k in i..=n {
            for j in k..=n {
                for l in j..=n {
                    sidx.insert((i, k, j, l), d.squares.len());
                    d.squares.push(format!("q{}", join(n, &[i, k, j, l])));
                    d.s_v.push(hidx[&(i, j, l)]);
                    d.t_v.push(hidx[&(k, j, l)]);
                    d.s_h.push(vidx[&(i, j, k)]);
                    d.t_h.push(vidx[&(i, l, k)]);
                }
            }
        }
    }
    for (&(i, k, j, l), &a) in &sidx {
        for m in l..=n {
            d.comp_h.insert((a, sidx[&(i, k, l, m)]), sidx[&(i, k, j, m)]);
        }
        for m in k..=j {
            d.comp_v.insert((a, sidx[&(k, m, j, l)]), sidx[&(i, m, j, l)]);
        }
    }
    d.id_h = vec![0; d.ver.morphisms.len()];
    for (&(i, j, k), &v) in &vidx {
        d.id_h[v] = sidx[&(i, k, j, j)];
    }
    d.id_v = vec![0; d.hor.morphisms.len()];
    for (&(i, j, k), &h) in &hidx {
        d.id_v[h] = sidx[&(i, i, j, k)];
    }
    let a = (0..=n).map(|i| oidx[&(i, i)]).collect();
    (d, a)
}

fn check_monotone(alpha: &[usize], n: usize) -> Result<()> {
    if alpha.is_empty() || alpha.windows(2).any(|w| w[0] > w[1]) || alpha.iter().any(|&x| x > n) {
        return Err(Error::Argument(format!("{alpha:?} is not a monotone map into [{n}]")));
    }
    Ok(())
}

/// The double functor `W_m -> W_n` induced by a monotone `alpha: [m] -> [n]`,
/// given by its values `alpha[0..=m]`.
pub fn w_cosimplicial(alpha: &[usize], n: usize) -> Result<DoubleFunctor> {
    check_monotone(alpha, n)?;
    let m = alpha.len() - 1;
    let (src, _) = build_w(m);
    let (tgt, _) = build_w(n);
    let a = |i: usize| alpha[i];
    let o = tgt.hor.object_index();
    let h = tgt.hor.morphism_index();
    let v = tgt.ver.morphism_index();
    let q = tgt.square_index();
    let mut f = DoubleFunctor::default();
    for i in 0..=m {
        for j in i..=m {
            f.obj.push(o[w_obj(n, a(i), a(j)).as_str()]);
        }
    }
    for i in 0..=m {
        for j in i..=m {
            for k in j..=m {
                f.hor.push(h[format!("h{}", join(n, &[a(i), a(j), a(k)])).as_str()]);
            }
        }
    }
    for i in 0..=m {
        for j in i..=m {
            for k in i..=j {
                f.ver.push(v[format!("v{}", join(n, &[a(i), a(j), a(k)])).as_str()]);
            }
        }
    }
    for i in 0..=m {
        for k in i..=m {
            for j in k..=m {
                for l in j..=m {
                    f.sq.push(q[format!("q{}", join(n, &[a(i), a(k), a(j), a(l)])).as_str()]);
                }
            }
        }
    }
    debug_assert_eq!(f.sq.len(), src.squares.len());
    Ok(f)
}

/// The double category with the given horizontal category, discrete vertical
/// category and only identity squares.
fn horizontal_only(c: &FiniteCategory) -> FiniteDoubleCategory {
    let ver = FiniteCategory {
        objects: c.objects.clone(),
        morphisms: c.objects.iter().map(|o| format!("1{o}")).collect(),
        src: (0..c.objects.len()).collect(),
        tgt: (0..c.objects.len()).collect(),
        identity: (0..c.objects.len()).collect(),
        compose: (0..c.objects.len()).map(|x| ((x, x), x)).collect(),
    };
    let nh = c.morphisms.len();
    FiniteDoubleCategory {
        hor: c.clone(),
        ver,
        squares: c.morphisms.iter().map(|m| format!("1{m}")).collect(),
        s_h: c.src.clone(),
        t_h: c.tgt.clone(),
        s_v: (0..nh).collect(),
        t_v: (0..nh).collect(),
        comp_h: c.compose.clone(),
        comp_v: (0..nh).map(|a| ((a, a), a)).collect(),
        id_h: c.identity.clone(),
        id_v: (0..nh).collect(),
    }
}

/// `H_n`: horizontal category `[n]`, discrete vertical category, identity
/// squares only.
pub fn build_h(n: usize) -> FiniteDoubleCategory {
    horizontal_only(&FiniteCategory::ordinal(n))
}

/// `V_n`: the transpose of `H_n`.
pub fn build_v(n: usize) -> FiniteDoubleCategory {
    build_h(n).transpose()
}

fn ordinal_functor(alpha: &[usize], n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    check_monotone(alpha, n)?;
    let m = alpha.len() - 1;
    let src = FiniteCategory::ordinal(m);
    let tgt = FiniteCategory::ordinal(n);
    let idx = tgt.morphism_index();
    let mor = src
        .src
        .iter()
        .zip(&src.tgt)
        .map(|(&i, &j)| idx[format!("{}<{}", alpha[i], alpha[j]).as_str()])
        .collect();
    Ok((alpha.to_vec(), mor))
}

/// The double functor `H_m -> H_n` induced by a monotone map.
pub fn h_cosimplicial(alpha: &[usize], n: usize) -> Result<DoubleFunctor> {
    let (obj, mor) = ordinal_functor(alpha, n)?;
    Ok(DoubleFunctor { ver: obj.clone(), obj, hor: mor.clone(), sq: mor })
}

/// The double functor `V_m -> V_n` induced by a monotone map.
pub fn v_cosimplicial(alpha: &[usize], n: usize) -> Result<DoubleFunctor> {
    let (obj, mor) = ordinal_functor(alpha, n)?;
    Ok(DoubleFunctor { hor: obj.clone(), obj, ver: mor.clone(), sq: mor })
}

/// The double category of commuting squares in `c`, with `c` in both
/// directions.
pub fn commutative_squares(c: &FiniteCategory) -> FiniteDoubleCategory {
    let mut d = FiniteDoubleCategory { hor: c.clone(), ver: c.clone(), ..Default::default() };
    let out = c.outgoing();
    let mut idx = HashMap::new();
    for f in 0..c.morphisms.len() {
        // f on the left, g on top
        for &g in &out[c.src[f]] {
            for &r in &out[c.tgt[g]] {
                for &b in &out[c.tgt[f]] {
                    if c.tgt[r] == c.tgt[b] && c.comp(g, r) == c.comp(f, b) {
                        idx.insert((f, r, g, b), d.squares.len());
                        d.squares.push(format!(
                            "[{},{},{},{}]",
                            c.morphisms[f], c.morphisms[r], c.morphisms[g], c.morphisms[b]
                        ));
                        d.s_h.push(f);
                        d.t_h.push(r);
                        d.s_v.push(g);
                        d.t_v.push(b);
                    }
                }
            }
        }
    }
    for (&(f, r, g, b), &a) in &idx {
        for (&(f2, r2, g2, b2), &a2) in &idx {
            if f2 == r {
                let k = (f, r2, c.comp(g, g2).unwrap(), c.comp(b, b2).unwrap());
                d.comp_h.insert((a, a2), idx[&k]);
            }
            if g2 == b {
                let k = (c.comp(f, f2).unwrap(), c.comp(r, r2).unwrap(), g, b2);
                d.comp_v.insert((a, a2), idx[&k]);
            }
        }
    }
    d.id_h = (0..c.morphisms.len())
        .map(|f| idx[&(f, f, c.identity[c.src[f]], c.identity[c.tgt[f]])])
        .collect();
    d.id_v = (0..c.morphisms.len())
        .map(|g| idx[&(c.identity[c.src[g]], c.identity[c.tgt[g]], g, g)])
        .collect();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::{check_augmentation, check_double_functor, check_stable, validate_double_category};
    use crate::simplicial::FiniteCategory;

    fn quadruples(n: usize) -> usize {
        let mut c = 0;
        for i in 0..=n {
            for k in 0..=n {
                for j in 0..=n {
                    for l in 0..=n {
                        if i <= k && k <= j && j <= l {
                            c += 1;
                        }
                    }
                }
            }
        }
        c
    }

    #[test]
    fn w_sizes() {
        assert_eq!(build_w(0).0.n_objects(), 1);
        assert_eq!(build_w(0).0.squares.len(), 1);
        assert_eq!(build_w(2).0.n_objects(), 6);
        let (w3, _) = build_w(3);
        assert_eq!(w3.n_objects(), 10);
        assert_eq!(w3.squares.len(), quadruples(3));
        assert_eq!(w3.squares.len(), 35);
        assert_eq!(build_w(2).0.squares.len(), 15);
    }

    #[test]
    fn w_n_are_augmented_stable_double_categories() {
        for n in 0..=4 {
            let (w, a) = build_w(n);
            assert!(validate_double_category(&w).is_empty(), "W{n}: {:?}", validate_double_category(&w));
            assert_eq!(check_stable(&w), Ok(()));
            assert_eq!(check_augmentation(&w, &a), Ok(()));
        }
    }

    #[test]
    fn w2_with_one_augmentation_object_fails() {
        let (w, _) = build_w(2);
        let o = w.hor.object_index();
        let err = check_augmentation(&w, &[o["00"]]).unwrap_err();
        assert_eq!(err.check, "augmentation-hor");
        assert_eq!(err.cells[0], "11");
    }

    #[test]
    fn corrupted_w2_boundary_is_reported() {
        let (mut w, _) = build_w(2);
        let k = w.square_index()["q0112"];
        w.s_v[k] = w.hor.morphism_index()["h000"];
        let report = validate_double_category(&w);
        assert!(report.iter().any(|v| v.axiom == "square corners do not match" && v.cells == ["q0112"]));
    }

    #[test]
    fn coface_sends_01_to_12() {
        let f = w_cosimplicial(&[1, 2], 2).unwrap();
        let (w1, _) = build_w(1);
        let (w2, _) = build_w(2);
        let k = w1.hor.object_index()["01"];
        assert_eq!(w2.objects()[f.obj[k]], "12");
    }

    #[test]
    fn cosimplicial_maps_are_functors_and_compose() {
        fn monotone(m: usize, n: usize) -> Vec<Vec<usize>> {
            let mut out = vec![vec![]];
            for _ in 0..=m {
                out = out
                    .into_iter()
                    .flat_map(|p: Vec<usize>| {
                        let lo = p.last().copied().unwrap_or(0);
                        (lo..=n).map(move |x| {
                            let mut q = p.clone();
                            q.push(x);
                            q
                        })
                    })
                    .collect();
            }
            out
        }
        for m in 0..=2 {
            for n in 0..=3 {
                let (wm, am) = build_w(m);
                let (wn, an) = build_w(n);
                for alpha in monotone(m, n) {
                    let f = w_cosimplicial(&alpha, n).unwrap();
                    assert!(check_double_functor(&f, &wm, &wn, Some((&am, &an))).is_empty(), "{alpha:?}");
                    for p in 0..=3 {
                        for beta in monotone(n, p) {
                            let g = w_cosimplicial(&beta, p).unwrap();
                            let comp: Vec<usize> = alpha.iter().map(|&i| beta[i]).collect();
                            assert_eq!(f.then(&g), w_cosimplicial(&comp, p).unwrap());
                        }
                    }
                }
                if m == n {
                    let id: Vec<usize> = (0..=n).collect();
                    assert_eq!(w_cosimplicial(&id, n).unwrap(), DoubleFunctor::identity(&wn));
                }
            }
        }
        assert!(w_cosimplicial(&[1, 0], 2).is_err());
    }

    #[test]
    fn h_and_v_are_double_categories() {
        for n in 0..=3 {
            assert!(validate_double_category(&build_h(n)).is_empty());
            assert!(validate_double_category(&build_v(n)).is_empty());
        }
        let f = h_cosimplicial(&[0, 2], 2).unwrap();
        assert!(check_double_functor(&f, &build_h(1), &build_h(2), None).is_empty());
        let g = v_cosimplicial(&[0, 0, 1], 1).unwrap();
        assert!(check_double_functor(&g, &build_v(2), &build_v(1), None).is_empty());
    }

    #[test]
    fn commutative_squares_of_poset_is_valid_but_not_stable() {
        let d = commutative_squares(&FiniteCategory::ordinal(2));
        assert!(validate_double_category(&d).is_empty());
        let err = check_stable(&d).unwrap_err();
        // the cospan (1<2, 1<2) into 2 is filled by squares from 0 and from 1
        assert!(err.cells.len() >= 4 || err.kind == crate::WitnessKind::NotSurjective);
        let cospans = d.cospans();
        let m = d.hor.morphism_index();
        let k = (m["1<2"], m["1<2"]);
        assert!(cospans[&k].len() >= 2);
    }
}
