#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use segal_core::examples::{Graph, PartialMonoid};
use segal_core::simplicial::{FiniteCategory, TruncatedSimplicialSet};
use std::collections::{BTreeSet, HashMap};

pub fn one() -> PartialMonoid {
    PartialMonoid::with_units(&["1"], "1", &[]).unwrap()
}

/// `{1, a}` with `a·a` undefined.
pub fn one_a() -> PartialMonoid {
    PartialMonoid::with_units(&["1", "a"], "1", &[]).unwrap()
}

/// `{1, a, b}` with `a·a = b` and nothing else beyond the unit.
pub fn three() -> PartialMonoid {
    PartialMonoid::with_units(&["1", "a", "b"], "1", &[("a", "a", "b")]).unwrap()
}

pub fn path_graphs() -> Vec<Graph> {
    let names = ["a", "b", "c"];
    (0..=3).map(|k| Graph::path(&names[..k])).collect()
}

/// A random partial monoid: a down-closed set `S` of vectors in `N^r`
/// containing 0, with `u·v = u + v` whenever the sum lies in `S`.
pub fn random_ideal_monoid(rng: &mut StdRng) -> PartialMonoid {
    let r = rng.gen_range(1..=2);
    let bound = if r == 1 { 4 } else { 2 };
    let mut box_points: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..r {
        box_points = box_points
            .into_iter()
            .flat_map(|p| {
                (0..=bound).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    box_points.sort_by_key(|p| p.iter().sum::<usize>());
    let mut ideal: BTreeSet<Vec<usize>> = BTreeSet::new();
    ideal.insert(vec![0; r]);
    let target = rng.gen_range(1..=5);
    for p in &box_points {
        if ideal.len() >= target {
            break;
        }
        let below = (0..r).all(|i| {
            p[i] == 0 || {
                let mut q = p.clone();
                q[i] -= 1;
                ideal.contains(&q)
            }
        });
        if below && rng.gen_bool(0.6) {
            ideal.insert(p.clone());
        }
    }
    let elems: Vec<Vec<usize>> = ideal.into_iter().collect();
    let name = |p: &[usize]| format!("e{}", p.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("_"));
    let names: Vec<String> = elems.iter().map(|p| name(p)).collect();
    let mut table = Vec::new();
    for u in &elems {
        for v in &elems {
            let w: Vec<usize> = u.iter().zip(v).map(|(a, b)| a + b).collect();
            if elems.contains(&w) {
                table.push((name(u), name(v), name(&w)));
            }
        }
    }
    PartialMonoid::new(&names, &name(&vec![0; r]), &table).unwrap()
}

/// The poset category of a random partial order on at most four points.
pub fn random_poset(rng: &mut StdRng) -> FiniteCategory {
    let k = rng.gen_range(1..=4);
    let mut le = vec![vec![false; k]; k];
    for i in 0..k {
        le[i][i] = true;
        for j in i + 1..k {
            le[i][j] = rng.gen_bool(0.4);
        }
    }
    for m in 0..k {
        for i in 0..k {
            for j in 0..k {
                if le[i][m] && le[m][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let mut c = FiniteCategory {
        objects: (0..k).map(|i| format!("p{i}")).collect(),
        ..Default::default()
    };
    let mut idx = HashMap::new();
    for i in 0..k {
        for j in 0..k {
            if le[i][j] {
                idx.insert((i, j), c.morphisms.len());
                c.morphisms.push(format!("p{i}<p{j}"));
                c.src.push(i);
                c.tgt.push(j);
            }
        }
    }
    c.identity = (0..k).map(|i| idx[&(i, i)]).collect();
    for (&(i, j), &f) in &idx {
        for l in 0..k {
            if let Some(&g) = idx.get(&(j, l)) {
                c.compose.insert((f, g), idx[&(i, l)]);
            }
        }
    }
    c
}

/// A random simple graph on at most three vertices.
pub fn random_graph(rng: &mut StdRng) -> Graph {
    let names = ["u", "v", "w"];
    let k = rng.gen_range(0..=3);
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if rng.gen_bool(0.5) {
                edges.push((names[i], names[j]));
            }
        }
    }
    Graph::new(&names[..k], &edges).unwrap()
}

pub fn is_degenerate(x: &TruncatedSimplicialSet, n: usize, c: usize) -> bool {
    n > 0 && (0..n).any(|i| x.degen(n - 1, i, x.face(n, i, c)) == c)
}

/// The largest subobject of `x` avoiding the given nondegenerate cells.
pub fn remove_cells(x: &TruncatedSimplicialSet, chosen: &[(usize, usize)]) -> TruncatedSimplicialSet {
    let dim = x.dim();
    let mut gone: Vec<Vec<bool>> = (0..=dim).map(|n| vec![false; x.len(n)]).collect();
    for &(n, c) in chosen {
        assert!(!is_degenerate(x, n, c));
        gone[n][c] = true;
    }
    for n in 1..=dim {
        for c in 0..x.len(n) {
            if (0..=n).any(|i| gone[n - 1][x.face(n, i, c)]) {
                gone[n][c] = true;
            }
        }
    }
    let keep: Vec<Vec<usize>> = gone
        .iter()
        .map(|g| (0..g.len()).filter(|&c| !g[c]).collect())
        .collect();
    let mut new_index: Vec<HashMap<usize, usize>> = Vec::new();
    for k in &keep {
        new_index.push(k.iter().enumerate().map(|(i, &c)| (c, i)).collect());
    }
    let cells = (0..=dim).map(|n| keep[n].iter().map(|&c| x.id(n, c).to_string()).collect()).collect();
    let mut face = vec![Vec::new()];
    for n in 1..=dim {
        face.push((0..=n).map(|i| keep[n].iter().map(|&c| new_index[n - 1][&x.face(n, i, c)]).collect()).collect());
    }
    let degen = (0..dim)
        .map(|n| (0..=n).map(|i| keep[n].iter().map(|&c| new_index[n + 1][&x.degen(n, i, c)]).collect()).collect())
        .collect();
    TruncatedSimplicialSet::from_tables(dim, cells, face, degen).unwrap()
}

/// `x` with a second copy of the top-level cell `c`, sharing its faces.
pub fn duplicate_top(x: &TruncatedSimplicialSet, c: usize) -> TruncatedSimplicialSet {
    let dim = x.dim();
    let mut cells: Vec<Vec<String>> = (0..=dim).map(|n| x.cells(n).to_vec()).collect();
    cells[dim].push(format!("{}'", x.id(dim, c)));
    let mut face = vec![Vec::new()];
    for n in 1..=dim {
        let mut f: Vec<Vec<usize>> = (0..=n).map(|i| (0..x.len(n)).map(|y| x.face(n, i, y)).collect()).collect();
        if n == dim {
            for (i, row) in f.iter_mut().enumerate() {
                row.push(x.face(n, i, c));
            }
        }
        face.push(f);
    }
    let degen = (0..dim)
        .map(|n| (0..=n).map(|i| (0..x.len(n)).map(|y| x.degen(n, i, y)).collect()).collect())
        .collect();
    TruncatedSimplicialSet::from_tables(dim, cells, face, degen).unwrap()
}

/// Either deletes a few random nondegenerate cells or duplicates a random
/// top cell.
pub fn corrupt(x: &TruncatedSimplicialSet, rng: &mut StdRng) -> TruncatedSimplicialSet {
    let dim = x.dim();
    if rng.gen_bool(0.3) && x.len(dim) > 0 {
        return duplicate_top(x, rng.gen_range(0..x.len(dim)));
    }
    let mut nondeg: Vec<(usize, usize)> = Vec::new();
    for n in 1..=dim {
        for c in 0..x.len(n) {
            if !is_degenerate(x, n, c) {
                nondeg.push((n, c));
            }
        }
    }
    if nondeg.is_empty() {
        return x.clone();
    }
    let k = rng.gen_range(1..=2.min(nondeg.len()));
    let chosen: Vec<(usize, usize)> = nondeg.choose_multiple(rng, k).copied().collect();
    remove_cells(x, &chosen)
}
