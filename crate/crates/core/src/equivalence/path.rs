use crate::doublecat::{Augmentation, DoubleFunctor, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::simplicial::{
    check_2segal_triangulations, check_simplicial_map, check_unital, coskeletal_extend, validate_category,
    FiniteCategory, SimplicialMap, TruncatedSimplicialSet,
};
use std::collections::HashMap;

/// Inverts `x -> (d_i x, d_j x)` on level `n`, insisting it is a bijection
/// onto the pairs `(a, b)` with `d_{j-1} a = d_i b`.
fn invert_pair(x: &TruncatedSimplicialSet, n: usize, i: usize, j: usize) -> Result<HashMap<(usize, usize), usize>> {
    let mut inv = HashMap::new();
    for c in 0..x.len(n) {
        if inv.insert((x.face(n, i, c), x.face(n, j, c)), c).is_some() {
            return Err(Error::Internal(format!("(d{i}, d{j}) is not injective on level {n}")));
        }
    }
    let mut by_face: HashMap<usize, Vec<usize>> = HashMap::new();
    for b in 0..x.len(n - 1) {
        by_face.entry(x.face(n - 1, i, b)).or_default().push(b);
    }
    let mut pairs = 0;
    for a in 0..x.len(n - 1) {
        pairs += by_face.get(&x.face(n - 1, j - 1, a)).map_or(0, Vec::len);
    }
    if pairs != inv.len() {
        return Err(Error::Internal(format!("(d{i}, d{j}) is not surjective on level {n}")));
    }
    Ok(inv)
}

/// The double category `P(X)` of a unital 2-Segal set and its augmentation
/// `s_0 X_0`.
///
/// Objects are `X_1`; horizontal morphisms are `X_2` with source `d_2` and
/// target `d_1`; vertical morphisms are `X_2` with source `d_1` and target
/// `d_0`; squares are `X_3` with `s_h = d_3`, `t_h = d_2`, `s_v = d_1`,
/// `t_v = d_0`. Compositions invert `(d_3, d_1)` and `(d_2, d_0)` on `X_3`
/// and `(d_4, d_2)` and `(d_2, d_0)` on `X_4`; identity squares are `s_0`
/// and `s_2`. A 3-truncated input is first extended coskeletally.
pub fn path_double_cat(x: &TruncatedSimplicialSet) -> Result<(FiniteDoubleCategory, Augmentation)> {
    if x.dim() < 3 {
        return Err(Error::Argument("the path construction needs levels 0..=3".into()));
    }
    check_2segal_triangulations(x)?;
    check_unital(x)?;
    let extended;
    let x = if x.dim() == 3 {
        extended = coskeletal_extend(x, 4)?;
        &extended
    } else {
        x
    };
    let ob: Vec<String> = x.cells(1).to_vec();
    let mor: Vec<String> = x.cells(2).to_vec();
    let n2 = x.len(2);
    let mut hor = FiniteCategory {
        objects: ob.clone(),
        morphisms: mor.clone(),
        src: (0..n2).map(|y| x.face(2, 2, y)).collect(),
        tgt: (0..n2).map(|y| x.face(2, 1, y)).collect(),
        identity: (0..x.len(1)).map(|e| x.degen(1, 1, e)).collect(),
        compose: HashMap::new(),
    };
    let mut ver = FiniteCategory {
        objects: ob,
        morphisms: mor,
        src: (0..n2).map(|y| x.face(2, 1, y)).collect(),
        tgt: (0..n2).map(|y| x.face(2, 0, y)).collect(),
        identity: (0..x.len(1)).map(|e| x.degen(1, 0, e)).collect(),
        compose: HashMap::new(),
    };
    for c in 0..x.len(3) {
        hor.compose.insert((x.face(3, 3, c), x.face(3, 1, c)), x.face(3, 2, c));
        ver.compose.insert((x.face(3, 2, c), x.face(3, 0, c)), x.face(3, 1, c));
    }
    for (name, c) in [("horizontal", &hor), ("vertical", &ver)] {
        let p = validate_category(c);
        if !p.is_empty() {
            return Err(Error::Internal(format!("{name} category of the path construction: {}", p.join("; "))));
        }
    }
    let n3 = x.len(3);
    let mut d = FiniteDoubleCategory {
        hor,
        ver,
        squares: x.cells(3).to_vec(),
        s_h: (0..n3).map(|c| x.face(3, 3, c)).collect(),
        t_h: (0..n3).map(|c| x.face(3, 2, c)).collect(),
        s_v: (0..n3).map(|c| x.face(3, 1, c)).collect(),
        t_v: (0..n3).map(|c| x.face(3, 0, c)).collect(),
        id_h: (0..n2).map(|y| x.degen(2, 2, y)).collect(),
        id_v: (0..n2).map(|y| x.degen(2, 0, y)).collect(),
        ..Default::default()
    };
    let h_inv = invert_pair(x, 4, 2, 4)?;
    for (&(b, a), &y) in &h_inv {
        // the key is (d2 y, d4 y); a is the left factor
        d.comp_h.insert((a, b), x.face(4, 3, y));
    }
    let v_inv = invert_pair(x, 4, 0, 2)?;
    for (&(c, a), &y) in &v_inv {
        d.comp_v.insert((a, c), x.face(4, 1, y));
    }
    let aug: Vec<usize> = (0..x.len(0)).map(|v| x.degen(0, 0, v)).collect();
    Ok((d, aug))
}

/// The augmented double functor `P(f)`: `f_1` on objects, `f_2` on both
/// kinds of morphisms and `f_3` on squares.
pub fn path_on_map(f: &SimplicialMap, x: &TruncatedSimplicialSet, y: &TruncatedSimplicialSet) -> Result<DoubleFunctor> {
    if f.dim() < 3 {
        return Err(Error::Argument("the map must be given on levels 0..=3".into()));
    }
    for z in [x, y] {
        check_2segal_triangulations(z)?;
        check_unital(z)?;
    }
    let problems = check_simplicial_map(x, y, f);
    if !problems.is_empty() {
        return Err(Error::Incompatible(problems.join("; ")));
    }
    Ok(DoubleFunctor {
        obj: f.components[1].clone(),
        hor: f.components[2].clone(),
        ver: f.components[2].clone(),
        sq: f.components[3].clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::{check_augmentation, check_stable, validate_double_category};
    use crate::simplicial::nerve;

    #[test]
    fn path_of_ordinal_nerve_is_a_stable_augmented_double_category() {
        let x = nerve(&FiniteCategory::ordinal(2), 4).unwrap();
        let (d, a) = path_double_cat(&x).unwrap();
        assert!(validate_double_category(&d).is_empty());
        assert_eq!(check_stable(&d), Ok(()));
        assert_eq!(check_augmentation(&d, &a), Ok(()));
        assert_eq!(d.n_objects(), 6);
        // P of the nerve of [2] is W_2
        assert_eq!(d.squares.len(), 15);
    }

    #[test]
    fn truncated_input_is_extended() {
        let x = nerve(&FiniteCategory::ordinal(2), 4).unwrap();
        let (d4, _) = path_double_cat(&x).unwrap();
        let (d3, _) = path_double_cat(&x.truncate(3).unwrap()).unwrap();
        assert_eq!(d3.squares, d4.squares);
        for (k, v) in &d4.comp_h {
            assert_eq!(d3.comp_h.get(k), Some(v));
        }
        assert_eq!(d3.comp_v.len(), d4.comp_v.len());
    }
}
