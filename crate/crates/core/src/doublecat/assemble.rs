use super::{check_stable, validate_double_category, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::report::{Witness, WitnessKind};
use crate::simplicial::{validate_category, FiniteCategory};
use std::collections::HashMap;

/// Categories of horizontal and vertical morphisms on a common object set,
/// plus squares with boundaries, but no square compositions or identities.
#[derive(Clone, Debug, Default)]
pub struct StableData {
    pub hor: FiniteCategory,
    pub ver: FiniteCategory,
    pub squares: Vec<String>,
    pub s_h: Vec<usize>,
    pub t_h: Vec<usize>,
    pub s_v: Vec<usize>,
    pub t_v: Vec<usize>,
}

impl StableData {
    /// Forgets the compositions and identities of `d`.
    pub fn forget(d: &FiniteDoubleCategory) -> Self {
        StableData {
            hor: d.hor.clone(),
            ver: d.ver.clone(),
            squares: d.squares.clone(),
            s_h: d.s_h.clone(),
            t_h: d.t_h.clone(),
            s_v: d.s_v.clone(),
            t_v: d.t_v.clone(),
        }
    }
}

/// Builds the square compositions and identities from stability.
///
/// Each composite is computed twice: once by completing the composed source
/// span and once by completing the composed target cospan. The two must
/// agree on every composable pair. The result is validated as a stable double
/// category before it is returned.
pub fn assemble_stable(data: &StableData) -> Result<FiniteDoubleCategory> {
    for (name, c) in [("horizontal", &data.hor), ("vertical", &data.ver)] {
        let p = validate_category(c);
        if !p.is_empty() {
            return Err(Error::Malformed(format!("{name} category: {}", p.join("; "))));
        }
    }
    if data.hor.objects != data.ver.objects {
        return Err(Error::Malformed("horizontal and vertical categories have different objects".into()));
    }
    let ns = data.squares.len();
    if [&data.s_h, &data.t_h, &data.s_v, &data.t_v].iter().any(|t| t.len() != ns) {
        return Err(Error::Malformed("boundary tables are not total".into()));
    }
    let mut d = FiniteDoubleCategory {
        hor: data.hor.clone(),
        ver: data.ver.clone(),
        squares: data.squares.clone(),
        s_h: data.s_h.clone(),
        t_h: data.t_h.clone(),
        s_v: data.s_v.clone(),
        t_v: data.t_v.clone(),
        ..Default::default()
    };
    check_stable(&d)?;
    let (h, v) = (&d.hor, &d.ver);
    let span: HashMap<(usize, usize), usize> = d.spans().into_iter().map(|(k, s)| (k, s[0])).collect();
    let cospan: HashMap<(usize, usize), usize> = d.cospans().into_iter().map(|(k, s)| (k, s[0])).collect();
    let disagree = |what: &str, a: usize, b: usize| {
        Error::Precondition(Box::new(
            Witness::new(what, WitnessKind::Axiom, "the span and cospan recipes give different squares")
                .with_cells(vec![d.squares[a].clone(), d.squares[b].clone()]),
        ))
    };
    let mut comp_h = HashMap::new();
    let mut comp_v = HashMap::new();
    for a in 0..ns {
        for b in 0..ns {
            if d.t_h[a] == d.s_h[b] {
                let one = span[&(d.s_h[a], h.comp(d.s_v[a], d.s_v[b]).unwrap())];
                let two = cospan[&(d.t_h[b], h.comp(d.t_v[a], d.t_v[b]).unwrap())];
                if one != two {
                    return Err(disagree("horizontal composition", a, b));
                }
                comp_h.insert((a, b), one);
            }
            if d.t_v[a] == d.s_v[b] {
                let one = span[&(v.comp(d.s_h[a], d.s_h[b]).unwrap(), d.s_v[a])];
                let two = cospan[&(v.comp(d.t_h[a], d.t_h[b]).unwrap(), d.t_v[b])];
                if one != two {
                    return Err(disagree("vertical composition", a, b));
                }
                comp_v.insert((a, b), one);
            }
        }
    }
    d.id_h = (0..v.morphisms.len()).map(|m| span[&(m, h.identity[v.src[m]])]).collect();
    d.id_v = (0..h.morphisms.len()).map(|m| span[&(v.identity[h.src[m]], m)]).collect();
    d.comp_h = comp_h;
    d.comp_v = comp_v;
    let problems = validate_double_category(&d);
    if !problems.is_empty() {
        let shown: Vec<String> = problems.iter().take(5).map(|p| p.to_string()).collect();
        return Err(Error::Internal(format!("assembled data is not a double category: {}", shown.join("; "))));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::build_w;

    #[test]
    fn reassembling_w_recovers_compositions() {
        for n in 0..=3 {
            let (w, _) = build_w(n);
            let d = assemble_stable(&StableData::forget(&w)).unwrap();
            assert_eq!(d, w, "W{n}");
        }
    }

    #[test]
    fn terminal_double_category() {
        let c = FiniteCategory::ordinal(0);
        let data = StableData {
            hor: c.clone(),
            ver: c,
            squares: vec!["*".into()],
            s_h: vec![0],
            t_h: vec![0],
            s_v: vec![0],
            t_v: vec![0],
        };
        let d = assemble_stable(&data).unwrap();
        assert_eq!(d.comp_h[&(0, 0)], 0);
        assert_eq!(d.id_h, vec![0]);
    }

    #[test]
    fn unstable_data_is_rejected() {
        let (w, _) = build_w(2);
        let mut data = StableData::forget(&w);
        data.squares.pop();
        data.s_h.pop();
        data.t_h.pop();
        data.s_v.pop();
        data.t_v.pop();
        assert!(matches!(assemble_stable(&data), Err(Error::Precondition(_))));
    }
}
