use crate::doublecat::{augmentation_arrows, check_augmentation, check_stable, DoubleFunctor, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::tuple_key;
use std::collections::HashMap;

const UNSET: usize = usize::MAX;

/// An `n`-simplex of the S-construction: an augmented double functor
/// `W_n -> D`, stored by its values on the generators of `W_n`.
///
/// `obj(i, j)` for `i <= j`; `hgen(i, j): obj(i, j) -> obj(i, j+1)` for
/// `j < n`; `vgen(i, j): obj(i, j) -> obj(i+1, j)` for `i < j`;
/// `sqgen(i, j)` for `i + 1 <= j <= n - 1`, the square with corners
/// `(i, j)`, `(i, j+1)`, `(i+1, j)`, `(i+1, j+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    n: usize,
    obj: Vec<usize>,
    hgen: Vec<usize>,
    vgen: Vec<usize>,
    sqgen: Vec<usize>,
}

impl Grid {
    fn empty(n: usize) -> Self {
        let s = (n + 1) * (n + 1);
        Grid { n, obj: vec![UNSET; s], hgen: vec![UNSET; s], vgen: vec![UNSET; s], sqgen: vec![UNSET; s] }
    }

    fn at(&self, i: usize, j: usize) -> usize {
        i * (self.n + 1) + j
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn obj(&self, i: usize, j: usize) -> usize {
        self.obj[self.at(i, j)]
    }

    pub fn hgen(&self, i: usize, j: usize) -> usize {
        self.hgen[self.at(i, j)]
    }

    pub fn vgen(&self, i: usize, j: usize) -> usize {
        self.vgen[self.at(i, j)]
    }

    pub fn sqgen(&self, i: usize, j: usize) -> usize {
        self.sqgen[self.at(i, j)]
    }

    pub(crate) fn set_obj(&mut self, i: usize, j: usize, v: usize) {
        let k = self.at(i, j);
        self.obj[k] = v;
    }

    pub(crate) fn set_hgen(&mut self, i: usize, j: usize, v: usize) {
        let k = self.at(i, j);
        self.hgen[k] = v;
    }

    pub(crate) fn set_vgen(&mut self, i: usize, j: usize, v: usize) {
        let k = self.at(i, j);
        self.vgen[k] = v;
    }

    pub(crate) fn set_sqgen(&mut self, i: usize, j: usize, v: usize) {
        let k = self.at(i, j);
        self.sqgen[k] = v;
    }

    /// A grid built cell by cell from a generator function for each kind.
    pub fn from_fn(
        n: usize,
        obj: impl Fn(usize, usize) -> usize,
        hgen: impl Fn(usize, usize) -> usize,
        vgen: impl Fn(usize, usize) -> usize,
        sqgen: impl Fn(usize, usize) -> usize,
    ) -> Grid {
        let mut g = Grid::empty(n);
        for i in 0..=n {
            for j in i..=n {
                g.set_obj(i, j, obj(i, j));
                if j < n {
                    g.set_hgen(i, j, hgen(i, j));
                }
                if i < j {
                    g.set_vgen(i, j, vgen(i, j));
                }
                if i + 1 <= j && j + 1 <= n {
                    g.set_sqgen(i, j, sqgen(i, j));
                }
            }
        }
        g
    }

    /// Applies the components of `f` to every entry.
    pub fn map(&self, f: &DoubleFunctor) -> Grid {
        let m = |t: &[usize], c: &[usize]| t.iter().map(|&x| if x == UNSET { UNSET } else { c[x] }).collect();
        Grid { n: self.n, obj: m(&self.obj, &f.obj), hgen: m(&self.hgen, &f.hor), vgen: m(&self.vgen, &f.ver), sqgen: m(&self.sqgen, &f.sq) }
    }

    /// The identifier of the simplex: the augmentation object at level 0, the
    /// object `obj(0,1)` at level 1, and the string `hgen(0,1), ...,
    /// hgen(0,n-1)` above.
    pub fn key(&self, d: &FiniteDoubleCategory) -> String {
        match self.n {
            0 => d.objects()[self.obj(0, 0)].clone(),
            1 => d.objects()[self.obj(0, 1)].clone(),
            n => {
                let names: Vec<&str> = (1..n).map(|j| d.hor.morphisms[self.hgen(0, j)].as_str()).collect();
                tuple_key(&names)
            }
        }
    }

    /// The value on the horizontal morphism `ij -> ik` of `W_n`.
    pub fn hor(&self, d: &FiniteDoubleCategory, i: usize, j: usize, k: usize) -> usize {
        let mut m = d.hor.identity[self.obj(i, j)];
        for t in j..k {
            m = d.hor.comp(m, self.hgen(i, t)).expect("grid morphisms compose");
        }
        m
    }

    /// The value on the vertical morphism `ij -> kj` of `W_n`.
    pub fn ver(&self, d: &FiniteDoubleCategory, i: usize, j: usize, k: usize) -> usize {
        let mut m = d.ver.identity[self.obj(i, j)];
        for r in i..k {
            m = d.ver.comp(m, self.vgen(r, j)).expect("grid morphisms compose");
        }
        m
    }

    /// The value on the square of `W_n` with corners `ij`, `il`, `kj`, `kl`.
    pub fn sq(&self, d: &FiniteDoubleCategory, i: usize, k: usize, j: usize, l: usize) -> usize {
        if i == k {
            return d.id_v[self.hor(d, i, j, l)];
        }
        if j == l {
            return d.id_h[self.ver(d, i, j, k)];
        }
        let column = |t: usize| {
            let mut a = self.sqgen(i, t);
            for r in i + 1..k {
                a = d.comp_v[&(a, self.sqgen(r, t))];
            }
            a
        };
        let mut a = column(j);
        for t in j + 1..l {
            a = d.comp_h[&(a, column(t))];
        }
        a
    }

    /// Precomposition with the functor `W_m -> W_n` of a monotone map
    /// `alpha: [m] -> [n]` (given by its values).
    pub fn reindex(&self, d: &FiniteDoubleCategory, alpha: &[usize]) -> Grid {
        let a = |i: usize| alpha[i];
        Grid::from_fn(
            alpha.len() - 1,
            |i, j| self.obj(a(i), a(j)),
            |i, j| self.hor(d, a(i), a(j), a(j + 1)),
            |i, j| self.ver(d, a(i), a(j), a(i + 1)),
            |i, j| self.sq(d, a(i), a(i + 1), a(j), a(j + 1)),
        )
    }

    /// The full double functor `W_n -> D`, in the cell order of
    /// [`build_w`](crate::doublecat::build_w).
    pub fn to_functor(&self, d: &FiniteDoubleCategory) -> DoubleFunctor {
        let n = self.n;
        let mut f = DoubleFunctor::default();
        for i in 0..=n {
            for j in i..=n {
                f.obj.push(self.obj(i, j));
            }
        }
        for i in 0..=n {
            for j in i..=n {
                for k in j..=n {
                    f.hor.push(self.hor(d, i, j, k));
                }
            }
        }
        for i in 0..=n {
            for j in i..=n {
                for k in i..=j {
                    f.ver.push(self.ver(d, i, j, k));
                }
            }
        }
        for i in 0..=n {
            for k in i..=n {
                for j in k..=n {
                    for l in j..=n {
                        f.sq.push(self.sq(d, i, k, j, l));
                    }
                }
            }
        }
        f
    }

    /// Boundary and augmentation conditions on the stored generators.
    pub fn check(&self, d: &FiniteDoubleCategory, a: &[usize]) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.n;
        for i in 0..=n {
            if !a.contains(&self.obj(i, i)) {
                out.push(format!("obj({i},{i}) is not in the augmentation"));
            }
            for j in i..=n {
                if j < n {
                    let h = self.hgen(i, j);
                    if d.hor.src[h] != self.obj(i, j) || d.hor.tgt[h] != self.obj(i, j + 1) {
                        out.push(format!("hgen({i},{j}) has the wrong endpoints"));
                    }
                }
                if i < j {
                    let v = self.vgen(i, j);
                    if d.ver.src[v] != self.obj(i, j) || d.ver.tgt[v] != self.obj(i + 1, j) {
                        out.push(format!("vgen({i},{j}) has the wrong endpoints"));
                    }
                }
                if i + 1 <= j && j < n {
                    let q = self.sqgen(i, j);
                    if d.s_v[q] != self.hgen(i, j)
                        || d.t_v[q] != self.hgen(i + 1, j)
                        || d.s_h[q] != self.vgen(i, j)
                        || d.t_h[q] != self.vgen(i, j + 1)
                    {
                        out.push(format!("sqgen({i},{j}) has the wrong boundary"));
                    }
                }
            }
        }
        out
    }
}

/// Stability and augmentation data used to complete grids.
pub(crate) struct Completer<'a> {
    pub d: &'a FiniteDoubleCategory,
    into: Vec<usize>,
    out: Vec<usize>,
    span: HashMap<(usize, usize), usize>,
}

impl<'a> Completer<'a> {
    pub fn new(d: &'a FiniteDoubleCategory, a: &[usize]) -> Result<Self> {
        check_stable(d)?;
        check_augmentation(d, a)?;
        let (into, out) = augmentation_arrows(d, a);
        let span = d.spans().into_iter().map(|(k, v)| (k, v[0])).collect();
        Ok(Completer { d, into, out, span })
    }

    /// The grid of dimension `k + 1` with top row starting at `start` and
    /// continuing along the `k` horizontal morphisms of `string`.
    pub fn complete(&self, start: usize, string: &[usize]) -> Grid {
        let d = self.d;
        let m = string.len() + 1;
        let mut g = Grid::empty(m);
        g.set_obj(0, 1, start);
        for (j, &h) in string.iter().enumerate() {
            g.set_hgen(0, j + 1, h);
            g.set_obj(0, j + 2, d.hor.tgt[h]);
        }
        let first = self.into[start];
        g.set_hgen(0, 0, first);
        g.set_obj(0, 0, d.hor.src[first]);
        for r in 1..=m {
            let v = self.out[g.obj(r - 1, r)];
            g.set_vgen(r - 1, r, v);
            g.set_obj(r, r, d.ver.tgt[v]);
            for l in r + 1..=m {
                let q = self.span[&(g.vgen(r - 1, l - 1), g.hgen(r - 1, l - 1))];
                g.set_sqgen(r - 1, l - 1, q);
                g.set_vgen(r - 1, l, d.t_h[q]);
                g.set_hgen(r, l - 1, d.t_v[q]);
                g.set_obj(r, l, d.hor.tgt[d.t_v[q]]);
            }
        }
        g
    }
}

/// Completes a string of composable horizontal morphisms to a simplex of
/// the S-construction, row by row: the unique vertical arrow from the
/// diagonal into the augmentation, then the unique squares on each span.
/// With an empty string, `start` is the single object of the top row.
pub fn staircase_complete(d: &FiniteDoubleCategory, a: &[usize], start: usize, string: &[usize]) -> Result<Grid> {
    if start >= d.n_objects() {
        return Err(Error::Argument(format!("no object with index {start}")));
    }
    let mut at = start;
    for (k, &h) in string.iter().enumerate() {
        if h >= d.hor.morphisms.len() || d.hor.src[h] != at {
            return Err(Error::Argument(format!("morphism {k} of the string does not continue it")));
        }
        at = d.hor.tgt[h];
    }
    Ok(Completer::new(d, a)?.complete(start, string))
}
