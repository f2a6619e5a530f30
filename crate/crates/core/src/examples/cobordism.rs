use super::partial::{partial_category_double, partial_nerve, PartialCategory};
use crate::doublecat::FiniteDoubleCategory;
use crate::error::{Error, Result};
use crate::simplicial::TruncatedSimplicialSet;
use std::collections::HashMap;
use std::fmt;

/// A labeled boundary circle of a cobordism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Circle {
    In(usize),
    Out(usize),
}

/// A connected component with nonempty boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub circles: Vec<Circle>,
    pub genus: usize,
}

/// A cobordism up to diffeomorphism relative to its labeled boundary: the
/// components meeting the boundary, each with its circles and genus, and
/// the genera of the closed components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cobordism {
    pub n_in: usize,
    pub n_out: usize,
    pub components: Vec<Component>,
    pub closed: Vec<usize>,
}

impl Cobordism {
    /// Sorts circles, components and closed genera, and checks that the
    /// components partition the boundary.
    pub fn new(n_in: usize, n_out: usize, components: Vec<Component>, closed: Vec<usize>) -> Result<Cobordism> {
        let mut c = Cobordism { n_in, n_out, components, closed };
        c.normalize();
        let mut seen: Vec<Circle> = c.components.iter().flat_map(|k| k.circles.iter().copied()).collect();
        seen.sort();
        let expected: Vec<Circle> = (0..n_in).map(Circle::In).chain((0..n_out).map(Circle::Out)).collect();
        if seen != expected || c.components.iter().any(|k| k.circles.is_empty()) {
            return Err(Error::Malformed(format!("components of {c} do not partition the boundary")));
        }
        Ok(c)
    }

    fn normalize(&mut self) {
        for k in &mut self.components {
            k.circles.sort();
        }
        self.components.sort();
        self.closed.sort();
    }

    pub fn cylinder(k: usize) -> Cobordism {
        let components = (0..k).map(|i| Component { circles: vec![Circle::In(i), Circle::Out(i)], genus: 0 }).collect();
        Cobordism { n_in: k, n_out: k, components, closed: Vec::new() }
    }

    /// The connected genus-`g` cobordism from `n_in` to `n_out` circles.
    pub fn connected(n_in: usize, n_out: usize, genus: usize) -> Cobordism {
        let circles = (0..n_in).map(Circle::In).chain((0..n_out).map(Circle::Out)).collect();
        Cobordism { n_in, n_out, components: vec![Component { circles, genus }], closed: Vec::new() }
    }

    pub fn pants() -> Cobordism {
        Cobordism::connected(1, 2, 0)
    }

    pub fn copants() -> Cobordism {
        Cobordism::connected(2, 1, 0)
    }

    /// Disjoint union, with the circles of `other` numbered after those of
    /// `self`.
    pub fn disjoint(&self, other: &Cobordism) -> Cobordism {
        let shift = |c: Circle| match c {
            Circle::In(i) => Circle::In(i + self.n_in),
            Circle::Out(i) => Circle::Out(i + self.n_out),
        };
        let mut out = self.clone();
        out.n_in += other.n_in;
        out.n_out += other.n_out;
        out.components.extend(other.components.iter().map(|k| Component {
            circles: k.circles.iter().map(|&c| shift(c)).collect(),
            genus: k.genus,
        }));
        out.closed.extend(&other.closed);
        out.normalize();
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        let open: i64 = self.components.iter().map(|k| 2 - 2 * k.genus as i64 - k.circles.len() as i64).sum();
        let closed: i64 = self.closed.iter().map(|&g| 2 - 2 * g as i64).sum();
        open + closed
    }

    pub fn max_genus(&self) -> usize {
        self.components.iter().map(|k| k.genus).chain(self.closed.iter().copied()).max().unwrap_or(0)
    }
}

impl fmt::Display for Cobordism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.n_in, self.n_out)?;
        for k in &self.components {
            let names: Vec<String> = k
                .circles
                .iter()
                .map(|c| match c {
                    Circle::In(i) => format!("i{i}"),
                    Circle::Out(i) => format!("o{i}"),
                })
                .collect();
            write!(f, "[{}:{}]", names.join(" "), k.genus)?;
        }
        for g in &self.closed {
            write!(f, "({g})")?;
        }
        Ok(())
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Glues the outgoing circles of `a` to the incoming circles of `b`.
///
/// Components meeting along a circle are merged; the genus of a merged
/// component is read off from `chi = 2 - 2g - b`, with `chi` the sum over
/// the pieces.
pub fn glue_cobordisms(a: &Cobordism, b: &Cobordism) -> Result<Cobordism> {
    if a.n_out != b.n_in {
        return Err(Error::Argument(format!("cannot glue {a} to {b}: {} outgoing vs {} incoming circles", a.n_out, b.n_in)));
    }
    let na = a.components.len();
    let mut parent: Vec<usize> = (0..na + b.components.len()).collect();
    let mut holder_a = vec![0; a.n_out];
    for (k, c) in a.components.iter().enumerate() {
        for circle in &c.circles {
            if let Circle::Out(i) = circle {
                holder_a[*i] = k;
            }
        }
    }
    for (k, c) in b.components.iter().enumerate() {
        for circle in &c.circles {
            if let Circle::In(i) = circle {
                let (x, y) = (find(&mut parent, holder_a[*i]), find(&mut parent, na + k));
                parent[x] = y;
            }
        }
    }
    let mut groups: HashMap<usize, (i64, Vec<Circle>)> = HashMap::new();
    for (k, c) in a.components.iter().chain(&b.components).enumerate() {
        let root = find(&mut parent, k);
        let entry = groups.entry(root).or_insert((0, Vec::new()));
        entry.0 += 2 - 2 * c.genus as i64 - c.circles.len() as i64;
        let boundary = c.circles.iter().filter(|&&circle| match circle {
            Circle::In(_) => k < na,
            Circle::Out(_) => k >= na,
        });
        entry.1.extend(boundary);
    }
    let mut components = Vec::new();
    let mut closed: Vec<usize> = a.closed.iter().chain(&b.closed).copied().collect();
    for (chi, circles) in groups.into_values() {
        let twice = 2 - chi - circles.len() as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::Internal(format!("gluing {a} to {b} gives Euler characteristic {chi}")));
        }
        let genus = (twice / 2) as usize;
        if circles.is_empty() {
            closed.push(genus);
        } else {
            components.push(Component { circles, genus });
        }
    }
    let mut out = Cobordism { n_in: a.n_in, n_out: b.n_out, components, closed };
    out.normalize();
    Ok(out)
}

/// Bounds on the cobordisms that are kept: boundary circle counts, number of
/// closed components and genus of every component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CobordismCaps {
    pub max_circles: usize,
    pub max_components: usize,
    pub genus: usize,
}

impl CobordismCaps {
    pub fn admits(&self, c: &Cobordism) -> bool {
        c.n_in <= self.max_circles
            && c.n_out <= self.max_circles
            && c.closed.len() <= self.max_components
            && c.max_genus() <= self.genus
    }

    /// Whether a string of cobordisms is a cell: consecutive pieces match,
    /// every intermediate circle count is within the cap, and the composite
    /// is admitted.
    pub fn admits_chain(&self, pieces: &[Cobordism]) -> bool {
        let Some(first) = pieces.first() else { return false };
        let mut total = first.clone();
        if total.n_in > self.max_circles {
            return false;
        }
        for p in &pieces[1..] {
            if total.n_out > self.max_circles {
                return false;
            }
            match glue_cobordisms(&total, p) {
                Ok(t) => total = t,
                Err(_) => return false,
            }
        }
        self.admits(&total)
    }
}

/// All set partitions of `items`.
fn set_partitions<T: Copy>(items: &[T]) -> Vec<Vec<Vec<T>>> {
    let Some((&last, rest)) = items.split_last() else { return vec![Vec::new()] };
    let mut out = Vec::new();
    for p in set_partitions(rest) {
        for k in 0..p.len() {
            let mut q = p.clone();
            q[k].push(last);
            out.push(q);
        }
        let mut q = p;
        q.push(vec![last]);
        out.push(q);
    }
    out
}

/// Nondecreasing sequences of length `len` with entries at most `max`.
fn multisets(len: usize, max: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in multisets(len - 1, max) {
        let lo = s.last().copied().unwrap_or(0);
        for g in lo..=max {
            let mut t = s.clone();
            t.push(g);
            out.push(t);
        }
    }
    out
}

/// Every cobordism admitted by `caps`, sorted.
pub fn admitted_cobordisms(caps: &CobordismCaps, budget: usize) -> Result<Vec<Cobordism>> {
    let mut closed = Vec::new();
    for k in 0..=caps.max_components {
        closed.extend(multisets(k, caps.genus));
    }
    let mut out = Vec::new();
    for n_in in 0..=caps.max_circles {
        for n_out in 0..=caps.max_circles {
            let circles: Vec<Circle> = (0..n_in).map(Circle::In).chain((0..n_out).map(Circle::Out)).collect();
            for p in set_partitions(&circles) {
                // every assignment of genera to the blocks
                let mut genera = vec![0; p.len()];
                loop {
                    for cl in &closed {
                        let components = p
                            .iter()
                            .zip(&genera)
                            .map(|(b, &genus)| Component { circles: b.clone(), genus })
                            .collect();
                        let mut c = Cobordism { n_in, n_out, components, closed: cl.clone() };
                        c.normalize();
                        out.push(c);
                        if out.len() > budget {
                            return Err(Error::Budget { what: "cobordisms".into(), count: out.len(), limit: budget });
                        }
                    }
                    let Some(k) = genera.iter().position(|&g| g < caps.genus) else { break };
                    genera[k] += 1;
                    for g in &mut genera[..k] {
                        *g = 0;
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The capped cobordism category as a partial category: objects are circle
/// counts, morphisms the admitted cobordisms, and a composite is defined
/// when it is admitted.
pub fn cobordism_category(caps: &CobordismCaps, budget: usize) -> Result<PartialCategory> {
    let cobs = admitted_cobordisms(caps, budget)?;
    let mut by_in = vec![Vec::new(); caps.max_circles + 1];
    let mut by_out = vec![0usize; caps.max_circles + 1];
    for (k, c) in cobs.iter().enumerate() {
        by_in[c.n_in].push(k);
        by_out[c.n_out] += 1;
    }
    let pairs: usize = (0..=caps.max_circles).map(|k| by_out[k].saturating_mul(by_in[k].len())).sum();
    if pairs > budget {
        return Err(Error::Budget { what: "composable pairs".into(), count: pairs, limit: budget });
    }
    let index: HashMap<&Cobordism, usize> = cobs.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let mut compose = HashMap::new();
    for (f, a) in cobs.iter().enumerate() {
        for &g in &by_in[a.n_out] {
            let c = glue_cobordisms(a, &cobs[g])?;
            if caps.admits(&c) {
                compose.insert((f, g), index[&c]);
            }
        }
    }
    let identity = (0..=caps.max_circles).map(|k| index[&Cobordism::cylinder(k)]).collect();
    Ok(PartialCategory {
        objects: (0..=caps.max_circles).map(|k| k.to_string()).collect(),
        morphisms: cobs.iter().map(|c| c.to_string()).collect(),
        src: cobs.iter().map(|c| c.n_in).collect(),
        tgt: cobs.iter().map(|c| c.n_out).collect(),
        identity,
        compose,
    })
}

/// The capped cobordism 2-Segal set up to level `dim`: level 0 is the circle
/// counts, level `k` the strings of `k` cobordisms whose composite is
/// admitted by `caps`.
pub fn cobordism_nerve(caps: &CobordismCaps, dim: usize, budget: usize) -> Result<TruncatedSimplicialSet> {
    partial_nerve(&cobordism_category(caps, budget)?, dim, budget)
}

/// The double category of the capped cobordism set, augmented by the
/// cylinders.
pub fn cobordism_double(caps: &CobordismCaps, budget: usize) -> Result<(FiniteDoubleCategory, Vec<usize>)> {
    partial_category_double(&cobordism_category(caps, budget)?)
}
