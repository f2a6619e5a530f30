use super::partial::{partial_category_double, partial_nerve, PartialCategory};
use crate::doublecat::FiniteDoubleCategory;
use crate::error::{Error, Result};
use crate::simplicial::TruncatedSimplicialSet;
use crate::tuple_key;
use std::collections::HashMap;

/// A finite partial monoid: a unit and a product defined on a subset of
/// pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialMonoid {
    pub elements: Vec<String>,
    pub unit: usize,
    pub products: HashMap<(usize, usize), usize>,
}

impl PartialMonoid {
    /// Builds a partial monoid from element names and product triples
    /// `(a, b, ab)`. Unit products are not added implicitly.
    pub fn new<S: AsRef<str>>(elements: &[S], unit: &str, products: &[(S, S, S)]) -> Result<PartialMonoid> {
        let elements: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> = elements.iter().enumerate().map(|(k, e)| (e.as_str(), k)).collect();
        if index.len() != elements.len() {
            return Err(Error::Malformed("duplicate element".into()));
        }
        let look = |e: &str| index.get(e).copied().ok_or_else(|| Error::Malformed(format!("unknown element {e:?}")));
        let unit = look(unit)?;
        let mut table = HashMap::new();
        for (a, b, c) in products {
            let key = (look(a.as_ref())?, look(b.as_ref())?);
            let c = look(c.as_ref())?;
            if table.insert(key, c).is_some_and(|old| old != c) {
                return Err(Error::Malformed(format!("two products for ({}, {})", a.as_ref(), b.as_ref())));
            }
        }
        Ok(PartialMonoid { elements, unit, products: table })
    }

    /// Adds the unit products `1m = m1 = m` to a table listing only the
    /// others.
    pub fn with_units<S: AsRef<str>>(elements: &[S], unit: &str, products: &[(S, S, S)]) -> Result<PartialMonoid> {
        let mut m = PartialMonoid::new(elements, unit, products)?;
        for x in 0..m.elements.len() {
            m.products.insert((m.unit, x), x);
            m.products.insert((x, m.unit), x);
        }
        Ok(m)
    }

    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        self.products.get(&(a, b)).copied()
    }

    pub fn is_total(&self) -> bool {
        self.products.len() == self.elements.len() * self.elements.len()
    }

    /// The one-object partial category with the elements as morphisms.
    pub fn to_partial_category(&self) -> PartialCategory {
        PartialCategory {
            objects: vec![tuple_key::<&str>(&[])],
            morphisms: self.elements.clone(),
            src: vec![0; self.elements.len()],
            tgt: vec![0; self.elements.len()],
            identity: vec![self.unit],
            compose: self.products.clone(),
        }
    }
}

/// Problems with the unit laws and the associativity condition; empty for a
/// valid partial monoid.
pub fn validate_partial_monoid(m: &PartialMonoid) -> Vec<String> {
    let n = m.elements.len();
    if m.unit >= n || m.products.iter().any(|(&(a, b), &c)| a >= n || b >= n || c >= n) {
        return vec!["element index out of range".into()];
    }
    let name = |x: usize| m.elements[x].as_str();
    let mut out = Vec::new();
    for x in 0..n {
        if m.product(m.unit, x) != Some(x) || m.product(x, m.unit) != Some(x) {
            out.push(format!("unit law fails at {}", name(x)));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = m.product(a, b).and_then(|ab| m.product(ab, c));
                let right = m.product(b, c).and_then(|bc| m.product(a, bc));
                if left != right {
                    out.push(format!("associativity fails at ({}, {}, {})", name(a), name(b), name(c)));
                }
            }
        }
    }
    out
}

/// The nerve of a partial monoid up to level `dim`: composable tuples,
/// identified by [`tuple_key`] of their entries.
pub fn partial_monoid_nerve(m: &PartialMonoid, dim: usize) -> Result<TruncatedSimplicialSet> {
    let problems = validate_partial_monoid(m);
    if !problems.is_empty() {
        return Err(Error::Malformed(problems.join("; ")));
    }
    partial_nerve(&m.to_partial_category(), dim, usize::MAX)
}

/// The double category of a partial monoid, pointed by the unit.
pub fn partial_monoid_double(m: &PartialMonoid) -> Result<(FiniteDoubleCategory, Vec<usize>)> {
    let problems = validate_partial_monoid(m);
    if !problems.is_empty() {
        return Err(Error::Malformed(problems.join("; ")));
    }
    partial_category_double(&m.to_partial_category())
}
