//! Generators for three families of unital 2-Segal sets, together with
//! direct descriptions of their double categories.

mod cobordism;
mod graph;
mod monoid;
mod partial;

pub use cobordism::{
    admitted_cobordisms, cobordism_category, cobordism_double, cobordism_nerve, glue_cobordisms, Circle, Cobordism,
    CobordismCaps, Component,
};
pub use graph::{graph_double, graph_two_segal, Graph, Subgraph};
pub use monoid::{partial_monoid_double, partial_monoid_nerve, validate_partial_monoid, PartialMonoid};
pub use partial::{partial_category_double, partial_nerve, PartialCategory};

use crate::doublecat::FiniteDoubleCategory;
use crate::error::Result;
use crate::simplicial::TruncatedSimplicialSet;

/// Default bound on the number of generated cells.
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// One instance of the three example families.
#[derive(Clone, Debug)]
pub enum Example {
    PartialMonoid(PartialMonoid),
    Graph(Graph),
    Cobordism(CobordismCaps),
}

impl Example {
    /// The 2-Segal set of the example up to level `dim`.
    pub fn two_segal(&self, dim: usize, budget: usize) -> Result<TruncatedSimplicialSet> {
        match self {
            Example::PartialMonoid(m) => {
                let x = partial_monoid_nerve(m, dim)?;
                let total: usize = x.level_sizes().iter().sum();
                if total > budget {
                    return Err(crate::Error::Budget { what: "cells".into(), count: total, limit: budget });
                }
                Ok(x)
            }
            Example::Graph(g) => graph_two_segal(g, dim, budget),
            Example::Cobordism(c) => cobordism_nerve(c, dim, budget),
        }
    }
}

/// The augmented double category of an example, built from its direct
/// description rather than through the path construction.
pub fn expected_double_cat(example: &Example, budget: usize) -> Result<(FiniteDoubleCategory, Vec<usize>)> {
    match example {
        Example::PartialMonoid(m) => partial_monoid_double(m),
        Example::Graph(g) => graph_double(g),
        Example::Cobordism(c) => cobordism_double(c, budget),
    }
}
