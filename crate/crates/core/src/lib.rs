//! Unital 2-Segal sets and augmented stable double categories.
//!
//! The crate stores truncated simplicial sets and finite double categories as
//! indexed tables, checks the Segal-type and stability conditions by exhaustive
//! enumeration, and implements the two constructions relating them: the
//! discrete Waldhausen construction `S` (see [`equivalence::sdot`]) and the
//! path construction `P` (see [`equivalence::path_double_cat`]), together with
//! the unit and counit comparing `X` with `S(P X)` and `P(S D)` with `D`.
//!
//! Three families of examples are generated in [`examples`]: nerves of partial
//! monoids, the 2-Segal set of a graph, and a capped combinatorial model of
//! two-dimensional cobordisms with a genus bound.

pub mod doublecat;
pub mod equivalence;
pub mod error;
pub mod examples;
pub mod io;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};
pub use report::{Outcome, Report, Verdict, Witness, WitnessKind};

/// Canonical identifier for an ordered tuple of identifiers.
///
/// The encoding is a JSON array of strings, so it is injective and nests
/// without ambiguity.
pub fn tuple_key<S: AsRef<str>>(parts: &[S]) -> String {
    let v: Vec<&str> = parts.iter().map(|s| s.as_ref()).collect();
    serde_json::to_string(&v).expect("string arrays always serialize")
}

/// Inverse of [`tuple_key`]; `None` when `key` is not such an encoding.
pub fn parse_tuple_key(key: &str) -> Option<Vec<String>> {
    serde_json::from_str(key).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_keys_round_trip_and_nest() {
        let inner = tuple_key(&["a", "b,c"]);
        let outer = tuple_key(&[inner.as_str(), "]"]);
        let back = parse_tuple_key(&outer).unwrap();
        assert_eq!(back[0], inner);
        assert_eq!(parse_tuple_key(&back[0]).unwrap(), vec!["a", "b,c"]);
        assert_ne!(tuple_key(&["ab"]), tuple_key(&["a", "b"]));
        assert_eq!(parse_tuple_key(&tuple_key::<&str>(&[])).unwrap().len(), 0);
    }
}
