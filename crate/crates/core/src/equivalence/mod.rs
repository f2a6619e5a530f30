//! The S-construction, the path construction, and the unit and counit
//! relating them.

mod grid;
mod path;
mod sdot;
mod unit;

pub use grid::{staircase_complete, Grid};
pub use path::{path_double_cat, path_on_map};
pub use sdot::{sdot, sdot_on_functor, sdot_oracle_check, Sdot};
pub use unit::{epsilon, epsilon_naturality, eta, eta_grid, eta_naturality, roundtrip_check, RoundtripInput};

/// Alias used by callers that only read the verdicts of a round trip.
pub type EquivalenceReport = crate::report::Report;
