use crate::report::Witness;

/// Errors raised by constructions; property failures of checkers are reported
/// as [`Witness`] values instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    /// Structural problems in input data: non-total tables, unknown or
    /// duplicate identifiers.
    #[error("malformed structure: {0}")]
    Malformed(String),
    /// A required property (2-Segal, stable, ...) does not hold.
    #[error("precondition failed: {0}")]
    Precondition(Box<Witness>),
    /// Prescribed data that cannot be extended or matched consistently.
    #[error("incompatible data: {0}")]
    Incompatible(String),
    #[error("enumeration budget exceeded: {what} reached {count} (limit {limit})")]
    Budget {
        what: String,
        count: usize,
        limit: usize,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<Witness> for Error {
    fn from(w: Witness) -> Self {
        Error::Precondition(Box::new(w))
    }
}
