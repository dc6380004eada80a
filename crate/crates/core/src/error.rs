use thiserror::Error;

use crate::qcore::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol `{0}` is not assigned at this point")]
    Unassigned(Symbol),

    #[error("invalid parameter point: {0}")]
    InvalidPoint(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A denominator factor vanished; the point should be resampled.
    #[error("pole: {0}")]
    Pole(String),

    /// Infinite products remained after cancellation.
    #[error("irreducible product quotient: {0}")]
    Irreducible(String),

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
}

impl Error {
    pub fn is_pole(&self) -> bool {
        matches!(self, Error::Pole(_))
    }
}
