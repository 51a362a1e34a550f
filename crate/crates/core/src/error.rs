use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed lattice presentation or term (unknown generator, duplicate names).
    #[error("presentation error: {0}")]
    Presentation(String),
    /// An enumeration would exceed the configured capacity.
    #[error("capacity exceeded: {what} ({got} > {limit})")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    /// A structural check failed (nonzero boundary composite, bad gluing, ...).
    #[error("invalid: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("oracle failure: {0}")]
    Oracle(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
