use thiserror::Error;

/// Errors raised by constructors, conversions and enumerators.
///
/// Validators themselves return `bool`; an `Err` always means the input could
/// not be interpreted as the requested object at all, or a resource cap was
/// hit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input does not have the shape of the requested object.
    #[error("shape error: {0}")]
    Shape(String),

    /// A 1-based index fell outside the object and outside the empty-range
    /// conventions.
    #[error("index out of range: {0}")]
    Index(String),

    /// A well-shaped input failed the family's validity conditions.
    #[error("invalid {family}: {reason}")]
    Invalid {
        family: &'static str,
        reason: String,
    },

    /// Exhaustive work beyond the supported size.
    #[error("{family} of size {requested} exceeds the enumeration cap {cap}")]
    CapExceeded {
        family: &'static str,
        requested: usize,
        cap: usize,
    },

    /// Arguments outside a formula's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Contradiction found while rebuilding an object from partial data.
    #[error("contradiction: {0}")]
    Contradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}

pub(crate) fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::Invalid {
        family,
        reason: reason.into(),
    }
}
