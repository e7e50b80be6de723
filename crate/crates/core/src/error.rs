use thiserror::Error;

/// Errors surfaced by the library. Everything is exact, so the only failure
/// modes are bad inputs, unsupported geometric shapes, and resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parameters do not describe a knot (two or more even parameters give a
    /// multi-component link).
    #[error("parameters ({0}, {1}, {2}) describe a link, not a knot")]
    NotAKnot(i64, i64, i64),

    /// A parameter was zero or otherwise outside a routine's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The sign of an exactly-nonzero algebraic pivot could not be certified
    /// within the configured precision cap.
    #[error("sign determination undecidable at {bits} bits for {context}")]
    SignUndecidable { bits: u32, context: String },

    /// A satellite evaluation was requested for a cable configuration that no
    /// implemented route supports.
    #[error("unsupported cable shape: {0}")]
    UnsupportedCableShape(String),

    /// A search or enumeration exceeded a configured size cap.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// An internal cross-check between two independent routes failed. This
    /// indicates a bug and is asserted rather than silently ignored.
    #[error("internal cross-check failed: {0}")]
    CrossCheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
