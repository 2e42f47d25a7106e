use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A quadrature node or grid value evaluated to NaN/inf.
    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    /// An arc is too short for the boundary grid it is paired with.
    #[error(
        "arc of length {arc_length:.6e} is under-resolved: needs at least \
         {min_spacings} grid spacings of {spacing:.6e}"
    )]
    UnderResolved {
        arc_length: f64,
        spacing: f64,
        min_spacings: usize,
    },

    /// An input collection that must be non-empty was empty.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// The input is structurally valid but useless for the requested
    /// computation (e.g. a constant function where a norm must divide).
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
