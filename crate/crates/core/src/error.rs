use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    /// Malformed textual input (algebra files, module expressions, labels).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Structurally invalid input data: unknown labels, non-parallel
    /// relation terms, relation terms of length < 2, and similar.
    #[error("invalid input: {0}")]
    Input(String),

    /// Completion or basis enumeration exceeded the word-length cap, so the
    /// algebra is not finite-dimensional within the cap.
    #[error("not finite-dimensional within word-length cap {cap}")]
    NotFiniteDimensional { cap: usize },

    /// An operation was asked to combine objects over different algebras
    /// or fields.
    #[error("mismatched algebras or fields: {0}")]
    Mismatch(String),

    /// A documented precondition of an operation does not hold for the
    /// given input (e.g. a vanishing hypothesis fails at a named index).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The operation is defined but not supported for this input class
    /// (e.g. module enumeration over the rationals).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Two independent internal computations of the same value disagreed.
    /// This always indicates a bug in the engine and is never silently
    /// swallowed.
    #[error("internal consistency fault: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
