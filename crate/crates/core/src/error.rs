use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid group spec `{0}`: expected C<m>, D<q>, T, O or I")]
    InvalidGroupSpec(String),

    /// Γ = {e}: the algebra contains a copy of the Weyl algebra, so no
    /// finite-dimensional representations exist.
    #[error("the trivial group is unsupported: the algebra contains a copy of the Weyl algebra and has no finite-dimensional representations")]
    TrivialGroup,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A mathematical invariant failed; signals corrupted data or a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
