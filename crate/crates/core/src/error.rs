use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An operation was called outside the range where its statement holds.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration oracle only supports n <= {max} (got {n})")]
    OracleBound { n: u64, max: u64 },

    #[error("dedekind sum needs gcd(h, k) = 1 (got h = {h}, k = {k})")]
    NotCoprime { h: i64, k: u64 },

    #[error("A_{k}({n}) has imaginary residue {residue:e} above tolerance")]
    ImaginaryResidue { k: u64, n: u64, residue: f64 },

    #[error("quadrature did not converge at x = {x} after {levels} levels")]
    Quadrature { x: String, levels: u32 },

    #[error("rademacher series for n = {n} not resolved to the nearest integer within K = {k_max}")]
    NoStabilization { n: u64, k_max: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
