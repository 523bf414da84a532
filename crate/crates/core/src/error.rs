use thiserror::Error;

/// Errors produced by the lattice routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("degenerate tetrahedron (vertices are coplanar)")]
    Degenerate,

    #[error("vectors are linearly dependent")]
    DependentPair,

    #[error("face pair not primitive (gcd of cross product is {0})")]
    NotPrimitive(i64),

    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(i64),

    #[error("invalid canonical parameters a={a}, b={b}, c={c}: need c >= 1 and 0 <= a,b < c")]
    InvalidForm { a: i64, b: i64, c: i64 },

    #[error("form ({a},{b},{c}) is not clean")]
    NotClean { a: i64, b: i64, c: i64 },

    #[error("not normalizable (non-clean)")]
    NotNormalizable,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle scan of {0} lattice points exceeds the limit")]
    OracleTooLarge(u128),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
