//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Operands live in different rings or have mismatched variable counts.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("not a prime: {0}")]
    NotPrime(u64),

    /// A graded operation received an inhomogeneous polynomial.
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),

    /// Generators must have positive degree (the unit ideal is not representable).
    #[error("generator of degree zero: {0}")]
    DegreeZeroGenerator(String),

    #[error("invalid Hilbert numerator: {0}")]
    InvalidNumerator(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("census too large: {count} tuples exceeds budget {budget}")]
    CensusTooLarge { count: String, budget: u64 },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Randomized genericity failed to certify (field too small, or bad luck
    /// past the retry budget).
    #[error("genericity failure: {0}")]
    NonGenericField(String),

    #[error("ideal is not zero-dimensional")]
    PositiveDimensional,

    #[error("point does not lie on the scheme")]
    PointNotOnScheme,

    #[error("monomial ideal is not strongly stable; use the Betti oracle instead")]
    NotStronglyStable,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// A self-check that must always pass has failed; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 input, 3 budget, 4 genericity, 5 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CensusTooLarge { .. } | Error::BudgetExceeded(_) => 3,
            Error::NonGenericField(_) => 4,
            Error::Internal(_) => 5,
            _ => 2,
        }
    }
}
