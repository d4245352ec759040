use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("modulus polynomial {0} is not monic irreducible of the requested degree")]
    NotIrreducible(String),

    #[error("basis matrix is singular over Z_p")]
    SingularBasis,

    #[error("field of size {p}^{r} exceeds the configured cap {cap}")]
    FieldTooLarge { p: u64, r: u32, cap: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("degree {d} outside [1, {q})")]
    DegreeOutOfRange { d: u64, q: u64 },

    #[error("census would need {cells} cells, above the cap {cap}")]
    CensusTooLarge { cells: u128, cap: u64 },

    #[error("{count} coefficient vectors exceed the enumeration cap {cap}")]
    TooManyCoefficientVectors { count: u128, cap: u64 },

    #[error("function shape does not match theorem {theorem}: {reason}")]
    ShapeMismatch { theorem: String, reason: String },

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("vectors are linearly independent; no nontrivial combination exists")]
    NoDependence,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("construction failed verification: {0}")]
    VerificationFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
