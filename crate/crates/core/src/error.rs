use crate::rational::Rational;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual subsystems; none of them is ever used to paper over an
/// undecided verdict (see [`Error::Inconclusive`]).
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("the zero polynomial admits no root or sign analysis")]
    ZeroPolynomial,

    /// A sign claim is provably false. `witness` is a rational point at
    /// which the polynomial evaluates against the claim, when one exists
    /// (an even-order touch of zero has no rational counterexample).
    #[error("sign claim is false{}", witness_fmt(.witness))]
    ClaimFalse { witness: Option<Rational> },

    #[error("division by an interval containing zero")]
    DivisionByIntervalContainingZero,

    #[error("square root of an interval with a negative endpoint")]
    SqrtOfNegative,

    #[error("target enclosure width {target} unreachable within the iteration cap")]
    PrecisionUnreachable { target: Rational },

    #[error("dimension {0} out of range (1..={max})", max = crate::MAX_DIMENSION)]
    InvalidDimension(usize),

    #[error("constraint system admits only the zero polynomial")]
    Overdetermined,

    #[error("constraint system leaves {dims} degrees of freedom")]
    Underdetermined { dims: usize },

    #[error("degenerate constraint: {0}")]
    DegenerateConstraint(String),

    #[error("certificate sign conditions missing or falsified: {0}")]
    UnverifiedCertificate(String),

    #[error("basis is not provably nonsingular")]
    SingularBasis,

    #[error("matrix is not provably positive definite")]
    NotPositiveDefinite,

    #[error("enumeration exceeds the configured budget")]
    BoundTooLargeForBudget,

    #[error("tail bound does not converge: {0}")]
    TailBoundDiverges(String),

    #[error("proof step falsified: {0}")]
    StepFalsified(String),

    #[error("inconclusive at the precision cap: {0}")]
    Inconclusive(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

fn witness_fmt(w: &Option<Rational>) -> String {
    match w {
        Some(x) => format!(" (witness point {x})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
