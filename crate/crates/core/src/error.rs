use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring must have at least one variable")]
    EmptyRing,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("objects live in different rings ({left} vs {right} variables)")]
    MixedRings { left: usize, right: usize },
    #[error("exponent overflow")]
    Overflow,
    #[error("power must be positive, got {0}")]
    NonPositivePower(u32),
    #[error("colon by the zero ideal is undefined")]
    ColonByZero,
    #[error("the unit ideal has no minimal primes")]
    UnitIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("face {0} is not in the complex")]
    FaceNotInComplex(String),
    #[error("small complex is not a subcomplex of the big complex")]
    NotSubcomplex,
    #[error("complexes live on different vertex sets ({0} vs {1})")]
    GroundMismatch(usize, usize),
    #[error("denominator ideal is not contained in numerator ideal")]
    NotContained,
    #[error("the quotient is the zero module")]
    ZeroQuotient,
    #[error("multidegree has {got} entries, ring has {expected} variables")]
    DegreeLength { expected: usize, got: usize },
    #[error("negative supports differ: shift changes G_a from {from} to {to}")]
    NegativeSupportChanged { from: String, to: String },
    #[error("shift must be nonnegative")]
    NegativeShift,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("graph has a loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    /// A cross-check between two independent computations, or a theorem shadow, failed.
    #[error("invariant violated [{check}]: {detail}")]
    Invariant { check: &'static str, detail: String },
}

impl Error {
    pub(crate) fn invariant(check: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            check,
            detail: detail.into(),
        }
    }

    /// True for failures of internal cross-checks (as opposed to bad input).
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant { .. })
    }
}
