use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient bound must be at least 1, got {0}")]
    InvalidBound(usize),

    #[error("index {index} lies outside [0, {}]", .n - 1)]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("modulus {0} exceeds the supported maximum of 65521")]
    ModulusTooLarge(u32),

    #[error("operands live over different fields (F_{left} vs F_{right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("operands have different truncation bounds ({left} vs {right})")]
    BoundMismatch { left: usize, right: usize },

    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("span does not contain 1")]
    NotUnital,

    #[error("product of basis elements with valuations {left} and {right} escapes the span")]
    ClosureViolation { left: usize, right: usize },

    #[error("codimension {c} out of range for n = {n} (expected 1..={})", .n.saturating_sub(1))]
    CodimensionOutOfRange { n: usize, c: usize },

    #[error("not a partial monoid: {0}")]
    NotPartialMonoid(String),

    #[error("{what} is infeasible at p = {p}, n = {n}; pass force to override")]
    Infeasible {
        what: &'static str,
        p: u32,
        n: usize,
    },

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error("claim violated: {0}")]
    ClaimViolated(String),

    #[error("unsupported argument: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
