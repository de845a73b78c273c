use thiserror::Error;

/// Errors surfaced by the kernel. Everything here is a caller-visible
/// contract violation; internal invariant breaches panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("extended gcd of two zero polynomials is undefined")]
    BothPolynomialsZero,

    #[error("factors are not pairwise coprime: gcd({left}, {right}) = {gcd}")]
    NonCoprimeFactors {
        left: String,
        right: String,
        gcd: String,
    },

    #[error("factored polynomial must be nonconstant with monic, nonconstant factors")]
    InvalidFactorization,

    #[error("q({lambda}) = 0: the linear factor x - {lambda} divides q")]
    FactorNotCoprimeAtRoot { lambda: String },

    #[error("composed projector is not idempotent; the supplied operators do not commute")]
    NonCommutingOperators,

    #[error("word length {got} does not match the requested level {expected}")]
    WordLengthMismatch { expected: usize, got: usize },

    #[error(
        "step precondition violated: input is not annihilated by the level-{level} Casimir factor"
    )]
    StepPrecondition { level: u32 },

    #[error("element degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    #[error("spin label 2s = {two_s} exceeds the configured cap {cap}")]
    SpinCapExceeded { two_s: u32, cap: u32 },

    #[error("singular reduction system in the degree-{degree} sector")]
    SingularReduction { degree: u32 },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid rational literal {literal:?}")]
    BadRational { literal: String },

    #[error("invalid serialized table: {0}")]
    BadTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
