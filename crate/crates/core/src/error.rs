use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division is not exact (first nonzero remainder at degree {degree})")]
    NonDivisible { degree: usize },

    #[error("denominator has zero constant term; not invertible as a power series")]
    ZeroConstantTerm,

    #[error("series tail did not vanish: coefficient {coeff} at degree {degree}")]
    TailNonzero { degree: usize, coeff: BigInt },

    #[error("result has degree {degree}, above the bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("truncation order {order} is below the {required} terms this pipeline needs")]
    InsufficientOrder { order: usize, required: usize },

    #[error("pipelines disagree: {0}")]
    PipelineMismatch(String),

    #[error("the trivial character has no variant part")]
    TrivialCharacter,

    #[error("the identity element has no twisted sector")]
    TrivialElement,

    #[error("bit vectors of length {left} and {right} cannot be paired")]
    LengthMismatch { left: usize, right: usize },

    #[error(
        "mirror identity fails for gamma {gamma}: coefficient of u^{p} v^{q} is {lhs} on the left, {rhs} on the right"
    )]
    IdentityViolation {
        gamma: String,
        p: u32,
        q: u32,
        lhs: BigInt,
        rhs: BigInt,
    },

    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),

    #[error("incompatible Harder-Narasimhan types: {0}")]
    IncompatibleTypes(String),

    #[error("weight profile is empty")]
    EmptyProfile,

    #[error("the two Hilbert-Mumford expressions disagree: {first} vs {second}")]
    ExpressionMismatch { first: BigInt, second: String },

    #[error("Hilbert-Mumford weight {0} is not an integer")]
    NonIntegerWeight(String),

    #[error("Euler characteristic {0} is not positive; increase the twist")]
    NonPositiveEuler(i64),
}

impl Error {
    /// True for failures of a mathematical cross-check, as opposed to bad input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::NonDivisible { .. }
                | Error::TailNonzero { .. }
                | Error::DegreeOverflow { .. }
                | Error::PipelineMismatch(_)
                | Error::IdentityViolation { .. }
                | Error::ExpressionMismatch { .. }
                | Error::NonIntegerWeight(_)
        )
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
