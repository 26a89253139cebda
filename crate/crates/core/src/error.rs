use thiserror::Error;

/// Errors reported by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("torus knot parameters must both be at least 2, got ({p}, {q})")]
    TorusParameterTooSmall { p: u64, q: u64 },

    #[error("generators must have gcd 1, got gcd {gcd}")]
    GeneratorsNotCoprime { gcd: u64 },

    #[error("generator set must be non-empty and contain only positive integers")]
    InvalidGenerators,

    #[error(
        "image is not gap-symmetric: exactly one of {m} and {mirror} lies in the image; \
         not the semigroup of an L-space knot"
    )]
    NotGapSymmetric { m: u64, mirror: u64 },

    #[error(
        "not an L-space knot polynomial: partial sum {sum} at degree {degree} is outside {{0, 1}}"
    )]
    NotStaircase { degree: usize, sum: i64 },

    #[error("invalid Alexander exponent list: {reason}")]
    InvalidAlexanderVector { reason: String },

    #[error("invalid enumerating-function prefix: {reason}")]
    InvalidPrefix { reason: String },

    #[error("invalid V-sequence: {reason}")]
    InvalidVSequence { reason: String },

    #[error("index {m} exceeds V_0 = {v0}; the closed form is only valid for m <= V_0")]
    IndexAboveVZero { m: u64, v0: u64 },

    #[error("surgery coefficient must be positive, got {n}")]
    NonPositiveSurgery { n: u64 },

    #[error("truncation {n} is too small, need at least {required}")]
    TruncationTooSmall { n: u64, required: u64 },

    #[error("no homology class has U-order at least {threshold}; raise the truncation")]
    AmbiguousTower { threshold: u64 },

    #[error("computed V-value {v} reaches the tower threshold {threshold}; raise the truncation")]
    TruncationUnstable { v: u64, threshold: u64 },

    #[error("a deformation needs a non-negative genus budget: delta {delta_central} < {delta_perturbed}")]
    NegativeGenusBudget {
        delta_central: u64,
        delta_perturbed: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
