use alloc::string::String;

use num_bigint::BigInt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("form is not primitive: gcd(a, b, c) = {gcd}")]
    NonPrimitiveForm { gcd: BigInt },
    #[error("square discriminant {0}")]
    SquareDiscriminant(BigInt),
    #[error("invalid discriminant {0}: {1}")]
    InvalidDiscriminant(BigInt, &'static str),
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(BigInt, BigInt),
    #[error("2-Sylow subgroup is not cyclic (divisors {0:?})")]
    NonCyclicTwoPart(alloc::vec::Vec<u64>),
    #[error("requested {requested} convergents but the expansion has only {available} terms")]
    CountExceedsFiniteExpansion { requested: usize, available: usize },
    #[error("continued fraction is not eventually periodic")]
    NotEventuallyPeriodic,
    #[error("no conductor up to {limit} has class number {target}")]
    SearchLimitExceeded { target: u64, limit: u64 },
    #[error("characteristic polynomial is reducible over Q")]
    ReducibleCharPoly,
    #[error("matrix is not primitive (needs nonnegative entries with a strictly positive power)")]
    NotPrimitive,
    #[error("no matrix with the given characteristic polynomial has entries bounded by {0}")]
    BoundTooSmall(u64),
    #[error("value outside the domain: {0}")]
    OutOfDomain(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
