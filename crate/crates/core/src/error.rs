//! Error type shared by the whole library.

use thiserror::Error;

/// Everything that can go wrong while building structures or running checks.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A symbol table was given duplicate, empty, or otherwise unusable labels.
    #[error("invalid symbol label: {0}")]
    InvalidLabel(String),

    /// An operation table has the wrong shape or an out-of-range entry.
    #[error("missing or invalid table entry: {0}")]
    MissingEntry(String),

    /// A ternary-product associativity law fails; carries the witnessing tuple.
    #[error("associativity violation: {0}")]
    AssociativityViolation(String),

    /// Crisp ideal predicates require a non-empty subset.
    #[error("subset is empty; ideals must be non-empty")]
    EmptySubset,

    /// An enumeration would exceed the configured bound.
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    /// A grade fell outside [0, 1].
    #[error("grade out of range: {0}")]
    OutOfRange(String),

    /// A grade string could not be parsed.
    #[error("cannot parse grade: {0}")]
    ParseError(String),

    /// Q-fuzzy ideal predicates require a fuzzy subset with non-empty support.
    #[error("fuzzy subset has empty support")]
    EmptyFuzzySubset,

    /// Two-valued fuzzy subsets need alpha <= beta and beta != 0.
    #[error("grade order violation: {0}")]
    GradeOrderViolation(String),

    /// Two fuzzy subsets live over different carriers or Q-sets.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// A check was invoked on inputs that do not meet its hypothesis.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// Operator semigroups need the both-sided structure.
    #[error("operation requires a both-sided gamma-semigroup")]
    RequiresBothSided,

    /// The induced operator multiplication disagreed across representatives.
    #[error("operator multiplication not well-defined: {0}")]
    WellDefinednessViolation(String),

    /// A transfer map was applied to an operator semigroup of the wrong kind.
    #[error("operator kind mismatch: {0}")]
    KindMismatch(String),

    /// A theorem needs a unity that the structure does not have.
    #[error("missing unity: {0}")]
    MissingUnity(String),

    /// `verify` was asked for a theorem id it does not know.
    #[error("unknown theorem: {0}")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
