use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("unknown preset `{0}` (expected one of: as, two_as, as_2)")]
    UnknownPreset(String),

    #[error("relators are linearly dependent")]
    DependentRelators,

    #[error("generator sets differ")]
    GeneratorMismatch,

    #[error("expected {expected} generators, found {found}")]
    GeneratorCount { expected: usize, found: usize },

    #[error("leading term of relator {0} cancelled during inter-reduction")]
    LeadingTermCancelled(usize),

    #[error("rewrite budget of {0} steps exhausted")]
    RewriteBudget(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
