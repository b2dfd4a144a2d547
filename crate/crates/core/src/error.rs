use thiserror::Error;

use crate::format::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^31)")]
    ModulusTooLarge(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed algebra: {0}")]
    Malformed(String),
    #[error("u(L) would have dimension {dim}, above the limit {max} (raise it with --max-dim or RLA_MAX_DIM)")]
    SizeLimit { dim: u128, max: u64 },
    #[error("not a restricted ideal: {0}")]
    NotRestrictedIdeal(String),
    #[error("p-th power of {0} does not lie in the embedded Lie algebra")]
    PowerEscapes(String),
    #[error("theorem inapplicable in characteristic 2")]
    Inapplicable,
    #[error("trace elements do not span the symmetric part in characteristic 2")]
    TraceInCharTwo,
    #[error("bracket sequence length {0} is not a power of two >= 2")]
    BadBracketLength(usize),
    #[error("brute-force budget exceeded: {needed} bracket evaluations > {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown corpus entry `{0}`")]
    UnknownCorpus(String),
    #[error("bad expression `{0}`")]
    BadExpression(String),
}
