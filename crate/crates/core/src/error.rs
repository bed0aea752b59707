use thiserror::Error;

/// Errors raised by the arithmetic, search and regularity routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    #[error("not an algebraic integer in the power basis")]
    NotIntegral,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("odd prime required, got {0}")]
    OddPrimeRequired(u64),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("decomposition impossible: u / conj(u) = -zeta^{0}")]
    DecompositionImpossible(u64),
    #[error("{p} is irregular; irregular pairs: {}", format_pairs(.pairs))]
    IrregularPrime { p: u64, pairs: Vec<(u64, u64)> },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A computed result failed its own postcondition check.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

fn format_pairs(pairs: &[(u64, u64)]) -> String {
    pairs
        .iter()
        .map(|(p, k)| format!("({p}, {k})"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
