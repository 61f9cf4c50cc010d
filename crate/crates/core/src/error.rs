use thiserror::Error;

use crate::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {b} is outside 1..{r} for a point of index {r}")]
    WeightOutOfRange { r: i64, b: i64 },

    #[error("1/{r}(1,{a},{b}) is not terminal: gcd({b}, {r}) = {g}", a = .r - .b)]
    NotTerminal { r: i64, b: i64, g: i64 },

    #[error("Fano index {q} is not coprime to local index {r}")]
    NotCoprime { q: u32, r: u32 },

    #[error("-K.c2 = {0} is not positive")]
    NonPositiveKc2(Rational),

    #[error("A^3 = {0} is not positive")]
    NonPositiveVolume(Rational),

    #[error("chi({t}A) = {value} is not an integer")]
    NonIntegralChi { t: i64, value: Rational },

    #[error("chi({t}A) = {value} is negative")]
    NegativeChi { t: i64, value: Rational },

    #[error("index {0} is too small for this computation")]
    IndexTooSmall(u32),

    #[error("del Pezzo degree {0} is outside 1..=6")]
    DegreeOutOfRange(u32),

    #[error("weight system {0:?} is not well formed")]
    NotWellFormed(Vec<u32>),

    #[error("weight system {0:?} has a singular edge or is not a 3-fold ambient")]
    NonIsolated(Vec<u32>),

    #[error("invalid graded format: {0}")]
    InvalidFormat(String),

    #[error("numerator does not vanish to order {expected} at t = 1")]
    DimensionMismatch { expected: usize },

    #[error("degree {0} after a ledger step is not positive")]
    NonPositiveDegree(Rational),

    #[error("invalid ledger step: {0}")]
    InvalidStep(String),

    #[error(
        "A^3 from the index formula ({suzuki}) differs from the vanishing solution ({vanishing})"
    )]
    FormulaMismatch {
        suzuki: Rational,
        vanishing: Rational,
    },

    #[error("argument out of range: {0}")]
    OutOfDomain(String),

    #[error("parse error: {0}")]
    Parse(String),
}
