//! Error taxonomy shared by every module and surfaced verbatim by the CLI.

use thiserror::Error;

use crate::gf2ring::RingError;

/// Failure modes of the mathematical operations.
///
/// Each variant corresponds to a violated precondition with a precise
/// arithmetic meaning; `Validation` covers malformed inputs that never reach
/// the arithmetic layer.
#[derive(Debug, Clone, Error)]
pub enum MathError {
    /// A supercharacter decomposition did not land in the integers
    /// (the input is not the character vector of any representation of C_2^n).
    #[error("NonIntegral: {0}")]
    NonIntegral(String),
    /// A multiplicity came out negative and virtual inputs were not allowed.
    #[error("NegativeMultiplicity: {0}")]
    NegativeMultiplicity(String),
    /// q = 1 (mod 4) requires every multiplicity c_i, i >= 1, to be even.
    #[error("OddMultiplicity: {0}")]
    OddMultiplicity(String),
    /// A divisibility assumption on character invariants failed
    /// (m_pi/2, n_pi/4 and friends).
    #[error("InconsistentParity: {0}")]
    InconsistentParity(String),
    /// A principal-series exponent multiset is not closed under negation.
    #[error("NotReal: {0}")]
    NotReal(String),
    /// Square-root extraction met an odd exponent.
    #[error("NotAPerfectSquare: {0}")]
    NotAPerfectSquare(String),
    /// The character value is not determined by the stated formulas
    /// (cuspidal h_k with 2 <= k <= n-1 and n >= 3).
    #[error("UnsupportedCharacterValue: {0}")]
    UnsupportedCharacterValue(String),
    /// Structurally invalid input (bad ranks, bad q, schema violations).
    #[error("validation: {0}")]
    Validation(String),
}

impl MathError {
    /// Stable taxonomy name, as printed on stderr by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            MathError::NonIntegral(_) => "NonIntegral",
            MathError::NegativeMultiplicity(_) => "NegativeMultiplicity",
            MathError::OddMultiplicity(_) => "OddMultiplicity",
            MathError::InconsistentParity(_) => "InconsistentParity",
            MathError::NotReal(_) => "NotReal",
            MathError::NotAPerfectSquare(_) => "NotAPerfectSquare",
            MathError::UnsupportedCharacterValue(_) => "UnsupportedCharacterValue",
            MathError::Validation(_) => "validation",
        }
    }

    /// True for genuine mathematical inconsistencies, false for plain
    /// input-validation failures.
    pub fn is_mathematical(&self) -> bool {
        !matches!(self, MathError::Validation(_))
    }
}

impl From<RingError> for MathError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::NotAPerfectSquare(d) => MathError::NotAPerfectSquare(d),
            other => MathError::Validation(other.to_string()),
        }
    }
}
