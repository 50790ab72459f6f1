//! Error type shared by all modules.

use std::fmt;

/// Errors raised by the algebra modules.
///
/// Mathematical check failures are not errors: checks return reports with a
/// pass flag. `CoreError` covers contract violations (rank mismatches, domain
/// errors) and resource guards (length cutoffs, rewrite budgets).
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Two group elements of different ranks were combined.
    RankMismatch { left: usize, right: usize },
    /// An operation mixed elements of different algebras.
    GroupMismatch(String),
    /// An affine Hecke product produced a basis element longer than the
    /// caller's working cutoff.
    CutoffExceeded { length: usize, cutoff: usize },
    /// The rewrite engine exceeded its step budget.
    BudgetExceeded { steps: usize },
    /// A numeric or combinatorial argument was outside its domain.
    Domain(String),
    /// A textual input could not be parsed.
    Parse(String),
    /// A word expected to be reduced was not.
    NonReducedWord(String),
    /// A generator or window index was out of range.
    IndexOutOfRange { index: usize, bound: usize },
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            CoreError::GroupMismatch(msg) => write!(f, "group mismatch: {msg}"),
            CoreError::CutoffExceeded { length, cutoff } => {
                write!(f, "length cutoff exceeded: element of length {length} with cutoff {cutoff}")
            }
            CoreError::BudgetExceeded { steps } => {
                write!(f, "rewrite budget exceeded after {steps} steps")
            }
            CoreError::Domain(msg) => write!(f, "domain error: {msg}"),
            CoreError::Parse(msg) => write!(f, "parse error: {msg}"),
            CoreError::NonReducedWord(msg) => write!(f, "word is not reduced: {msg}"),
            CoreError::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
        }
    }
}

impl std::error::Error for CoreError {}
