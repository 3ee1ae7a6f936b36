//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by root-datum construction, Weyl enumeration and the
/// classification engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested (series, rank) pair is not a simple type.
    #[error("invalid simple type {series}_{rank}")]
    InvalidType { series: char, rank: usize },

    /// Two vectors from different root data (or of different length) were combined.
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    /// A simple index outside `1..=rank`.
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// Exhaustive Weyl-group search refused because the group is too large.
    #[error("search budget exceeded: rank {rank} is above the exhaustive limit {limit}")]
    SearchBudget { rank: usize, limit: usize },

    /// A slope vector that is not a Harder-Narasimhan vector for its parabolic.
    #[error("slope is not a Harder-Narasimhan vector for t(P) = {tp:?}")]
    NotHnVector { tp: Vec<usize> },

    /// A slope target set that does not match the parabolic type.
    #[error("slope targets must be given exactly for the nodes of t(P) = {tp:?}")]
    BadTargets { tp: Vec<usize> },

    /// A Levi subgroup whose Dynkin diagram is not handled by the presentation engine.
    #[error("unsupported Levi: {0}")]
    UnsupportedLevi(String),

    /// An operation that is not defined for the given series tag.
    #[error("operation {op} is not defined for tag {tag}")]
    UnsupportedTag { op: &'static str, tag: String },

    /// A pair of classes that is not one of the folding correspondences.
    #[error("({small}, {big}) is not a folding pair")]
    NotFoldingPair { small: String, big: String },

    /// A GL_n parameter outside its documented range.
    #[error("GL_n parameter out of range: {0}")]
    GlnRange(String),

    /// A configuration passed to a lemma verifier that violates its precondition.
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    /// An internal arithmetic identity failed (for example a mass that should be integral).
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
