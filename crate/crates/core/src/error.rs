use crate::game::Square;
use thiserror::Error;

/// Errors from constructing or manipulating game positions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("permutation list is empty")]
    EmptyPermutationList,
    #[error("permutation size {found} does not match board size {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("at most 64 token labels are supported, got {0}")]
    TooManyLabels(usize),
    #[error("no region with identifier {0}")]
    UnknownRegion(Square),
    #[error("label {label} out of range 1..={max}")]
    LabelOutOfRange { label: usize, max: usize },
    #[error("square pair ({i},{j}) is not a valid board pair for n={n}")]
    BadPair { i: usize, j: usize, n: usize },
    #[error("split subset is not the trace of an ideal set on region {region}")]
    NotIdealTrace { region: Square },
    #[error("split subset must be a nonempty proper subset of the region")]
    DegenerateSplit,
    #[error("relabel source {from} and target {to} must be distinct labels in range")]
    BadRelabel { from: usize, to: usize },
    #[error("relabel requires every {from}-token to sit alone in a one-square region; {square} violates this")]
    RelabelNotIsolated { from: usize, square: Square },
    #[error("relabel would place two {to}-tokens on {square}")]
    RelabelCollision { to: usize, square: Square },
}

/// Errors from parsing text inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid permutation entry {0:?}")]
    BadPermutationEntry(String),
    #[error("sequence is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("01-string must be nonempty and contain only 0 and 1: {0:?}")]
    BadZeroOneString(String),
    #[error("partition rows must be weakly increasing: {0:?}")]
    NotWeaklyIncreasing(String),
    #[error("invalid integer {0:?}")]
    BadInteger(String),
}

/// Errors from assembling a Grassmannian problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("need at least one sigma string")]
    NoSigmas,
    #[error("all 01-strings must share the same length, got {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("all 01-strings must share the same number of ones, got {0} and {1}")]
    OnesMismatch(usize, usize),
}

/// A reason the Grassmannian winning algorithm could not run to completion.
///
/// Each variant points at the blocking token or square. These only occur when
/// the column shift is too small for the algorithm's invariants to hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrgaError {
    #[error("game position does not have the three-class structure expected by the algorithm")]
    BadPosition,
    #[error("picture is not a valid bijection between the token shape and the empty skew shape")]
    BadPicture,
    #[error("token at {token} is not strictly left of empty skew square {square} in its row; the shift N is too small")]
    TokenNotLeftOfSquare { token: Square, square: Square },
    #[error("token at {token} sits above its destination row; the shift N is too small")]
    NegativeReadiness { token: Square },
    #[error("a token is ready but no ready empty square was found; the shift N is too small")]
    NoReadySquare,
    #[error("token at {token} could not shift up to row {target_row}; the shift N is too small")]
    BlockedLift { token: Square, target_row: usize },
    #[error("move displaced a token from {from} to {to}, which is not its destination; the shift N is too small")]
    StrayToken { from: Square, to: Square },
    #[error("no ready token available in row {row} for square {square}")]
    NoReadyToken { row: usize, square: Square },
    #[error("algorithm exceeded its iteration bound; position is inconsistent")]
    IterationBound,
}

/// Errors from replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("illegal action at index {index}: {source}")]
pub struct CertificateError {
    pub index: usize,
    #[source]
    pub source: GameError,
}
