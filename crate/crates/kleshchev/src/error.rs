use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: e = {e}, m = {m} (need e >= 2 and 0 <= m < e)")]
    BadParams { e: u32, m: u32 },

    #[error("partition token {0:?} is not a positive integer")]
    BadPartitionToken(String),

    #[error("partition parts must be weakly decreasing: {0} followed by {1}")]
    IncreasingParts(u32, u32),

    #[error("partition parts must be positive")]
    ZeroPart,

    #[error("partition rank exceeds u32")]
    RankOverflow,

    #[error("bipartition text must contain exactly one '|' separator")]
    BadBipartitionText,

    #[error("beta window of length {window_len} too short for partition with {parts} parts")]
    WindowTooShort { window_len: usize, parts: usize },

    #[error("beta window is not strictly decreasing")]
    MalformedWindow,

    #[error("partition {0} is not {1}-restricted")]
    NotERestricted(String, u32),

    #[error("partition {0} is not a {1}-core")]
    NotECore(String, u32),

    #[error("abacus iteration exceeded the termination fuse ({0} steps)")]
    IterationFuse(usize),

    #[error("empty bipartition has no residue selection")]
    EmptyBipartition,

    #[error("bipartition {0} is not Kleshchev")]
    NotKleshchev(String),

    #[error("admissible-sequence construction produced an empty block for {0}")]
    EmptyAdmissibleBlock(String),

    #[error("intermediate bipartition {0} is not Kleshchev while stripping")]
    IntermediateNotKleshchev(String),

    #[error("inexact Laurent polynomial division")]
    InexactDivision,

    #[error("integer overflow in Laurent coefficient arithmetic")]
    CoeffOverflow,

    #[error("residue {0} out of range for e = {1}")]
    BadResidue(u32, u32),

    #[error("residue word token {0:?} is not a residue")]
    BadResidueToken(String),

    #[error("Fock expansion violates the expected structure: {0}")]
    ConventionViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
