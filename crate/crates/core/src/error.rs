use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph not connected")]
    NotConnected,
    #[error("graph not chordal")]
    NotChordal,
    #[error("not a block graph")]
    NotBlockGraph,
    #[error("not a star")]
    NotStar,
    #[error("graph has bridges")]
    HasBridges,
    #[error("reduced clique graph too large")]
    ReducedCliqueGraphTooLarge,
    #[error("too many colors for exact search")]
    TooManyColors,
    #[error("bound requires >= 2 blocks")]
    BoundNeedsTwoBlocks,
    #[error("bound requires min degree 2")]
    BoundNeedsMinDegreeTwo,
    #[error("condition defined for >= 3 blocks")]
    ConditionNeedsThreeBlocks,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
