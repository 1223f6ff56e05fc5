use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe of {size} objects exceeds the guard of {limit}")]
    UniverseTooLarge { size: usize, limit: usize },

    /// The weak predecessor enumerator kept producing new objects.
    #[error("weak closure exceeded {limit} objects (weak order not finitely branching?)")]
    ClosureOverflow { limit: usize },

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sequence is good: element {0} relates to element {1}")]
    NotBad(usize, usize),

    #[error("sequence is empty")]
    EmptySequence,

    #[error("element {0} is not a member of the object universe")]
    NotInUniverse(usize),
}
