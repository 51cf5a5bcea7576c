use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("images {0:?} do not form a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid word: {0}")]
    WordSyntax(String),
    #[error("letter {letter} out of range for an alphabet of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("state `{0}` does not act invertibly on the alphabet")]
    NotInvertible(String),
    #[error("invalid machine: {0}")]
    InvalidMachine(String),
    #[error("oracle inconsistency: {0}")]
    Oracle(String),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("state closure exceeds {0} states")]
    NotFiniteState(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
