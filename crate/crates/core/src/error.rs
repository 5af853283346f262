use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator index {index} out of range for modulus {n}")]
    IndexOutOfRange { index: i64, n: usize },

    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("word modulus {word} does not match presentation modulus {expected}")]
    ModulusMismatch { word: usize, expected: usize },

    #[error("defining word must be nonempty")]
    EmptyWord,

    #[error("defining word {0} is not cyclically reduced")]
    NotCyclicallyReduced(String),

    #[error("relative word needs at least one x-syllable")]
    NoXSyllable,

    #[error("invalid retraction: {epsilon}*{f} + {p} = {value} is not divisible by {n}")]
    InvalidRetraction {
        f: i64,
        epsilon: i64,
        p: i64,
        value: i64,
        n: usize,
    },

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("coset table is incomplete")]
    IncompleteTable,

    #[error("coset table audit failed: {0}")]
    Audit(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
