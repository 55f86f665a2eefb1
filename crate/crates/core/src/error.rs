use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet arity must be between 2 and 10, got {0}")]
    BadArity(u8),
    #[error("invalid prefix code: {0}")]
    InvalidCode(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("word {0} is not in the code")]
    NotInCode(String),
    #[error("index {index} out of range for a code of size {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("level {level} is below the longest image word ({needed})")]
    LevelTooSmall { level: usize, needed: usize },
    #[error("word {0} is outside the domain")]
    NotInDomain(String),
    #[error("the family is defined for n > 2, got {0}")]
    BadN(usize),
    #[error("codes have different sizes ({0} vs {1})")]
    CardinalityMismatch(usize, usize),
    #[error("image code of the right factor differs from the domain code of the left factor")]
    CodesMismatch,
    #[error("generator {0} needs the binary alphabet")]
    WrongArity(String),
    #[error("element does not preserve dictionary order")]
    NotInF,
    #[error("width {width} is below the longest code word ({needed})")]
    WidthTooSmall { width: usize, needed: usize },
    #[error("input width {got} does not match circuit width {expected}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("gate {0} is not bijective on its input code")]
    NotBijectiveGate(String),
    #[error("circuit does not compute an order-preserving map")]
    NotOrderPreserving,
    #[error("permutation is odd")]
    OddPermutation,
    #[error("width {0} is too large for exhaustive checking")]
    WidthTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
