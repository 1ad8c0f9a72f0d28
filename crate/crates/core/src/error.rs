use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet size {0} is outside 1..=10")]
    AlphabetSize(usize),
    #[error("letter {letter} is outside an alphabet of size {size}")]
    LetterOutOfRange { letter: u8, size: u8 },
    #[error("alphabet mismatch: {left} vs {right} letters")]
    AlphabetMismatch { left: u8, right: u8 },
    #[error("{0:?} is not a permutation of the alphabet")]
    NotAPermutation(Vec<u8>),
    #[error("empty word: {0}")]
    EmptyWord(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable {0} is isolated")]
    IsolatedVariable(char),
    #[error("every variable of pattern {0} is isolated; it has no formula")]
    AllIsolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("incremental context was built for a different word")]
    StaleContext,
    #[error("formula {formula} is not avoidable over {k} letters (longest avoiding word has length {max_length})")]
    NotAvoidable {
        formula: String,
        k: u8,
        max_length: usize,
    },
    #[error("node budget of {0} exhausted")]
    BudgetExhausted(u64),
    #[error("morphism: {0}")]
    Morphism(String),
    #[error("prefix of length {length} too short to stabilize the factors of {spec}")]
    PrefixTooShort { spec: String, length: usize },
    #[error("span {span} too small for factors of length {n}")]
    SpanTooSmall { span: usize, n: usize },
    #[error("unsupported formula {0} for certification")]
    Unsupported(String),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
