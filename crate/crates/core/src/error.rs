use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed code: {0}")]
    MalformedCode(String),
    #[error("value out of range: {0}")]
    Range(String),
    #[error("length mismatch: {left} vs {right}")]
    Length { left: usize, right: usize },
    #[error("symbol {0:?} is not in the alphabet")]
    Alphabet(char),
    #[error("machines are over different alphabets")]
    AlphabetMismatch,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("cap of {0} exceeded")]
    CapExceeded(u64),
    #[error("stack discipline violated: {0}")]
    Stack(String),
    #[error("transducer has no move on {0}")]
    NoTransition(String),
    #[error("machine is not in branching normal form: {0}")]
    NotNormalForm(String),
    #[error("transducer emits {0:?}, expected a binary output alphabet")]
    OutputAlphabet(char),
    #[error("homomorphism rejected: {0}")]
    Homomorphism(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {0:?} has no machine")]
    NoMachine(String),
    #[error("vector is not in the span of the given prefixes")]
    NotInSpan,
    #[error("enumeration too large: {0}")]
    Scale(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("expected a {expected} machine, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
