use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed braid word text.
    Syntax(String),
    /// Strand count below one.
    NoStrands,
    /// A letter whose generator index is outside `1..=strands-1`.
    IndexOutOfRange {
        index: i64,
        strands: usize,
    },
    /// The operation is only defined for positive words.
    NonPositiveWord,
    PreconditionViolated(&'static str),
    PositionOutOfRange {
        position: usize,
        len: usize,
    },
    /// The rewrite-orbit search hit its node cap without reaching a verdict.
    SearchExhausted {
        visited: usize,
    },
    /// An engine limit (strands, letters, memo entries) was exceeded.
    Resource(String),
    /// A substitution required even exponents and found an odd one.
    OddExponent(&'static str),
    /// Division by `(1+α)^k` left a remainder.
    InexactDivision,
    NotAKnot,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax(msg) => write!(f, "syntax error: {msg}"),
            Error::NoStrands => f.write_str("strand count must be at least 1"),
            Error::IndexOutOfRange { index, strands } => write!(
                f,
                "generator index {index} out of range for {strands} strands"
            ),
            Error::NonPositiveWord => f.write_str("word contains negative letters"),
            Error::PreconditionViolated(what) => write!(f, "precondition violated: {what}"),
            Error::PositionOutOfRange { position, len } => {
                write!(
                    f,
                    "position {position} out of range for word of length {len}"
                )
            }
            Error::SearchExhausted { visited } => {
                write!(f, "rewrite-orbit search exhausted after {visited} words")
            }
            Error::Resource(msg) => write!(f, "resource limit exceeded: {msg}"),
            Error::OddExponent(stage) => write!(f, "odd exponent during {stage}"),
            Error::InexactDivision => f.write_str("division by (1+alpha) left a remainder"),
            Error::NotAKnot => f.write_str("closure has more than one component"),
        }
    }
}

impl core::error::Error for Error {}
