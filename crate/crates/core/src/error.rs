use core::fmt;

/// Errors raised by the library. Infeasibility of a region system and
/// inconclusive certification are values, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A letter refers to a generator outside `1..strands`.
    BadLetter { index: usize, strands: usize },
    /// Zero strands, or a strand id out of range.
    BadStrand(usize),
    /// A base sequence that is not a permutation of the strands/components.
    BadSequence,
    /// Base points do not pick exactly one edge per component.
    BadBasepoints,
    BadOrdinal(usize),
    BadRegion(usize),
    /// The word has no letters, so its closure has no faces to extract.
    CrossingFree,
    /// Some generator is missing, so the closure is a split diagram.
    SplitDiagram,
    NotKnot,
    NotAlternating,
    /// The word is not laid out as rounds `σ1 σ2 ⋯ σ_{p−1}`.
    NotWeaving,
    TooLarge { what: &'static str, size: usize, cap: usize },
    Precondition(&'static str),
    OutOfTable,
    Unsupported(&'static str),
    /// Exact search stopped at `weight` because some candidate could not be
    /// decided by the certifier.
    CertifierInconclusive { weight: usize },
    /// Exact integer arithmetic left the `i128` range.
    Overflow,
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::Overflow)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadLetter { index, strands } => {
                write!(f, "generator {index} is out of range for {strands} strands")
            }
            Error::BadStrand(s) => write!(f, "bad strand {s}"),
            Error::BadSequence => f.write_str("base sequence is not a permutation"),
            Error::BadBasepoints => f.write_str("base points must pick one edge on every component"),
            Error::BadOrdinal(o) => write!(f, "crossing ordinal {o} is out of range"),
            Error::BadRegion(r) => write!(f, "region {r} is not allowed here"),
            Error::CrossingFree => f.write_str("diagram has no crossings"),
            Error::SplitDiagram => f.write_str("closure is a split diagram (a generator is missing)"),
            Error::NotKnot => f.write_str("closure has more than one component"),
            Error::NotAlternating => f.write_str("diagram is not alternating"),
            Error::NotWeaving => f.write_str("word is not a weaving braid layout"),
            Error::TooLarge { what, size, cap } => {
                write!(f, "{what} = {size} exceeds the cap {cap}")
            }
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::OutOfTable => f.write_str("(p, q) is not covered by the closed-form table"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::CertifierInconclusive { weight } => {
                write!(f, "certifier was inconclusive at weight {weight}")
            }
            Error::Overflow => f.write_str("integer overflow in exact arithmetic"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
