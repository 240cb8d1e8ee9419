use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("gcd({h}, {k}) != 1")]
    NotCoprime { h: i64, k: i64 },

    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("m(t-1) = {product} exceeds 24 for (t, m) = ({t}, {m})")]
    OutOfRange { t: u64, m: u64, product: u64 },

    #[error("n = {n} is below the admissible range (needs n >= {min})")]
    IndexTooSmall { n: u64, min: String },

    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(String),

    #[error("series division is not exact at index {0}")]
    InexactDivision(usize),

    #[error("no nonzero residues: P and N are both empty for (t, m) = ({t}, {m})")]
    NoNonzeroResidues { t: u64, m: u64 },

    #[error("precision exhausted at {bits} bits while {what}")]
    PrecisionExhausted { bits: u32, what: String },

    #[error("cutoff certificate failed for t = {t}: {reason}")]
    CutoffFailed { t: u64, reason: String },

    #[error("identity `{id}` failed at index {index}")]
    IdentityFailed { id: String, index: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
