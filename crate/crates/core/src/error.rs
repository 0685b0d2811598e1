use crate::rootsys::RootVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid root system: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not a root")]
    NotARoot(RootVector),

    #[error("{0} is not a positive root")]
    NotPositive(RootVector),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("empty Hurwitz system")]
    EmptySystem,

    #[error("product of the entries is not the identity")]
    ProductNotIdentity,

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("entries at positions {0} and {} are not an adjacent equal pair", .0 + 1)]
    NotAPair(usize),

    #[error("conjugating word names entry {0}, which belongs to the pair being conjugated")]
    WordTouchesPair(usize),

    #[error("Nielsen transformation needs two distinct indices, got {0} twice")]
    SelfIndex(usize),

    #[error("move log hash mismatch at {stage}: expected {expected:016x}, found {found:016x}")]
    HashMismatch { stage: &'static str, expected: u64, found: u64 },

    #[error(
        "entries do not generate the Weyl group of {spec}: they generate the reflection \
         subgroup with base {base:?}"
    )]
    NotGenerating { spec: String, base: Vec<RootVector> },

    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }

    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }
}
