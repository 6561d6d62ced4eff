use thiserror::Error;

/// Errors raised by the algebra, graph, splitting and Betti routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} variables vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range 1..={ambient}")]
    IndexOutOfRange { index: usize, ambient: usize },

    #[error("{what} cap exceeded: {requested} > {limit}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("excluded parameter: r = m - s - 1 = {r} (m = {m}, s = {s}) admits no splitting of this form")]
    ExcludedParameter { m: usize, s: u32, r: usize },

    #[error("splitting chain broken at r = {r} (m = {m}, s = {s}): r = m - s - 1")]
    ChainBroken { m: usize, s: u32, r: usize },

    #[error("convention mismatch: expected {expected}, found {found}")]
    ConventionMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("projective dimension mismatch: last nonzero row is {found}, expected {expected}")]
    ProjectiveDimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not a prime below 2^32")]
    NonPrimeCharacteristic(u64),

    #[error("Betti tables differ between {left} and {right}")]
    FieldDiscrepancy { left: String, right: String },

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, requested: usize, limit: usize) -> Self {
        Error::CapExceeded {
            what,
            requested,
            limit,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
