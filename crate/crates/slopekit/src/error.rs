use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Variant names are stable identifiers: the CLI reports them verbatim as
/// machine-readable error codes, so renaming a variant is a breaking change.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero vector does not determine a slope or curve class")]
    ZeroVector,

    #[error("expected distinct slopes, got {0} twice")]
    EqualSlopes(String),

    #[error("consecutive path slopes are equal at {0}")]
    DegenerateLeg(String),

    #[error("a rotation path needs at least two slopes")]
    PathTooShort,

    #[error("slopes {0} and {1} are not joined by an edge of the Farey tessellation")]
    NotAdjacent(String, String),

    #[error("slope {0} repeats along the path")]
    RepeatedSlope(String),

    #[error("back slope {0} of one slice does not match front slope {1} of the next")]
    BrokenChain(String, String),

    #[error("{expected} signs expected for this slope chain, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("interface {index} is not an interior interface of a {slices}-slice path")]
    BoundaryInterface { index: usize, slices: usize },

    #[error("slope {0} is outside the domain of this operation")]
    OutOfDomain(String),

    #[error("slope {0} is not an integer")]
    NonIntegerSlope(String),

    #[error("curve classes {0} and {1} do not form a unimodular frame")]
    NonUnimodularFrame(String, String),

    #[error("matrix (({0},{1}),({2},{3})) does not have determinant ±1")]
    NotUnimodular(i64, i64, i64, i64),

    #[error("vector ({0},{1}) is not primitive")]
    NotPrimitive(i64, i64),

    #[error("index minus Conley-Zehnder sum is odd: {0} - {1}")]
    ParityViolation(i64, i64),

    #[error("orbit {0} has nonpositive action; the search would not terminate")]
    UnboundedSearch(String),

    #[error("unknown orbit name {0}")]
    UnknownOrbit(String),

    #[error("orbit name {0} appears twice in the table")]
    DuplicateOrbit(String),

    #[error("action {0} is not positive")]
    NonPositiveAction(String),

    #[error("orbit table constraints are not satisfied by the stored actions: {0}")]
    InconsistentTable(String),

    #[error("cannot parse {input:?} as {expected}")]
    ParseError { input: String, expected: &'static str },
}

impl Error {
    /// The stable name of the error variant, as reported by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroVector => "ZeroVector",
            Error::EqualSlopes(_) => "EqualSlopes",
            Error::DegenerateLeg(_) => "DegenerateLeg",
            Error::PathTooShort => "PathTooShort",
            Error::NotAdjacent(_, _) => "NotAdjacent",
            Error::RepeatedSlope(_) => "RepeatedSlope",
            Error::BrokenChain(_, _) => "BrokenChain",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::BoundaryInterface { .. } => "BoundaryInterface",
            Error::OutOfDomain(_) => "OutOfDomain",
            Error::NonIntegerSlope(_) => "NonIntegerSlope",
            Error::NonUnimodularFrame(_, _) => "NonUnimodularFrame",
            Error::NotUnimodular(_, _, _, _) => "NotUnimodular",
            Error::NotPrimitive(_, _) => "NotPrimitive",
            Error::ParityViolation(_, _) => "ParityViolation",
            Error::UnboundedSearch(_) => "UnboundedSearch",
            Error::UnknownOrbit(_) => "UnknownOrbit",
            Error::DuplicateOrbit(_) => "DuplicateOrbit",
            Error::NonPositiveAction(_) => "NonPositiveAction",
            Error::InconsistentTable(_) => "InconsistentTable",
            Error::ParseError { .. } => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
