use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("scalars from different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("tensor order {found} does not match {expected} functionals")]
    OrderMismatch { expected: usize, found: usize },
    #[error("no nonzero {0} exists")]
    NoIntegral(&'static str),
    #[error("{what} space has dimension {dim}, expected 1")]
    AmbiguousIntegral { what: &'static str, dim: usize },
    #[error("lambda(Lambda) = 0")]
    DegeneratePairing,
    #[error("inconsistent linear system: {0}")]
    InconsistentSystem(&'static str),
    #[error("algebra has no pivot")]
    MissingPivot,
    #[error("algebra is not spherical: {0}")]
    NotSpherical(&'static str),
    #[error("axiom {axiom} fails at basis index {witness}")]
    AxiomFailure { axiom: String, witness: usize },
    #[error("quasitriangularity identity {0} fails")]
    NotQuasitriangular(usize),
    #[error("degenerate invariant: mu(g theta) mu(g^-1 theta^-1) = 0")]
    NotNondegenerate,
    #[error("integral cannot be normalized so that mu(g theta) mu(g^-1 theta^-1) = 1")]
    UnnormalizedIntegral,
    #[error("malformed event {index}: {reason}")]
    MalformedEvents { index: usize, reason: String },
    #[error("base point error: {0}")]
    BasepointError(String),
    #[error("slot mismatch: {0}")]
    SlotMismatch(String),
    #[error("unbalanced extrema on beta curve {0}")]
    UnbalancedExtrema(usize),
    #[error("gamma crossings out of order on gamma curve {0}")]
    NonAdjacentCrossing(usize),
    #[error("diagram is not in normal form: {0}")]
    NotNormalForm(String),
    #[error("diagram still has gamma crossings")]
    NotFlat,
    #[error("invalid group table: {0}")]
    InvalidGroup(&'static str),
    #[error("root of unity is not primitive of the required order")]
    BadRoot,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;
