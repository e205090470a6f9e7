use thiserror::Error;

/// Errors reported by the chaintope library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A signed sum of the entries vanishes, so strict shortness decisions
    /// are impossible.
    #[error("length vector is not generic: some signed sum of entries vanishes")]
    NonGeneric,

    /// The anchor entry is at least the sum of the others, so the chain space
    /// and its moment polytope are empty.
    #[error("moment polytope is empty: anchor entry exceeds the sum of the rest")]
    EmptyPolytope,

    /// An operation that requires the first m-1 entries in ascending order
    /// was called on an unsorted vector.
    #[error("length vector is not normalized: first m-1 entries must be ascending")]
    NotNormalized,

    /// `genetic_lift` was given a delta that is not strictly larger than the
    /// sum of the first m-1 entries.
    #[error("delta must exceed the sum of the first m-1 entries")]
    BadDelta,

    /// An index argument fell outside its documented range.
    #[error("argument out of range: {0}")]
    OutOfRange(&'static str),

    /// A signed subset that is not admissible was passed where an admissible
    /// one is required.
    #[error("signed subset is not admissible for this length vector")]
    NotAdmissible,

    /// The operation needs a higher-dimensional polytope than the input
    /// provides.
    #[error("dimension too small: {0}")]
    DimensionTooSmall(&'static str),

    /// Enumeration refused: the input exceeds the configured size cap.
    #[error("m = {m} exceeds the enumeration cap {cap} (set CHAINTOPE_MAX_M to raise it)")]
    SizeCap { m: usize, cap: usize },

    /// `bott_data` requires the cube short code.
    #[error("short code does not match the cube pattern required here")]
    WrongCode,

    /// A caller-checked precondition does not hold.
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),

    /// The poset is too large for isomorphism testing.
    #[error("poset too large for isomorphism testing (limit {0} elements)")]
    TooLarge(usize),

    /// `blind_blind_identify` requires a triangle-free input.
    #[error("face poset has a triangular 2-face")]
    NotTriangleFree,

    /// `blind_blind_identify` requires a simple polytope lattice.
    #[error("face poset is not the lattice of a simple polytope")]
    NotSimple,

    /// Inputs that must describe the same polytope disagree.
    #[error("inconsistent inputs: {0}")]
    Inconsistent(String),

    /// A length vector failed its construction invariants.
    #[error("invalid length vector: {0}")]
    InvalidVector(String),

    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
