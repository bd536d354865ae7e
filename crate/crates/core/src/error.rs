use thiserror::Error;

/// Errors surfaced by workbench operations.
///
/// Precondition violations are reported as errors rather than silently
/// normalized: exact-arithmetic pipelines must not guess.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },

    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),

    #[error("squared radius must be positive")]
    InvalidRadius,

    #[error("graph edges carry mixed squared lengths: {0} and {1}")]
    MixedEdgeLengths(String, String),

    #[error("discs {0} and {1} coincide")]
    CoincidentDiscs(usize, usize),

    #[error("vector length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("n must be divisible by 4, got {0}")]
    NotDivisibleBy4(usize),

    #[error("family is not {t}-intersecting: members {a} and {b} meet in fewer than {t} elements")]
    NotIntersecting { t: usize, a: String, b: String },

    #[error("uniformity mismatch: expected {expected}, got {got}")]
    UniformityMismatch { expected: usize, got: usize },

    #[error("odd uniformity {k}: the complete {k}-uniform hypergraph is a cocycle, so the maximum is the trivial binomial(n,k)")]
    OddUniformityComplete { k: usize },

    #[error("matrix entries must be +1 or -1")]
    NonPmEntry,

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("unsupported dimension {0}: supported range is {1}")]
    UnsupportedDimension(usize, &'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
