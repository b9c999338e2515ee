use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is composite")]
    CompositeModulus(u64),
    #[error("modulus {0} is below 2^31")]
    ModulusTooSmall(u64),
    #[error("modulus {0} does not fit in 63 bits")]
    ModulusTooLarge(u64),

    #[error("direction {0} requested twice")]
    DuplicateDirection(usize),
    #[error("{what} index {index} out of range (limit {limit})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix has rank {rank}, {needed} independent columns requested")]
    RankDeficient { rank: usize, needed: usize },
    #[error("pivot block is singular at the sampled point")]
    SingularPivotBlock,
    #[error("sampled points do not span a {0}-plane")]
    DegenerateSample(usize),
    #[error("{what}: no usable sample after {attempts} attempts")]
    SampleFailure { what: String, attempts: usize },
    #[error("{needed} active directions exceed the limit of {limit}")]
    TooManyDirections { needed: usize, limit: usize },
    #[error("computed dimension {dim} exceeds expected dimension {expdim} for {what}")]
    BoundExceeded {
        what: String,
        dim: usize,
        expdim: usize,
    },
    #[error("exact rational rank {exact} disagrees with modular rank {modular} for {what}")]
    CrossCheckMismatch {
        what: String,
        modular: usize,
        exact: usize,
    },

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("projection target P^{target} is below the variety dimension {n}")]
    TargetTooSmall { target: usize, n: usize },
    #[error("projection target P^{target} is not below the ambient P^{r}")]
    TargetNotSmaller { target: usize, r: usize },
    #[error("unknown variety selector `{0}`")]
    UnknownVariety(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Sampling-related failures, as opposed to bad input.
    pub fn is_sampling_failure(&self) -> bool {
        matches!(
            self,
            Error::SampleFailure { .. }
                | Error::SingularPivotBlock
                | Error::DegenerateSample(_)
                | Error::CrossCheckMismatch { .. }
        )
    }
}
