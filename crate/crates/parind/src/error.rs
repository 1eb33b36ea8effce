use thiserror::Error;

/// Errors raised by the library. The CLI maps these onto exit codes:
/// input/validation problems exit 2, semantic rule violations exit 3,
/// resource guards exit 4.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("root closure exceeded {bound} roots; the matrix is not of finite type")]
    NonFiniteType { bound: usize },

    #[error("vector {0:?} is not a root of this system")]
    UnknownRoot(Vec<i64>),

    #[error("Weyl group larger than the guard bound {bound}")]
    GroupTooLarge { bound: usize },

    #[error("parabolic sets belong to different ambient groups")]
    MixedAmbient,

    #[error("Q contains {root} which lies outside P(sigma)")]
    QOutOfRange { root: String },

    #[error("operation requires a supercuspidal sigma descriptor")]
    NotSupercuspidal,

    #[error("descriptor is not e-minimal")]
    NotEMinimal,

    #[error("sigma descriptor is inconsistent: {0}")]
    InvalidSigma(String),

    #[error("invalid nesting: {0}")]
    InvalidNesting(String),

    #[error("invalid triple in the Levi M1: {0}")]
    InvalidM1Triple(String),

    #[error("index set of size {size} exceeds the upper-set enumeration guard ({bound})")]
    UpSetGuard { size: usize, bound: usize },
}

impl Error {
    /// Exit code category used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidCartan(_) | Error::NonFiniteType { .. } => 2,
            Error::GroupTooLarge { .. } | Error::UpSetGuard { .. } => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
