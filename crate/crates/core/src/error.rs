use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),

    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u32, right: u32 },

    #[error("no image defined for generator {0}")]
    UndefinedGenerator(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("event {event}: {message}")]
    OutOfRange { event: usize, message: String },

    #[error("front has {0} components; only knots are supported")]
    MultiComponent(usize),

    #[error("front has {0} base points; exactly one is required")]
    BasePoints(usize),

    #[error("rotation number is {0}; no Maslov potential exists")]
    NoMaslovPotential(i64),

    #[error("disk search exceeded its cap of {0} partial disks")]
    DiskSearchCap(usize),

    #[error("augmentation search space of {0} candidates exceeds 2^30; use a smaller knot or field")]
    SearchSpace(u128),

    #[error("invalid augmentation: {0}")]
    InvalidAugmentation(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unknown built-in knot `{0}`")]
    UnknownKnot(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}
