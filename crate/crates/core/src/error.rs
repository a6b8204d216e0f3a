use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime in (2, 2^31)")]
    InvalidPrime(u32),
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable {name} at offset {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("hypersurface relation is not certified irreducible")]
    ReducibleRelation,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("resolution did not terminate within {0} steps")]
    CapExceeded(usize),
    #[error("matrix is not minimal (scalar entry present)")]
    NotMinimal,
    #[error("module is not of finite length")]
    NotFiniteLength,
    #[error("cocycle condition fails: {0}")]
    NotACocycle(String),
    #[error("ideal has height {found}, expected {expected}")]
    WrongHeight { expected: usize, found: usize },
    #[error("module has rank {0}, expected 1")]
    NotRankOne(usize),
    #[error("module has rank {0}, expected 2")]
    NotRankTwo(usize),
    #[error("module has rank {0}, too small")]
    RankTooSmall(usize),
    #[error("condition T fails: {0}")]
    ConditionTFailed(String),
    #[error("quotient does not satisfy condition T: {0}")]
    QuotientNotT(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("bad surface: {0}")]
    BadSurface(String),
    #[error("general choice failed after {attempts} attempts: {diagnostic}")]
    GenericityFailure { attempts: usize, diagnostic: String },
    #[error("twist sequences admit no strictly smaller index")]
    TwistsNotComparable,
    #[error("kernel is not dissocie: {0}")]
    KernelNotDissocie(String),
    #[error("module is not extraverti: {0}")]
    NotExtraverti(String),
    #[error("map is not surjective")]
    AlphaNotSurjective,
    #[error("module is not maximal Cohen-Macaulay")]
    NotMCM,
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
