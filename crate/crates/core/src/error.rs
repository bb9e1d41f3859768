use thiserror::Error;

/// Errors surfaced to callers. Sign-coherence violations are not in here:
/// they indicate a bug and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arrow {vertex} -> {vertex} is a loop")]
    LoopArrow { vertex: usize },
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("arrow {from} -> {to} has zero multiplicity")]
    ZeroMultiplicity { from: usize, to: usize },
    #[error("vertex {vertex} is frozen and cannot be mutated")]
    FrozenVertex { vertex: usize },
    #[error("quiver already carries frozen vertices")]
    AlreadyFramed,
    #[error("matrix is not skew-symmetric at ({i}, {j})")]
    NotSkewSymmetric { i: usize, j: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("vertex counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("quiver has an oriented cycle through {cycle:?}")]
    Cyclic { cycle: Vec<usize> },
    #[error("invalid Dynkin type {family}{rank}")]
    InvalidDynkin { family: char, rank: usize },
    #[error("quiver is not alternating: vertex {vertex} is neither a source nor a sink")]
    NotAlternating { vertex: usize },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("series parameters differ: {0}")]
    SeriesMismatch(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("exponent vector must be nonzero")]
    ZeroExponent,
    #[error("sequence is not reddening")]
    NotReddening,
    #[error("no reddening sequence found within bounds")]
    UnknownWithinBounds,
    #[error("products of two reddening sequences differ at exponent {exponent:?}")]
    IdentityViolated { exponent: Vec<u32> },
    #[error("construction failed its self-check: {0}")]
    ConstructionInvalid(String),
    #[error("exchange matrix entry overflows i64")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
