use num_bigint::BigInt;
use thiserror::Error;

/// Every failure the library reports. Domain errors carry enough context for
/// a one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has zero determinant")]
    ZeroDeterminant,

    #[error("matrix has negative determinant; only orientation-preserving elements are supported")]
    NegativeDeterminant,

    #[error("level must be a positive integer")]
    InvalidLevel,

    #[error("level divisible by 4 unsupported (N = {0})")]
    LevelDivisibleBy4(u64),

    #[error("level divisible by 9 unsupported (N = {0})")]
    LevelDivisibleBy9(u64),

    #[error("{d} is not an exact divisor of {n}")]
    NotExactDivisor { n: u64, d: u64 },

    #[error("25 is not an exact divisor of N = {0}")]
    Not25ExactDivisor(u64),

    #[error("basis vectors are linearly dependent")]
    DegenerateBasis,

    #[error("lattice class {0} is not on the snake of level {1}")]
    NotOnSnake(String, u64),

    #[error("no integer solution: gcd({e}, {modulus}) != 1")]
    NotSolvable { e: u64, modulus: BigInt },

    #[error("coset closure exceeded {0} elements")]
    ClosureOverflow(usize),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Whether this is a domain error in the sense of the CLI contract
    /// (exit status 2) as opposed to an internal failure.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::ClosureOverflow(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
