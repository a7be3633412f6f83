use thiserror::Error;

use crate::rootsys::Root;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of {0} does not lie in Q(sqrt2, sqrt3)")]
    UnsupportedRadical(String),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("root generation exceeded height {0}; Cartan matrix is not of finite type")]
    NotFiniteType(i32),
    #[error("{0} is not a root")]
    NotARoot(Root),
    #[error("chain of {alpha} through {beta} is degenerate (beta = +-alpha)")]
    DegenerateChain { alpha: Root, beta: Root },
    #[error("simple root index {0} out of range")]
    SimpleIndex(usize),
    #[error("cannot parse root from {0:?}")]
    ParseRoot(String),

    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("bracket table is missing entry [{0}, {1}]")]
    IncompleteTable(String, String),
    #[error("entries [{0}, {1}] and [{1}, {0}] are not antisymmetric")]
    Antisymmetry(String, String),
    #[error("[{0}, {1}] is not proportional to {1}")]
    NotAnEigenvector(String, String),
    #[error("{0} + {1} = 0: that bracket is a Cartan element, not a structure constant")]
    CartanPair(Root, Root),
    #[error("construction inconsistent: {0}")]
    ConstructionInconsistent(String),

    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("map has no factor for {0}")]
    IncompleteMap(String),
    #[error("factor for {0} is zero")]
    ZeroFactor(String),
    #[error("no diagonal isomorphism: {0}")]
    NoMap(String),
    #[error("unknown named fixture {0:?}")]
    UnknownFixture(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
