use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown type `{0}`")]
    UnknownType(String),
    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("node index {index} out of range for rank {rank}")]
    BadIndex { index: usize, rank: usize },
    #[error("characters live on different groups: {0} vs {1}")]
    AmbientMismatch(String, String),
    #[error("exterior powers need nonnegative multiplicities")]
    NegativeInput,
    #[error("character is not Weyl invariant at weight {0}")]
    NotSymmetric(String),
    #[error("no folding pair ({0}, {1})")]
    UnknownPair(String, String),
    #[error("not an instance of the classical-subgroup clause: {0}")]
    NotAClause4Instance(String),
    #[error("not a maximal-rank pair: {0}")]
    NotAClause5Instance(String),
    #[error("not a restricted-irreducible pair: {0}")]
    NotAClause6Instance(String),
    #[error("not a tensor-product embedding: {0}")]
    NotAClause7Instance(String),
    #[error("cannot compose maps: {0} does not match {1}")]
    TypeMismatch(String, String),
    #[error("invalid Jordan type: {0}")]
    InvalidJordanType(String),
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("no weight map: {0}")]
    NoWeightMap(String),
    #[error("character cache: {0}")]
    Cache(String),
}
