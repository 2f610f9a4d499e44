use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("structure fails validation:\n{0}")]
    Invalid(ValidationReport),
    #[error("unknown object {0}")]
    UnknownObject(usize),
    #[error("object sets differ: {0} vs {1} objects")]
    BaseMismatch(usize, usize),
    #[error("not an action: {0}")]
    NotAnAction(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("module is not abelian")]
    NotAbelian,
    #[error("module map is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("morphisms are not composable: {0}")]
    DomainMismatch(String),
    #[error("invalid homotopy: {0}")]
    InvalidHomotopy(String),
    #[error("free derivation is not invertible")]
    NotInvertible,
    #[error("morphism is not an automorphism")]
    NotAutomorphism,
    #[error("braided crossed module is not regular: object monoid has non-invertible elements")]
    NotRegular,
    #[error("invalid 2-crossed module:\n{0}")]
    InvalidTwoCrossed(ValidationReport),
    #[error("no isomorphism found: {0}")]
    NoIsomorphismFound(String),
    #[error("search space of {needed} candidates exceeds the limit of {limit}")]
    SearchSpaceExceeded { needed: u128, limit: u64 },
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: {msg}")]
    Semantic { line: usize, msg: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
