use thiserror::Error;

use crate::algcore::CheckReport;
use crate::exactla::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A constructed object failed the checks it is guaranteed to pass.
    #[error("axiom failure in {context}: {}", report.failed_ids().join(", "))]
    AxiomFailure { context: String, report: Box<CheckReport> },

    #[error("not a Frobenius system")]
    NotFrobenius,

    #[error("comparison element t is not invertible")]
    NonInvertibleT,

    #[error("algebra is not commutative")]
    NotCommutative,

    #[error("no separability element: {0}")]
    NotSeparable(String),

    #[error("normalisation failed: tr(u^-1) = {0}, expected 1")]
    BadNormalization(String),

    #[error("matrix is singular")]
    Singular,

    #[error("base is not an idempotent Frobenius system")]
    BadBase,

    #[error("tensor projector is not idempotent")]
    ProjectorNotIdempotent,

    #[error("element is not invertible in the counital subalgebra")]
    NotInvertible,

    #[error("twist element violates e1 t^-1 e2 = 1")]
    BadTwist,

    #[error("map is not a weak bialgebra homomorphism")]
    NotAHomomorphism,

    #[error("map is not well defined on the quotient: {0}")]
    IllDefined(String),

    #[error("not a weak Hopf algebra: canonical map has rank {rank} (domain {domain_dim}, codomain {codomain_dim})")]
    NotHopf { domain_dim: usize, codomain_dim: usize, rank: usize },

    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("multiplication table is not associative at {0:?}")]
    NotAssociative((usize, usize, usize)),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("schema error in {field}: {message}")]
    Schema { field: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
