//! Exact scalars over `Q` and `F_p`, and dense exact linear algebra.

mod matrix;
mod rational;
mod scalar;
mod subspace;
pub mod vector;

pub use matrix::{rref, solve_linear, Matrix, Rref};
pub use rational::Rational;
pub use scalar::{FieldSpec, Scalar};
pub use subspace::{quotient_by, QuotientSpace, Subspace};
