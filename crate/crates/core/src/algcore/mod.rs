//! Algebras and coalgebras by structure constants, with axiom checkers.

mod algebra;
mod coalgebra;
mod report;
pub mod tensor;

pub use algebra::{check_algebra, check_algebra_hom, generated_subalgebra, FinDimAlgebra};
pub use coalgebra::{check_coalgebra, FinDimCoalgebra};
pub use report::{CheckItem, CheckReport, Witness};
pub use tensor::Tensor3;

pub use crate::weakcore::{variant, Variant};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};

/// A linear map `k^source_dim → k^target_dim`, stored as a `target × source` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source_dim: usize, target_dim: usize, matrix: Matrix) -> Result<Self> {
        if matrix.cols() != source_dim || matrix.rows() != target_dim {
            return Err(Error::InvalidInput(format!(
                "matrix {}x{} for a map {source_dim} -> {target_dim}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(LinearMap { matrix })
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }
}

impl From<Matrix> for LinearMap {
    fn from(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }
}
