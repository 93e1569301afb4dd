use std::sync::{Arc, OnceLock};

use super::algebra::FinDimAlgebra;
use super::report::{CheckItem, CheckReport};
use super::tensor::{apply_block, Tensor3};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};

type Sparse = Vec<(usize, Scalar)>;

/// A finite-dimensional coalgebra: `comul.get(i, j, k)` is the coefficient
/// of `e_j ⊗ e_k` in `Δ(e_i)`.
#[derive(Clone, Debug)]
pub struct FinDimCoalgebra {
    comul: Tensor3,
    counit: Vec<Scalar>,
    table: OnceLock<Arc<Vec<Sparse>>>,
}

impl PartialEq for FinDimCoalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.comul == other.comul && self.counit == other.counit
    }
}

impl Eq for FinDimCoalgebra {}

impl FinDimCoalgebra {
    pub fn new(comul: Tensor3, counit: Vec<Scalar>) -> Result<Self> {
        let [a, b, c] = comul.dims();
        if a != b || b != c || counit.len() != a {
            return Err(Error::InvalidInput(format!(
                "comultiplication tensor {a}x{b}x{c} with counit of length {}",
                counit.len()
            )));
        }
        if let Some(s) = counit.iter().find(|s| s.field() != comul.field()) {
            return Err(Error::FieldMismatch(comul.field(), s.field()));
        }
        Ok(FinDimCoalgebra { comul, counit, table: OnceLock::new() })
    }

    /// Build from a rule giving `Δ(e_i)` as sparse `((j, k), coefficient)` terms.
    pub fn from_coproducts(
        field: FieldSpec,
        dim: usize,
        counit: Vec<Scalar>,
        mut coproduct: impl FnMut(usize) -> Vec<((usize, usize), Scalar)>,
    ) -> Result<Self> {
        let mut comul = Tensor3::zeros(field, [dim, dim, dim]);
        for i in 0..dim {
            for ((j, k), s) in coproduct(i) {
                let cur = comul.get(i, j, k) + &s;
                comul.set(i, j, k, cur);
            }
        }
        Self::new(comul, counit)
    }

    /// Coalgebra whose comultiplication is given by an `n² × n` matrix.
    pub fn from_matrix(delta: &Matrix, counit: Vec<Scalar>) -> Result<Self> {
        let n = counit.len();
        if delta.rows() != n * n || delta.cols() != n {
            return Err(Error::InvalidInput("comultiplication matrix has wrong shape".into()));
        }
        let comul = Tensor3::from_fn(delta.field(), [n, n, n], |i, j, k| delta[(j * n + k, i)].clone());
        Self::new(comul, counit)
    }

    pub fn field(&self) -> FieldSpec {
        self.comul.field()
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn comul_tensor(&self) -> &Tensor3 {
        &self.comul
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    fn table(&self) -> &[Sparse] {
        self.table.get_or_init(|| {
            let n = self.dim();
            let mut t = vec![Vec::new(); n];
            for ([i, j, k], s) in self.comul.nonzero_entries() {
                t[i].push((j * n + k, s.clone()));
            }
            Arc::new(t)
        })
    }

    /// `Δ(e_i)` as sparse coefficients indexed by `j·n + k`.
    pub fn basis_coproduct(&self, i: usize) -> &[(usize, Scalar)] {
        &self.table()[i]
    }

    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.field().zeros(n * n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (jk, s) in self.basis_coproduct(i) {
                out[*jk] = &out[*jk] + &(a * s);
            }
        }
        out
    }

    /// `(Δ ⊗ id)Δ(x)` in `H^{⊗3}`.
    pub fn delta2(&self, x: &[Scalar]) -> Vec<Scalar> {
        apply_block(&self.delta(x), 1, self.dim(), &self.delta_matrix())
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Scalar {
        crate::exactla::vector::dot(&self.counit, x)
    }

    /// `Δ` as an `n² × n` matrix.
    pub fn delta_matrix(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(self.field(), n * n, n, |jk, i| self.comul.get(i, jk / n, jk % n).clone())
    }

    /// `H^cop`: flipped comultiplication.
    pub fn co_opposite(&self) -> FinDimCoalgebra {
        FinDimCoalgebra::new(self.comul.permuted([0, 2, 1]), self.counit.clone()).expect("same shape")
    }

    /// The dual algebra `C*`: multiplication is the transpose of `Δ`, unit is `ε`.
    pub fn dual_algebra(&self) -> FinDimAlgebra {
        FinDimAlgebra::new(self.comul.permuted([2, 0, 1]), self.counit.clone()).expect("same shape")
    }

    /// The dual coalgebra `A*` of an algebra.
    pub fn dual_of(a: &FinDimAlgebra) -> FinDimCoalgebra {
        FinDimCoalgebra::new(a.mul_tensor().permuted([1, 2, 0]), a.one()).expect("same shape")
    }
}

/// Coassociativity and both counit laws on every basis element.
pub fn check_coalgebra(c: &FinDimCoalgebra) -> CheckReport {
    let n = c.dim();
    let dm = c.delta_matrix();
    let eps_row = Matrix::from_rows(c.field(), vec![c.counit.clone()]).expect("counit row");
    let mut coassoc = CheckItem::new("coassociativity");
    let mut left = CheckItem::new("counit-left");
    let mut right = CheckItem::new("counit-right");
    for i in 0..n {
        let d = c.delta(&c.field().unit_vector(n, i));
        let lhs = apply_block(&d, 1, n, &dm);
        let rhs = apply_block(&d, n, 1, &dm);
        coassoc.record(&[i], &lhs, &rhs);
        let ei = c.field().unit_vector(n, i);
        left.record(&[i], &apply_block(&d, 1, n, &eps_row), &ei);
        right.record(&[i], &apply_block(&d, n, 1, &eps_row), &ei);
    }
    CheckReport { items: vec![coassoc, left, right] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::check_algebra;

    const Q: FieldSpec = FieldSpec::Rational;

    fn grouplike(n: usize) -> FinDimCoalgebra {
        FinDimCoalgebra::from_coproducts(Q, n, vec![Q.one(); n], |i| vec![((i, i), Q.one())]).unwrap()
    }

    #[test]
    fn grouplike_basis_passes() {
        assert!(check_coalgebra(&grouplike(3)).overall());
    }

    #[test]
    fn zeroed_counit_fails_at_that_element() {
        let mut eps = vec![Q.one(); 3];
        eps[1] = Q.zero();
        let c = FinDimCoalgebra::new(grouplike(3).comul_tensor().clone(), eps).unwrap();
        let r = check_coalgebra(&c);
        assert_eq!(r.item("counit-left").unwrap().witness().unwrap().indices, vec![1]);
    }

    #[test]
    fn dual_algebra_of_grouplike_is_pointwise() {
        let a = grouplike(3).dual_algebra();
        assert!(check_algebra(&a).overall());
        assert!(a.is_commutative());
        assert_eq!(FinDimCoalgebra::dual_of(&a), grouplike(3));
    }

    #[test]
    fn matrix_round_trip() {
        let c = grouplike(2).co_opposite();
        let back = FinDimCoalgebra::from_matrix(&c.delta_matrix(), c.counit().to_vec()).unwrap();
        assert_eq!(back, c);
    }
}
