use std::sync::{Arc, OnceLock};

use super::report::{CheckItem, CheckReport};
use super::tensor::Tensor3;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar, Subspace};

type Sparse = Vec<(usize, Scalar)>;

/// A finite-dimensional algebra given by structure constants:
/// `mul.get(i, j, k)` is the coefficient of `e_k` in `e_i · e_j`.
///
/// No axioms are enforced at construction; run [`check_algebra`].
#[derive(Clone, Debug)]
pub struct FinDimAlgebra {
    mul: Tensor3,
    unit: Vec<Scalar>,
    table: OnceLock<Arc<Vec<Sparse>>>,
}

impl PartialEq for FinDimAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.mul == other.mul && self.unit == other.unit
    }
}

impl Eq for FinDimAlgebra {}

impl FinDimAlgebra {
    pub fn new(mul: Tensor3, unit: Vec<Scalar>) -> Result<Self> {
        let [a, b, c] = mul.dims();
        if a != b || b != c || unit.len() != a {
            return Err(Error::InvalidInput(format!(
                "multiplication tensor {a}x{b}x{c} with unit of length {}",
                unit.len()
            )));
        }
        if let Some(s) = unit.iter().find(|s| s.field() != mul.field()) {
            return Err(Error::FieldMismatch(mul.field(), s.field()));
        }
        Ok(FinDimAlgebra { mul, unit, table: OnceLock::new() })
    }

    /// Build from a rule giving `e_i · e_j` as a sparse combination.
    pub fn from_products(
        field: FieldSpec,
        dim: usize,
        unit: Vec<Scalar>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, Scalar)>,
    ) -> Result<Self> {
        let mut mul = Tensor3::zeros(field, [dim, dim, dim]);
        for i in 0..dim {
            for j in 0..dim {
                for (k, s) in product(i, j) {
                    let cur = mul.get(i, j, k) + &s;
                    mul.set(i, j, k, cur);
                }
            }
        }
        Self::new(mul, unit)
    }

    pub fn field(&self) -> FieldSpec {
        self.mul.field()
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mul_tensor(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    fn table(&self) -> &[Sparse] {
        self.table.get_or_init(|| {
            let n = self.dim();
            let mut t = vec![Vec::new(); n * n];
            for ([i, j, k], s) in self.mul.nonzero_entries() {
                t[i * n + j].push((k, s.clone()));
            }
            Arc::new(t)
        })
    }

    /// `e_i · e_j` as sparse coefficients.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table()[i * self.dim() + j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.field().zeros(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, s) in self.basis_product(i, j) {
                    out[*k] = &out[*k] + &(&ab * s);
                }
            }
        }
        out
    }

    /// Product of three elements, `(xy)z`.
    pub fn mul3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.mul(&self.mul(x, y), z)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        self.field().unit_vector(self.dim(), i)
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    /// Factorwise product in `H^{⊗k}`.
    pub fn mul_power(&self, k: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let total = n.pow(k as u32);
        assert_eq!(x.len(), total);
        assert_eq!(y.len(), total);
        let mut out = self.field().zeros(total);
        let ys: Vec<(usize, &Scalar)> = y.iter().enumerate().filter(|(_, s)| !s.is_zero()).collect();
        let mut digits_x = vec![0usize; k];
        let mut digits_y = vec![0usize; k];
        for (ix, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            decode(ix, n, &mut digits_x);
            for &(iy, b) in &ys {
                decode(iy, n, &mut digits_y);
                // expand the product factor by factor
                let mut terms: Vec<(usize, Scalar)> = vec![(0, a * b)];
                for f in 0..k {
                    let prod = self.basis_product(digits_x[f], digits_y[f]);
                    if prod.is_empty() {
                        terms.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(terms.len() * prod.len());
                    for (idx, c) in &terms {
                        for (m, s) in prod {
                            next.push((idx * n + m, c * s));
                        }
                    }
                    terms = next;
                }
                for (idx, c) in terms {
                    out[idx] = &out[idx] + &c;
                }
            }
        }
        out
    }

    /// Unit of `H^{⊗k}`.
    pub fn one_power(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().one()];
        for _ in 0..k {
            v = super::tensor::outer(&v, &self.unit);
        }
        v
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.mul.get(i, j, k) == self.mul.get(j, i, k))))
    }

    /// `H^op`: transposed multiplication.
    pub fn opposite(&self) -> FinDimAlgebra {
        FinDimAlgebra::new(self.mul.permuted([1, 0, 2]), self.unit.clone()).expect("same shape")
    }

    /// `A ⊗ B` with basis `e_i ⊗ f_j` at index `i·dim(B) + j`.
    pub fn tensor(&self, other: &FinDimAlgebra) -> FinDimAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let unit = super::tensor::outer(&self.unit, &other.unit);
        FinDimAlgebra::from_products(self.field(), n * m, unit, |p, q| {
            let (i, j) = (p / m, p % m);
            let (k, l) = (q / m, q % m);
            let mut out = Vec::new();
            for (a, s) in self.basis_product(i, k) {
                for (b, t) in other.basis_product(j, l) {
                    out.push((a * m + b, s * t));
                }
            }
            out
        })
        .expect("consistent shape")
    }

    /// Structure constants of a subalgebra in the canonical basis of `sub`.
    pub fn restrict(&self, sub: &Subspace) -> Result<FinDimAlgebra> {
        let basis = sub.basis();
        let d = basis.len();
        let unit = sub
            .coordinates(&self.unit)
            .ok_or_else(|| Error::InvalidInput("subspace does not contain the unit".into()))?;
        let mut mul = Tensor3::zeros(self.field(), [d, d, d]);
        for a in 0..d {
            for b in 0..d {
                let p = self.mul(&basis[a], &basis[b]);
                let c = sub
                    .coordinates(&p)
                    .ok_or_else(|| Error::InvalidInput("subspace is not closed under multiplication".into()))?;
                for (k, s) in c.into_iter().enumerate() {
                    mul.set(a, b, k, s);
                }
            }
        }
        FinDimAlgebra::new(mul, unit)
    }
}

pub(crate) fn decode(mut idx: usize, n: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d = idx % n;
        idx /= n;
    }
}

/// Associativity on all basis triples and the two-sided unit law.
pub fn check_algebra(a: &FinDimAlgebra) -> CheckReport {
    let n = a.dim();
    let mut assoc = CheckItem::new("associativity");
    for i in 0..n {
        let ei = a.basis(i);
        for j in 0..n {
            let ej = a.basis(j);
            let ij = a.mul(&ei, &ej);
            for k in 0..n {
                let ek = a.basis(k);
                let lhs = a.mul(&ij, &ek);
                let rhs = a.mul(&ei, &a.mul(&ej, &ek));
                assoc.record(&[i, j, k], &lhs, &rhs);
            }
        }
    }
    let mut left = CheckItem::new("unit-left");
    let mut right = CheckItem::new("unit-right");
    for i in 0..n {
        let ei = a.basis(i);
        left.record(&[i], &a.mul(a.unit(), &ei), &ei);
        right.record(&[i], &a.mul(&ei, a.unit()), &ei);
    }
    CheckReport { items: vec![assoc, left, right] }
}

/// Check that `f` (columns = images of basis vectors of `a`) is an algebra
/// map `a → b`, or an anti-algebra map when `anti` is set.
pub fn check_algebra_hom(f: &Matrix, a: &FinDimAlgebra, b: &FinDimAlgebra, anti: bool) -> CheckReport {
    let mut report = CheckReport::new();
    let mut dims = CheckItem::new("dimensions");
    dims.record_bool(&[], f.cols() == a.dim() && f.rows() == b.dim());
    if !dims.passed {
        report.push(dims);
        return report;
    }
    report.push(dims);
    let n = a.dim();
    let images: Vec<Vec<Scalar>> = f.columns();
    let mut mult = CheckItem::new("multiplicative");
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(&a.mul(&a.basis(i), &a.basis(j)));
            let rhs = if anti { b.mul(&images[j], &images[i]) } else { b.mul(&images[i], &images[j]) };
            mult.record(&[i, j], &lhs, &rhs);
        }
    }
    let mut unital = CheckItem::new("unital");
    unital.record(&[], &f.mul_vec(a.unit()), b.unit());
    report.push(mult);
    report.push(unital);
    report
}

/// Smallest unital subalgebra containing `seeds`.
pub fn generated_subalgebra(a: &FinDimAlgebra, seeds: &[Vec<Scalar>]) -> Result<Subspace> {
    let mut gens = seeds.to_vec();
    gens.push(a.one());
    let mut sub = Subspace::span(a.field(), a.dim(), &gens)?;
    loop {
        let basis = sub.basis().to_vec();
        let mut all = basis.clone();
        for x in &basis {
            for y in &basis {
                all.push(a.mul(x, y));
            }
        }
        let next = Subspace::span(a.field(), a.dim(), &all)?;
        if next.dim() == sub.dim() {
            return Ok(sub);
        }
        sub = next;
    }
}
