//! Weak bialgebras: axioms, counital maps and subalgebras, and the
//! identities they satisfy.

mod counital;

pub use counital::{
    antiiso_check, counital_data, induced_counital_iso, verify_counital_identities, CounitalData,
};

use std::sync::{Arc, OnceLock};

use crate::algcore::tensor::{outer, Tensor3};
use crate::algcore::{check_algebra, check_coalgebra, CheckItem, CheckReport, FinDimAlgebra, FinDimCoalgebra};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};

/// An algebra and a coalgebra on the same space, optionally with an antipode.
#[derive(Clone, Debug)]
pub struct WeakBialgebra {
    pub algebra: FinDimAlgebra,
    pub coalgebra: FinDimCoalgebra,
    pub antipode: Option<Matrix>,
    /// Optional basis labels, used when rendering witnesses.
    pub names: Option<Vec<String>>,
    checked: OnceLock<Arc<CheckReport>>,
}

impl PartialEq for WeakBialgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coalgebra == other.coalgebra && self.antipode == other.antipode
    }
}

impl Eq for WeakBialgebra {}

impl WeakBialgebra {
    pub fn new(algebra: FinDimAlgebra, coalgebra: FinDimCoalgebra, antipode: Option<Matrix>) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::InvalidInput(format!(
                "algebra of dimension {} with coalgebra of dimension {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch(algebra.field(), coalgebra.field()));
        }
        if let Some(s) = &antipode {
            if s.rows() != algebra.dim() || s.cols() != algebra.dim() {
                return Err(Error::InvalidInput("antipode has the wrong shape".into()));
            }
            if s.field() != algebra.field() {
                return Err(Error::FieldMismatch(algebra.field(), s.field()));
            }
        }
        Ok(WeakBialgebra { algebra, coalgebra, antipode, names: None, checked: OnceLock::new() })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        if names.len() == self.dim() {
            self.names = Some(names);
        }
        self
    }

    pub fn with_antipode(mut self, antipode: Option<Matrix>) -> Self {
        self.antipode = antipode;
        self
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    /// Index of the basis element called `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|n| n == name)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        self.algebra.basis(i)
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.algebra.one()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(x, y)
    }

    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.coalgebra.delta(x)
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Scalar {
        self.coalgebra.epsilon(x)
    }

    /// `Δ(1)`.
    pub fn delta_one(&self) -> Vec<Scalar> {
        self.delta(self.algebra.unit())
    }

    /// Nonzero terms `(a, b, c)` of `Δ(1) = Σ c · e_a ⊗ e_b`.
    pub fn delta_one_terms(&self) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        self.delta_one()
            .into_iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| (i / n, i % n, s))
            .collect()
    }

    /// `ε(e_i e_j)` for all basis pairs.
    pub fn epsilon_products(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(self.field(), n, n, |i, j| {
            self.algebra
                .basis_product(i, j)
                .iter()
                .fold(self.field().zero(), |acc, (k, s)| &acc + &(s * &self.coalgebra.counit()[*k]))
        })
    }

    /// Cached [`check_weak_bialgebra`] outcome.
    pub fn is_valid(&self) -> bool {
        self.checked.get_or_init(|| Arc::new(check_weak_bialgebra(self))).overall()
    }

    pub(crate) fn require_valid(&self, context: &str) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            let report = self.checked.get().expect("initialised by is_valid").as_ref().clone();
            Err(Error::AxiomFailure { context: context.into(), report: Box::new(report) })
        }
    }
}

/// Algebra and coalgebra laws, multiplicativity of `Δ`, the four weak
/// axioms and `ε(1₁)1₂ = 1`.
///
/// Item ids: `algebra/*`, `coalgebra/*`, `delta-multiplicative`, `counit-weak-mult`
/// (`ε(fgh) = ε(fg₁)ε(g₂h)`), `counit-weak-mult-opposite` (`ε(fgh) = ε(fg₂)ε(g₁h)`), `unit-weak-comult`
/// (`Δ²(1) = (Δ(1)⊗1)(1⊗Δ(1))`), `unit-weak-comult-opposite` (`Δ²(1) = (1⊗Δ(1))(Δ(1)⊗1)`),
/// `counit-of-unit` (`ε(1₁)1₂ = 1`).
pub fn check_weak_bialgebra(h: &WeakBialgebra) -> CheckReport {
    let n = h.dim();
    let a = &h.algebra;
    let c = &h.coalgebra;
    let mut report = CheckReport::new();
    report.extend_prefixed("algebra", check_algebra(a));
    report.extend_prefixed("coalgebra", check_coalgebra(c));

    let deltas: Vec<Vec<Scalar>> = (0..n).map(|i| c.delta(&a.basis(i))).collect();
    let mut mult = CheckItem::new("delta-multiplicative");
    for i in 0..n {
        for j in 0..n {
            let lhs = c.delta(&a.mul(&a.basis(i), &a.basis(j)));
            let rhs = a.mul_power(2, &deltas[i], &deltas[j]);
            mult.record(&[i, j], &lhs, &rhs);
        }
    }
    report.push(mult);

    let e = h.epsilon_products();
    let field = h.field();
    let mut weak_mult = CheckItem::new("counit-weak-mult");
    let mut weak_mult_op = CheckItem::new("counit-weak-mult-opposite");
    for f in 0..n {
        for g in 0..n {
            let fg = a.basis_product(f, g);
            for k in 0..n {
                let lhs = fg.iter().fold(field.zero(), |acc, (m, s)| &acc + &(s * &e[(*m, k)]));
                let mut r3 = field.zero();
                let mut r4 = field.zero();
                for (jk, s) in c.basis_coproduct(g) {
                    let (p, q) = (jk / n, jk % n);
                    r3 = &r3 + &(s * &(&e[(f, p)] * &e[(q, k)]));
                    r4 = &r4 + &(s * &(&e[(f, q)] * &e[(p, k)]));
                }
                weak_mult.record_scalar(&[f, g, k], &lhs, &r3);
                weak_mult_op.record_scalar(&[f, g, k], &lhs, &r4);
            }
        }
    }
    report.push(weak_mult);
    report.push(weak_mult_op);

    let one = a.one();
    let d1 = h.delta_one();
    let triple = c.delta2(&one);
    let left = outer(&d1, &one);
    let right = outer(&one, &d1);
    let mut weak_comult = CheckItem::new("unit-weak-comult");
    weak_comult.record(&[], &triple, &a.mul_power(3, &left, &right));
    let mut weak_comult_op = CheckItem::new("unit-weak-comult-opposite");
    weak_comult_op.record(&[], &triple, &a.mul_power(3, &right, &left));
    report.push(weak_comult);
    report.push(weak_comult_op);

    // ε(1) itself is not 1 in general (it counts objects for a groupoid)
    let mut unit = CheckItem::new("counit-of-unit");
    let mut et1 = field.zeros(n);
    for (p, q, s) in h.delta_one_terms() {
        let w = &s * &h.epsilon(&a.basis(p));
        crate::exactla::vector::axpy(&mut et1, &w, &a.basis(q));
    }
    unit.record(&[], &et1, &one);
    report.push(unit);
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    Bop,
}

/// `H^op`, `H^cop` or `H^bop`. The antipode of `H^op` and `H^cop` is
/// `S⁻¹` (dropped when `S` is not invertible); `H^bop` keeps `S`.
pub fn variant(h: &WeakBialgebra, which: Variant) -> Result<WeakBialgebra> {
    if !h.is_valid() {
        return Err(Error::InvalidInput("variant: input is not a weak bialgebra".into()));
    }
    let (algebra, coalgebra) = match which {
        Variant::Op => (h.algebra.opposite(), h.coalgebra.clone()),
        Variant::Cop => (h.algebra.clone(), h.coalgebra.co_opposite()),
        Variant::Bop => (h.algebra.opposite(), h.coalgebra.co_opposite()),
    };
    let antipode = match which {
        Variant::Bop => h.antipode.clone(),
        _ => h.antipode.as_ref().and_then(Matrix::inverse),
    };
    let mut out = WeakBialgebra::new(algebra, coalgebra, antipode)?;
    out.names = h.names.clone();
    Ok(out)
}

/// Replace one entry of a structure tensor; used for mutation testing.
pub fn mutate(h: &WeakBialgebra, target: MutationTarget, value: Scalar) -> WeakBialgebra {
    let mut algebra = h.algebra.clone();
    let mut coalgebra = h.coalgebra.clone();
    match target {
        MutationTarget::Mul(i, j, k) => {
            let mut t: Tensor3 = algebra.mul_tensor().clone();
            t.set(i, j, k, value);
            algebra = FinDimAlgebra::new(t, algebra.one()).expect("same shape");
        }
        MutationTarget::Unit(i) => {
            let mut u = algebra.one();
            u[i] = value;
            algebra = FinDimAlgebra::new(algebra.mul_tensor().clone(), u).expect("same shape");
        }
        MutationTarget::Comul(i, j, k) => {
            let mut t = coalgebra.comul_tensor().clone();
            t.set(i, j, k, value);
            coalgebra = FinDimCoalgebra::new(t, coalgebra.counit().to_vec()).expect("same shape");
        }
        MutationTarget::Counit(i) => {
            let mut e = coalgebra.counit().to_vec();
            e[i] = value;
            coalgebra = FinDimCoalgebra::new(coalgebra.comul_tensor().clone(), e).expect("same shape");
        }
    }
    let mut out = WeakBialgebra::new(algebra, coalgebra, h.antipode.clone()).expect("same shape");
    out.names = h.names.clone();
    out
}

/// A single entry of a weak bialgebra's structure tensors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationTarget {
    Mul(usize, usize, usize),
    Unit(usize),
    Comul(usize, usize, usize),
    Counit(usize),
}
