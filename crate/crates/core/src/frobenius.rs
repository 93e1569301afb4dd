//! Frobenius systems `(φ, e)`, idempotent Frobenius systems, the Frobenius
//! automorphism, comparison of systems and the two standard constructions.

use crate::algcore::tensor::{flip, outer};
use crate::algcore::{check_algebra_hom, CheckItem, CheckReport, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::exactla::vector::{dot, is_zero_vec};
use crate::exactla::{FieldSpec, Matrix, Scalar};

/// A functional `phi` on `R` and an element `e = e¹ ⊗ e²` of `R ⊗ R`,
/// stored flat with `e_i ⊗ e_j` at index `i·dim + j`.
///
/// Laws are not enforced; see [`verify_frobenius_system`] and [`verify_ifs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSystem {
    pub algebra: FinDimAlgebra,
    pub phi: Vec<Scalar>,
    pub e: Vec<Scalar>,
}

impl FrobeniusSystem {
    pub fn new(algebra: FinDimAlgebra, phi: Vec<Scalar>, e: Vec<Scalar>) -> Result<Self> {
        let n = algebra.dim();
        if phi.len() != n || e.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "functional of length {} and element of length {} over an algebra of dimension {n}",
                phi.len(),
                e.len()
            )));
        }
        Ok(FrobeniusSystem { algebra, phi, e })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn phi_of(&self, x: &[Scalar]) -> Scalar {
        dot(&self.phi, x)
    }

    /// Nonzero terms `(a, b, c)` of `e = Σ c · e_a ⊗ e_b`.
    pub fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        self.e
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| (i / n, i % n, s.clone()))
            .collect()
    }

    /// `e` as an `n × n` coefficient matrix.
    pub fn e_matrix(&self) -> Matrix {
        crate::algcore::tensor::as_matrix(&self.e, self.field(), self.dim(), self.dim())
    }

    /// `∇(e) = e¹e²`.
    pub fn nabla_e(&self) -> Vec<Scalar> {
        let mut out = self.field().zeros(self.dim());
        for (a, b, c) in self.terms() {
            for (k, s) in self.algebra.basis_product(a, b) {
                out[*k] = &out[*k] + &(&c * s);
            }
        }
        out
    }

    /// `φ(r e¹) e²`.
    fn left_expand(&self, r: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.field().zeros(self.dim());
        for (a, b, c) in self.terms() {
            let w = &c * &self.phi_of(&self.algebra.mul(r, &self.algebra.basis(a)));
            out[b] = &out[b] + &w;
        }
        out
    }

    /// `e¹ φ(e² r)`.
    fn right_expand(&self, r: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.field().zeros(self.dim());
        for (a, b, c) in self.terms() {
            let w = &c * &self.phi_of(&self.algebra.mul(&self.algebra.basis(b), r));
            out[a] = &out[a] + &w;
        }
        out
    }
}

/// Dual-basis laws `r = φ(re¹)e² = e¹φ(e²r)` and the Casimir law
/// `(x⊗1)e = e(1⊗x)`, each on all basis elements.
pub fn verify_frobenius_system(s: &FrobeniusSystem) -> CheckReport {
    let a = &s.algebra;
    let n = a.dim();
    let mut left = CheckItem::new("dual-basis-left");
    let mut right = CheckItem::new("dual-basis-right");
    let mut casimir = CheckItem::new("casimir");
    let one = a.one();
    for i in 0..n {
        let r = a.basis(i);
        left.record(&[i], &s.left_expand(&r), &r);
        right.record(&[i], &s.right_expand(&r), &r);
        let lhs = a.mul_power(2, &outer(&r, &one), &s.e);
        let rhs = a.mul_power(2, &s.e, &outer(&one, &r));
        casimir.record(&[i], &lhs, &rhs);
    }
    CheckReport { items: vec![left, right, casimir] }
}

/// Frobenius system laws plus `∇(e) = 1`.
pub fn verify_ifs(s: &FrobeniusSystem) -> CheckReport {
    let mut r = verify_frobenius_system(s);
    let mut nabla = CheckItem::new("nabla-one");
    nabla.record(&[], &s.nabla_e(), s.algebra.unit());
    r.push(nabla);
    r
}

/// Every element of `R`, when the field is finite and `|R| ≤ 2¹⁶`.
fn all_elements(a: &FinDimAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let FieldSpec::Prime(p) = a.field() else {
        return Err(Error::InvalidInput("exhaustive verification needs a finite field".into()));
    };
    let n = a.dim() as u32;
    let total = (p as u128).checked_pow(n).filter(|&t| t <= 1 << 16).ok_or_else(|| Error::InvalidInput("algebra too large to enumerate".into()))? as usize;
    Ok((0..total)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let v = a.field().int((k % p as usize) as i64);
                    k /= p as usize;
                    v
                })
                .collect()
        })
        .collect())
}

/// The laws of [`verify_ifs`] on every element of `R` rather than on a
/// basis, plus idempotence of `e` in `R ⊗ R^op`. Finite fields only.
///
/// Items: `all-dual-basis-left`, `all-dual-basis-right`, `all-casimir`,
/// `nabla-one`, `idempotent` (indices of elements are their positions in
/// base-`p` enumeration).
pub fn verify_ifs_exhaustive(s: &FrobeniusSystem) -> Result<CheckReport> {
    let a = &s.algebra;
    let elems = all_elements(a)?;
    let one = a.one();
    let mut left = CheckItem::new("all-dual-basis-left");
    let mut right = CheckItem::new("all-dual-basis-right");
    let mut casimir = CheckItem::new("all-casimir");
    for (k, r) in elems.iter().enumerate() {
        left.record(&[k], &s.left_expand(r), r);
        right.record(&[k], &s.right_expand(r), r);
        casimir.record(&[k], &a.mul_power(2, &outer(r, &one), &s.e), &a.mul_power(2, &s.e, &outer(&one, r)));
    }
    let mut nabla = CheckItem::new("nabla-one");
    nabla.record(&[], &s.nabla_e(), a.unit());
    // (a⊗b)(c⊗d) = ac ⊗ db
    let mut square = s.field().zeros(s.e.len());
    let terms = s.terms();
    for (p, q, c) in &terms {
        for (r, t, d) in &terms {
            let prod = outer(&a.mul(&a.basis(*p), &a.basis(*r)), &a.mul(&a.basis(*t), &a.basis(*q)));
            let w = c * d;
            for (o, x) in square.iter_mut().zip(prod) {
                if !x.is_zero() {
                    *o = &*o + &(&w * &x);
                }
            }
        }
    }
    let mut idem = CheckItem::new("idempotent");
    idem.record(&[], &square, &s.e);
    Ok(CheckReport { items: vec![left, right, casimir, nabla, idem] })
}

/// `θ` with `φ(xy) = φ(yθ(x))`, computed as `θ(x) = φ(xe²)e¹`.
pub fn frobenius_automorphism(s: &FrobeniusSystem) -> Result<Matrix> {
    if !verify_frobenius_system(s).overall() {
        return Err(Error::NotFrobenius);
    }
    let a = &s.algebra;
    let n = a.dim();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let x = a.basis(i);
            let mut out = s.field().zeros(n);
            for (p, q, c) in s.terms() {
                let w = &c * &s.phi_of(&a.mul(&x, &a.basis(q)));
                out[p] = &out[p] + &w;
            }
            out
        })
        .collect();
    Ok(Matrix::from_columns(s.field(), n, &cols))
}

/// Laws satisfied by `θ`: algebra automorphism, `φ(xy) = φ(yθ(x))`, and
/// `(1⊗x)e = e(θ(x)⊗1)`.
pub fn check_frobenius_automorphism(s: &FrobeniusSystem, theta: &Matrix) -> CheckReport {
    let a = &s.algebra;
    let n = a.dim();
    let mut report = CheckReport::new();
    report.extend_prefixed("algebra-map", check_algebra_hom(theta, a, a, false));
    let mut bij = CheckItem::new("bijective");
    bij.record_bool(&[], theta.rank() == n);
    let mut form = CheckItem::new("form-twist");
    let mut swap = CheckItem::new("element-twist");
    let one = a.one();
    for i in 0..n {
        let x = a.basis(i);
        let tx = theta.mul_vec(&x);
        for j in 0..n {
            let y = a.basis(j);
            form.record_scalar(&[i, j], &s.phi_of(&a.mul(&x, &y)), &s.phi_of(&a.mul(&y, &tx)));
        }
        let lhs = a.mul_power(2, &outer(&one, &x), &s.e);
        let rhs = a.mul_power(2, &s.e, &outer(&tx, &one));
        swap.record(&[i], &lhs, &rhs);
    }
    report.push(bij);
    report.push(form);
    report.push(swap);
    report
}

/// The three conditions that each characterize a symmetric system:
/// `(θ = id, flip(e) = e, φ(xy) = φ(yx) for all x, y)`.
pub fn symmetry_flags(s: &FrobeniusSystem) -> Result<(bool, bool, bool)> {
    let theta = frobenius_automorphism(s)?;
    let n = s.dim();
    let a = &s.algebra;
    let flipped = flip(&s.e, n, n) == s.e;
    let form = (0..n).all(|i| {
        (0..n).all(|j| s.phi_of(&a.mul(&a.basis(i), &a.basis(j))) == s.phi_of(&a.mul(&a.basis(j), &a.basis(i))))
    });
    Ok((theta.is_identity(), flipped, form))
}

/// Inverse of `t` in `R`, if any.
pub fn algebra_inverse(a: &FinDimAlgebra, t: &[Scalar]) -> Option<Vec<Scalar>> {
    let x = a.left_mult(t).inverse()?.mul_vec(a.unit());
    (a.mul(&x, t) == a.unit()).then_some(x)
}

/// `(φ(t·), (1⊗t⁻¹)e)` for invertible `t`.
pub fn twist_system(s: &FrobeniusSystem, t: &[Scalar]) -> Result<FrobeniusSystem> {
    let a = &s.algebra;
    let tinv = algebra_inverse(a, t).ok_or(Error::NonInvertibleT)?;
    // φ(t·) is φ composed with left multiplication by t.
    let phi = a.left_mult(t).transpose().mul_vec(&s.phi);
    let e = a.mul_power(2, &outer(&a.one(), &tinv), &s.e);
    FrobeniusSystem::new(a.clone(), phi, e)
}

/// `t = ψ(e¹)e²` relating `s = (φ, e)` and `s2 = (ψ, f)`: `ψ = φ(t·)` and
/// `f = (1⊗t⁻¹)e`. When both are idempotent, also `e¹t⁻¹e² = 1`.
pub fn compare_frobenius_systems(s: &FrobeniusSystem, s2: &FrobeniusSystem) -> Result<Vec<Scalar>> {
    if s.algebra != s2.algebra {
        return Err(Error::InvalidInput("systems live on different algebras".into()));
    }
    if !verify_frobenius_system(s).overall() || !verify_frobenius_system(s2).overall() {
        return Err(Error::NotFrobenius);
    }
    let a = &s.algebra;
    let mut t = s.field().zeros(s.dim());
    for (p, q, c) in s.terms() {
        let w = &c * &s2.phi_of(&a.basis(p));
        t[q] = &t[q] + &w;
    }
    let twisted = twist_system(s, &t)?;
    let mut post = CheckReport::new();
    let mut phi = CheckItem::new("functional");
    phi.record(&[], &twisted.phi, &s2.phi);
    let mut elt = CheckItem::new("element");
    elt.record(&[], &twisted.e, &s2.e);
    post.push(phi);
    post.push(elt);
    if verify_ifs(s).overall() && verify_ifs(s2).overall() {
        let mut norm = CheckItem::new("normalised");
        norm.record(&[], &twisted.nabla_e(), a.unit());
        post.push(norm);
    }
    if !post.overall() {
        return Err(Error::AxiomFailure { context: "compare_frobenius_systems".into(), report: Box::new(post) });
    }
    Ok(t)
}

/// Trace functional on a commutative algebra with the element `e` solved
/// from the dual-basis law.
pub fn trace_ifs_commutative(r: &FinDimAlgebra) -> Result<FrobeniusSystem> {
    if !r.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let n = r.dim();
    let field = r.field();
    let phi: Vec<Scalar> = (0..n)
        .map(|i| {
            let m = r.left_mult(&r.basis(i));
            (0..n).fold(field.zero(), |acc, k| &acc + &m[(k, k)])
        })
        .collect();
    // e = Σ_{ab} x_{ab} e_a ⊗ e_b with Σ_a φ(e_i e_a) x_{ab} = δ_{ib}: G X = I for the Gram matrix G.
    let gram = Matrix::from_fn(field, n, n, |i, a| dot(&phi, &r.mul(&r.basis(i), &r.basis(a))));
    let x = gram
        .solve(&Matrix::identity(field, n))?
        .ok_or_else(|| Error::NotSeparable("trace form is degenerate".into()))?;
    let e: Vec<Scalar> = x.entries().to_vec();
    let s = FrobeniusSystem::new(r.clone(), phi, e)?;
    let report = verify_ifs(&s);
    if !report.overall() {
        return Err(Error::NotSeparable(format!("failed {}", report.failed_ids().join(", "))));
    }
    Ok(s)
}

/// `(tr(u·), Σ e_ij ⊗ u⁻¹e_ji)` on `M_n(k)`, with matrix units `e_ij` at index `i·n + j`.
pub fn matrix_ifs(n: usize, u: &Matrix, field: FieldSpec) -> Result<FrobeniusSystem> {
    if u.field() != field {
        return Err(Error::FieldMismatch(field, u.field()));
    }
    if u.rows() != n || u.cols() != n {
        return Err(Error::InvalidInput(format!("u must be {n}x{n}")));
    }
    let uinv = u.inverse().ok_or(Error::Singular)?;
    let tr = (0..n).fold(field.zero(), |acc, i| &acc + &uinv[(i, i)]);
    if !tr.is_one() {
        return Err(Error::BadNormalization(tr.to_string()));
    }
    let s = matrix_system(n, u)?;
    let report = verify_ifs(&s);
    if !report.overall() {
        return Err(Error::AxiomFailure { context: "matrix_ifs".into(), report: Box::new(report) });
    }
    Ok(s)
}

/// The candidate system `(tr(u·), Σ e_ij ⊗ u⁻¹e_ji)` without any
/// normalisation check or verification.
pub fn matrix_system(n: usize, u: &Matrix) -> Result<FrobeniusSystem> {
    let field = u.field();
    let uinv = u.inverse().ok_or(Error::Singular)?;
    let alg = crate::zoo::matrix_algebra(n, field);
    let dim = n * n;
    // φ(e_kl) = tr(u e_kl) = u_lk
    let phi: Vec<Scalar> = (0..dim).map(|p| u[(p % n, p / n)].clone()).collect();
    let mut e = field.zeros(dim * dim);
    for i in 0..n {
        for j in 0..n {
            // u⁻¹ e_ji = Σ_k (u⁻¹)_kj e_ki
            for k in 0..n {
                let c = &uinv[(k, j)];
                if !c.is_zero() {
                    e[(i * n + j) * dim + (k * n + i)] = c.clone();
                }
            }
        }
    }
    debug_assert!(!is_zero_vec(&e));
    FrobeniusSystem::new(alg, phi, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{matrix_algebra, product_algebra};

    const Q: FieldSpec = FieldSpec::Rational;

    fn q(n: i64) -> Scalar {
        Q.int(n)
    }

    fn trace_m2() -> FrobeniusSystem {
        matrix_system(2, &Matrix::identity(Q, 2)).unwrap()
    }

    #[test]
    fn plain_trace_on_m2_is_frobenius_but_not_idempotent() {
        let s = trace_m2();
        assert!(verify_frobenius_system(&s).overall());
        let r = verify_ifs(&s);
        assert!(!r.passed("nabla-one"));
        assert_eq!(s.nabla_e(), vec![q(2), q(0), q(0), q(2)]);
    }

    #[test]
    fn scaled_trace_is_idempotent() {
        let u = Matrix::identity(Q, 2).scale(&q(2));
        let s = matrix_ifs(2, &u, Q).unwrap();
        assert!(verify_ifs(&s).overall());
        assert_eq!(s.phi, vec![q(2), q(0), q(0), q(2)]);
    }

    #[test]
    fn degenerate_functional_fails_dual_basis() {
        let r = product_algebra(2, Q);
        let e = vec![q(1), q(0), q(0), q(1)];
        let s = FrobeniusSystem::new(r, vec![q(1), q(0)], e).unwrap();
        let rep = verify_frobenius_system(&s);
        assert_eq!(rep.item("dual-basis-left").unwrap().witness().unwrap().indices, vec![1]);
    }

    #[test]
    fn trace_system_of_split_algebras() {
        let s = trace_ifs_commutative(&product_algebra(2, Q)).unwrap();
        assert_eq!(s.phi, vec![q(1), q(1)]);
        assert_eq!(s.e, vec![q(1), q(0), q(0), q(1)]);
        assert!(frobenius_automorphism(&s).unwrap().is_identity());
        let one = trace_ifs_commutative(&product_algebra(1, Q)).unwrap();
        assert_eq!(one.e, vec![q(1)]);
    }

    #[test]
    fn dual_numbers_are_not_separable() {
        let field = Q;
        let unit = vec![field.one(), field.zero()];
        let a = FinDimAlgebra::from_products(field, 2, unit, |i, j| match (i, j) {
            (0, k) | (k, 0) => vec![(k, field.one())],
            _ => vec![],
        })
        .unwrap();
        assert!(matches!(trace_ifs_commutative(&a), Err(Error::NotSeparable(_))));
    }

    #[test]
    fn normalisation_and_singularity_errors() {
        assert!(matches!(matrix_ifs(2, &Matrix::identity(Q, 2), Q), Err(Error::BadNormalization(_))));
        assert!(matches!(matrix_ifs(2, &Matrix::zeros(Q, 2, 2), Q), Err(Error::Singular)));
        let one = matrix_ifs(1, &Matrix::identity(Q, 1), Q).unwrap();
        assert_eq!(one.e, vec![q(1)]);
    }

    #[test]
    fn automorphism_is_conjugation() {
        // u = diag(1, 2): θ(x) = u x u⁻¹
        let u = Matrix::from_ints(Q, &[&[1, 0], &[0, 2]]);
        let s = matrix_system(2, &u).unwrap();
        let theta = frobenius_automorphism(&s).unwrap();
        assert!(check_frobenius_automorphism(&s, &theta).overall());
        let uinv = u.inverse().unwrap();
        let a = matrix_algebra(2, Q);
        for p in 0..4 {
            let x = Matrix::from_fn(Q, 2, 2, |i, j| if i * 2 + j == p { q(1) } else { q(0) });
            let conj = u.matmul(&x).matmul(&uinv);
            assert_eq!(theta.mul_vec(&a.basis(p)), conj.entries().to_vec());
        }
        assert_eq!(symmetry_flags(&s).unwrap(), (false, false, false));
        assert_eq!(symmetry_flags(&trace_m2()).unwrap(), (true, true, true));
    }

    #[test]
    fn comparison_recovers_planted_twist() {
        let base = trace_ifs_commutative(&product_algebra(2, Q)).unwrap();
        assert_eq!(compare_frobenius_systems(&base, &base).unwrap(), vec![q(1), q(1)]);
        let s = matrix_ifs(2, &Matrix::identity(Q, 2).scale(&q(2)), Q).unwrap();
        let t0 = vec![q(1), q(0), q(0), q(3)];
        let s2 = twist_system(&s, &t0).unwrap();
        assert!(verify_frobenius_system(&s2).overall());
        assert_eq!(compare_frobenius_systems(&s, &s2).unwrap(), t0);
    }

    #[test]
    fn exhaustive_verification() {
        let f3 = FieldSpec::prime(3).unwrap();
        let s = trace_ifs_commutative(&product_algebra(2, f3)).unwrap();
        assert!(verify_ifs_exhaustive(&s).unwrap().overall());
        // φ scaled by 2 breaks both dual-basis laws and leaves e alone
        let bad = FrobeniusSystem::new(s.algebra.clone(), s.phi.iter().map(|x| x * &f3.int(2)).collect(), s.e.clone()).unwrap();
        let r = verify_ifs_exhaustive(&bad).unwrap();
        assert_eq!(r.failed_ids(), vec!["all-dual-basis-left", "all-dual-basis-right"]);
        assert!(verify_ifs_exhaustive(&trace_ifs_commutative(&product_algebra(2, Q)).unwrap()).is_err());
    }
}
