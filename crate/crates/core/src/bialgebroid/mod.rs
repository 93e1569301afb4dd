//! Bialgebroids (`×_R`-bialgebras) over a base with an idempotent
//! Frobenius system, represented through the projector
//! `Π(g⊗h) = tgt(e¹)g ⊗ src(e²)h` on `H⊗H`, and the translations to and
//! from weak bialgebras.

use crate::algcore::tensor::{apply_block_sparse, outer, sparse_columns};
use crate::algcore::{check_algebra_hom, CheckItem, CheckReport, FinDimAlgebra, FinDimCoalgebra};
use crate::error::{Error, Result};
use crate::exactla::{quotient_by, FieldSpec, Matrix, QuotientSpace, Scalar, Subspace};
use crate::frobenius::{algebra_inverse, verify_ifs, FrobeniusSystem};
use crate::weakcore::{counital_data, WeakBialgebra};

/// A bialgebroid over `R = base.algebra`.
///
/// `gamma` is an `n² × n` matrix holding a representative of the
/// comultiplication normalised by the projector; `counit_c[i]` is the
/// matrix of `C(e_i) ∈ End(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsBialgebroid {
    pub base: FrobeniusSystem,
    pub total: FinDimAlgebra,
    pub src: Matrix,
    pub tgt: Matrix,
    pub gamma: Matrix,
    pub counit_c: Vec<Matrix>,
    pub names: Option<Vec<String>>,
}

impl FsBialgebroid {
    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.total.field()
    }

    pub fn base_algebra(&self) -> &FinDimAlgebra {
        &self.base.algebra
    }

    /// `C(h)` for arbitrary `h`.
    pub fn counit_of(&self, h: &[Scalar]) -> Matrix {
        let d = self.base_dim();
        let mut m = Matrix::zeros(self.field(), d, d);
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.counit_c[i].scale(c));
            }
        }
        m
    }

    /// `C₀(h) = C(h)(1)`.
    pub fn counit0(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.counit_of(h).mul_vec(self.base_algebra().unit())
    }

    pub fn gamma_of(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.gamma.mul_vec(h)
    }

    /// The element `Σ tgt(e¹) ⊗ src(e²)` of `H⊗H` for the system `s`.
    pub fn projector_element(&self, s: &FrobeniusSystem) -> Vec<Scalar> {
        let mut out = self.field().zeros(self.dim() * self.dim());
        for (a, b, c) in s.terms() {
            let t = outer(&self.tgt.column(a), &self.src.column(b));
            for (o, x) in out.iter_mut().zip(t) {
                if !x.is_zero() {
                    *o = &*o + &(&c * &x);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by [`Self::projector_element`] on `H⊗H`.
    pub fn projector_for(&self, s: &FrobeniusSystem) -> Matrix {
        let n = self.dim();
        let mut p = Matrix::zeros(self.field(), n * n, n * n);
        for (a, b, c) in s.terms() {
            let lt = self.total.left_mult(&self.tgt.column(a));
            let ls = self.total.left_mult(&self.src.column(b));
            p = p.add(&lt.kron(&ls).scale(&c));
        }
        p
    }

    pub fn projector(&self) -> Matrix {
        self.projector_for(&self.base)
    }

    /// Balancing relations `tgt(r)g⊗h − g⊗src(r)h` over basis triples.
    pub fn balancing_relations(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let mut rels = Vec::new();
        for r in 0..self.base_dim() {
            let lt = self.total.left_mult(&self.tgt.column(r));
            let ls = self.total.left_mult(&self.src.column(r));
            for g in 0..n {
                for h in 0..n {
                    let mut v = outer(&lt.column(g), &self.total.basis(h));
                    let w = outer(&self.total.basis(g), &ls.column(h));
                    for (x, y) in v.iter_mut().zip(w) {
                        *x = &*x - &y;
                    }
                    rels.push(v);
                }
            }
        }
        rels
    }
}

/// Sparse form of a projector on `H⊗H`, applied blockwise in higher powers.
pub(crate) struct SparseProjector {
    n2: usize,
    cols: Vec<Vec<(usize, Scalar)>>,
    field: FieldSpec,
}

impl SparseProjector {
    pub(crate) fn new(p: &Matrix) -> Self {
        SparseProjector { n2: p.cols(), cols: sparse_columns(p), field: p.field() }
    }

    /// Apply to the factor pair sitting between `outer` and `inner` indices.
    pub(crate) fn apply(&self, v: &[Scalar], outer: usize, inner: usize) -> Vec<Scalar> {
        apply_block_sparse(v, outer, inner, self.n2, self.n2, &self.cols, self.field)
    }
}

/// `H ⊗̃ H` realised both as the image of `Π` and as a quotient of `H⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOverR {
    pub projector: Matrix,
    pub image: Subspace,
    pub quotient: QuotientSpace,
}

pub fn tensor_over_r(l: &FsBialgebroid) -> Result<TensorOverR> {
    if !verify_ifs(&l.base).overall() {
        return Err(Error::BadBase);
    }
    let projector = l.projector();
    if projector.matmul(&projector) != projector {
        return Err(Error::ProjectorNotIdempotent);
    }
    let image = Subspace::column_space(&projector);
    let quotient = quotient_by(l.field(), l.dim() * l.dim(), &l.balancing_relations())?;
    Ok(TensorOverR { projector, image, quotient })
}

/// Axiom items (a)–(g) plus the base IFS:
/// `base-ifs/*`, `src-algebra-map/*`, `tgt-anti-map/*`, `src-tgt-commute`,
/// `gamma-normalized`, `takeuchi`, `gamma-multiplicative`, `gamma-unit`,
/// `gamma-linear-src`, `gamma-linear-tgt`, `coassociativity`,
/// `counit-unit`, `counit-multiplicative`, `counit-src`, `counit-tgt`,
/// `counit-left`, `counit-right`.
pub fn check_bialgebroid(l: &FsBialgebroid) -> CheckReport {
    let n = l.dim();
    let d = l.base_dim();
    let h = &l.total;
    let r = l.base_algebra();
    let mut report = CheckReport::new();
    report.extend_prefixed("base-ifs", verify_ifs(&l.base));
    report.extend_prefixed("src-algebra-map", check_algebra_hom(&l.src, r, h, false));
    report.extend_prefixed("tgt-anti-map", check_algebra_hom(&l.tgt, r, h, true));
    let mut shape = CheckItem::new("shape");
    shape.record_bool(&[], l.gamma.rows() == n * n && l.gamma.cols() == n && l.counit_c.len() == n);
    let shape_ok = shape.passed;
    report.push(shape);
    if !shape_ok || !report.passed("src-algebra-map/dimensions") || !report.passed("tgt-anti-map/dimensions") {
        return report;
    }

    let srcs: Vec<Vec<Scalar>> = l.src.columns();
    let tgts: Vec<Vec<Scalar>> = l.tgt.columns();
    let mut commute = CheckItem::new("src-tgt-commute");
    for a in 0..d {
        for b in 0..d {
            commute.record(&[a, b], &h.mul(&srcs[a], &tgts[b]), &h.mul(&tgts[b], &srcs[a]));
        }
    }
    report.push(commute);

    let pm = l.projector();
    let p = SparseProjector::new(&pm);
    let gammas: Vec<Vec<Scalar>> = l.gamma.columns();
    let one = h.one();

    let mut normal = CheckItem::new("gamma-normalized");
    for (i, g) in gammas.iter().enumerate() {
        normal.record(&[i], &p.apply(g, 1, 1), g);
    }
    report.push(normal);

    let mut tak = CheckItem::new("takeuchi");
    for (i, g) in gammas.iter().enumerate() {
        for x in 0..d {
            let lhs = p.apply(&h.mul_power(2, g, &outer(&tgts[x], &one)), 1, 1);
            let rhs = p.apply(&h.mul_power(2, g, &outer(&one, &srcs[x])), 1, 1);
            tak.record(&[i, x], &lhs, &rhs);
        }
    }
    report.push(tak);

    let mut mult = CheckItem::new("gamma-multiplicative");
    for i in 0..n {
        for j in 0..n {
            let lhs = p.apply(&h.mul_power(2, &gammas[i], &gammas[j]), 1, 1);
            let rhs = l.gamma_of(&h.mul(&h.basis(i), &h.basis(j)));
            mult.record(&[i, j], &lhs, &rhs);
        }
    }
    report.push(mult);
    let mut unit = CheckItem::new("gamma-unit");
    unit.record(&[], &l.gamma_of(&one), &p.apply(&outer(&one, &one), 1, 1));
    report.push(unit);

    let mut lin_s = CheckItem::new("gamma-linear-src");
    let mut lin_t = CheckItem::new("gamma-linear-tgt");
    for a in 0..d {
        for i in 0..n {
            let lhs = l.gamma_of(&h.mul(&srcs[a], &h.basis(i)));
            let rhs = p.apply(&h.mul_power(2, &outer(&srcs[a], &one), &gammas[i]), 1, 1);
            lin_s.record(&[a, i], &lhs, &rhs);
            let lhs = l.gamma_of(&h.mul(&tgts[a], &h.basis(i)));
            let rhs = p.apply(&h.mul_power(2, &outer(&one, &tgts[a]), &gammas[i]), 1, 1);
            lin_t.record(&[a, i], &lhs, &rhs);
        }
    }
    report.push(lin_s);
    report.push(lin_t);

    let gcols = sparse_columns(&l.gamma);
    let triple = |v: &[Scalar]| p.apply(&p.apply(v, 1, n), n, 1);
    let mut coass = CheckItem::new("coassociativity");
    for (i, g) in gammas.iter().enumerate() {
        let left = apply_block_sparse(g, 1, n, n, n * n, &gcols, l.field());
        let right = apply_block_sparse(g, n, 1, n, n * n, &gcols, l.field());
        coass.record(&[i], &triple(&left), &triple(&right));
    }
    report.push(coass);

    report.extend(counit_items(l, &gammas));
    report
}

fn counit_items(l: &FsBialgebroid, gammas: &[Vec<Scalar>]) -> CheckReport {
    let n = l.dim();
    let d = l.base_dim();
    let h = &l.total;
    let r = l.base_algebra();
    let field = l.field();
    let mut report = CheckReport::new();

    let mut unit = CheckItem::new("counit-unit");
    unit.record(&[], l.counit_of(h.unit()).entries(), Matrix::identity(field, d).entries());
    report.push(unit);

    let mut mult = CheckItem::new("counit-multiplicative");
    for i in 0..n {
        for j in 0..n {
            let lhs = l.counit_c[i].matmul(&l.counit_c[j]);
            let rhs = l.counit_of(&h.mul(&h.basis(i), &h.basis(j)));
            mult.record(&[i, j], lhs.entries(), rhs.entries());
        }
    }
    report.push(mult);

    let mut cs = CheckItem::new("counit-src");
    let mut ct = CheckItem::new("counit-tgt");
    for a in 0..d {
        let x = r.basis(a);
        cs.record(&[a], l.counit_of(&l.src.column(a)).entries(), r.left_mult(&x).entries());
        ct.record(&[a], l.counit_of(&l.tgt.column(a)).entries(), r.right_mult(&x).entries());
    }
    report.push(cs);
    report.push(ct);

    // src(C₀(h⁽¹⁾))h⁽²⁾ = h and tgt(C₀(h⁽²⁾))h⁽¹⁾ = h
    let c0: Vec<Vec<Scalar>> = (0..n).map(|i| l.counit0(&h.basis(i))).collect();
    let mut left = CheckItem::new("counit-left");
    let mut right = CheckItem::new("counit-right");
    for (i, g) in gammas.iter().enumerate() {
        let mut lsum = field.zeros(n);
        let mut rsum = field.zeros(n);
        for (idx, c) in g.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (p, q) = (idx / n, idx % n);
            let sl = l.src.mul_vec(&c0[p]);
            let tr = l.tgt.mul_vec(&c0[q]);
            for (o, x) in lsum.iter_mut().zip(h.mul(&sl, &h.basis(q))) {
                *o = &*o + &(c * &x);
            }
            for (o, x) in rsum.iter_mut().zip(h.mul(&tr, &h.basis(p))) {
                *o = &*o + &(c * &x);
            }
        }
        left.record(&[i], &lsum, &h.basis(i));
        right.record(&[i], &rsum, &h.basis(i));
    }
    report.push(left);
    report.push(right);
    report
}

/// The bialgebroid of a weak bialgebra over `R = H_t`: `src` is the
/// inclusion, `tgt = ε′_s|H_t`, `Γ = Δ`, `C(h)(x) = ε_t(hx)`.
pub fn weak_to_bialgebroid(h: &WeakBialgebra) -> Result<FsBialgebroid> {
    let cd = counital_data(h)?;
    let n = h.dim();
    let basis = cd.h_t.basis().to_vec();
    let d = basis.len();
    let src = Matrix::from_columns(h.field(), n, &basis);
    let tgt_cols: Vec<Vec<Scalar>> = basis.iter().map(|x| cd.eps_s_prime.mul_vec(x)).collect();
    let tgt = Matrix::from_columns(h.field(), n, &tgt_cols);
    let gamma = h.coalgebra.delta_matrix();
    let counit_c = (0..n)
        .map(|i| {
            let cols: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|x| {
                    let v = cd.eps_t.mul_vec(&h.mul(&h.basis(i), x));
                    cd.t_coords(&v).expect("ε_t lands in H_t")
                })
                .collect();
            Matrix::from_columns(h.field(), d, &cols)
        })
        .collect();
    let l = FsBialgebroid {
        base: cd.ifs_t.clone(),
        total: h.algebra.clone(),
        src,
        tgt,
        gamma,
        counit_c,
        names: h.names.clone(),
    };
    let p = SparseProjector::new(&l.projector());
    let normalised = l.gamma.columns().iter().all(|g| &p.apply(g, 1, 1) == g);
    if !normalised {
        let mut item = CheckItem::new("gamma-normalized");
        item.record_bool(&[], false);
        return Err(Error::AxiomFailure {
            context: "weak_to_bialgebroid".into(),
            report: Box::new(CheckReport { items: vec![item] }),
        });
    }
    Ok(l)
}

/// The weak bialgebra of a bialgebroid for the IFS `s` on its base:
/// `Δ = Π_s ∘ Γ`, `ε(h) = φ(C(h)(1))`.
pub fn bialgebroid_to_weak(l: &FsBialgebroid, s: &FrobeniusSystem) -> Result<WeakBialgebra> {
    if s.algebra != *l.base_algebra() || !verify_ifs(s).overall() {
        return Err(Error::BadBase);
    }
    let pm = l.projector_for(s);
    let delta = pm.matmul(&l.gamma);
    let counit: Vec<Scalar> = (0..l.dim()).map(|i| s.phi_of(&l.counit0(&l.total.basis(i)))).collect();
    let coalgebra = FinDimCoalgebra::from_matrix(&delta, counit)?;
    let mut h = WeakBialgebra::new(l.total.clone(), coalgebra, None)?;
    h.names = l.names.clone();
    h.require_valid("bialgebroid_to_weak")?;
    Ok(h)
}

/// `Δ_ψ(h) = h₁ ⊗ t⁻¹h₂`, `ε_ψ(h) = ε(th)` for `t ∈ H_t` invertible with
/// `e¹t⁻¹e² = 1`, where `e` is the target IFS element.
pub fn twist_weak(h: &WeakBialgebra, t: &[Scalar]) -> Result<WeakBialgebra> {
    let cd = counital_data(h)?;
    let tc = cd.t_coords(t).ok_or_else(|| Error::InvalidInput("t is not in the target counital subalgebra".into()))?;
    let ht = cd.h_t_algebra();
    let tinv_c = algebra_inverse(ht, &tc).ok_or(Error::NotInvertible)?;
    let tinv = cd.t_element(&tinv_c);
    // e¹ t⁻¹ e² in H_t coordinates
    let mut check = ht.field().zeros(ht.dim());
    for (a, b, c) in cd.ifs_t.terms() {
        let x = ht.mul(&ht.mul(&ht.basis(a), &tinv_c), &ht.basis(b));
        for (o, v) in check.iter_mut().zip(x) {
            *o = &*o + &(&c * &v);
        }
    }
    if check != ht.one() {
        return Err(Error::BadTwist);
    }
    let n = h.dim();
    let lt = h.algebra.left_mult(&tinv);
    let twist = Matrix::identity(h.field(), n).kron(&lt);
    let delta = twist.matmul(&h.coalgebra.delta_matrix());
    let counit: Vec<Scalar> = (0..n).map(|i| h.epsilon(&h.mul(t, &h.basis(i)))).collect();
    let coalgebra = FinDimCoalgebra::from_matrix(&delta, counit)?;
    let mut out = WeakBialgebra::new(h.algebra.clone(), coalgebra, None)?;
    out.names = h.names.clone();
    out.require_valid("twist_weak")?;
    Ok(out)
}

/// See [`crate::zoo::enveloping_bialgebroid`].
pub(crate) fn enveloping(r: &FinDimAlgebra, s: &FrobeniusSystem) -> Result<FsBialgebroid> {
    if s.algebra != *r || !verify_ifs(s).overall() {
        return Err(Error::BadBase);
    }
    let d = r.dim();
    let field = r.field();
    let total = r.tensor(&r.opposite());
    let n = total.dim();
    let src = Matrix::from_columns(field, n, &(0..d).map(|a| outer(&r.basis(a), r.unit())).collect::<Vec<_>>());
    let tgt = Matrix::from_columns(field, n, &(0..d).map(|a| outer(r.unit(), &r.basis(a))).collect::<Vec<_>>());
    let raw = Matrix::from_columns(
        field,
        n * n,
        &(0..n)
            .map(|i| {
                let (a, b) = (i / d, i % d);
                outer(&outer(&r.basis(a), r.unit()), &outer(r.unit(), &r.basis(b)))
            })
            .collect::<Vec<_>>(),
    );
    // C(r_a ⊗ r_b)(x) = r_a x r_b
    let counit_c = (0..n)
        .map(|i| {
            let (a, b) = (i / d, i % d);
            r.left_mult(&r.basis(a)).matmul(&r.right_mult(&r.basis(b)))
        })
        .collect();
    let mut l = FsBialgebroid {
        base: s.clone(),
        total,
        src,
        tgt,
        gamma: raw,
        counit_c,
        names: None,
    };
    l.gamma = l.projector().matmul(&l.gamma);
    Ok(l)
}

/// The enveloping bialgebroid with the raw (unnormalised) comultiplication
/// representative; fails the normalisation item.
pub fn enveloping_unnormalized(r: &FinDimAlgebra, s: &FrobeniusSystem) -> Result<FsBialgebroid> {
    let mut l = enveloping(r, s)?;
    let d = r.dim();
    let n = l.dim();
    l.gamma = Matrix::from_columns(
        r.field(),
        n * n,
        &(0..n)
            .map(|i| outer(&outer(&r.basis(i / d), r.unit()), &outer(r.unit(), &r.basis(i % d))))
            .collect::<Vec<_>>(),
    );
    Ok(l)
}

#[cfg(test)]
mod tests;
