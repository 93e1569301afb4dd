//! Modules and comodules: the compressed tensor product `Δ(1)(M⊗N)` of
//! modules and its comparison with `M ⊗_{H_t} N`, comodules over the
//! coalgebra versus comodules over the associated bialgebroid, and the two
//! forms of the comodule tensor product.

use crate::algcore::{CheckItem, CheckReport};
use crate::bialgebroid::{bialgebroid_to_weak, check_bialgebroid, weak_to_bialgebroid, FsBialgebroid, SparseProjector};
use crate::error::{Error, Result};
use crate::exactla::vector::{axpy, sub_vec};
use crate::exactla::{quotient_by, Matrix, QuotientSpace, Scalar, Subspace};
use crate::weakcore::{counital_data, WeakBialgebra};

/// A left module; `action[i]` is the matrix of the basis element `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    pub h: WeakBialgebra,
    pub action: Vec<Matrix>,
}

impl HModule {
    pub fn dim(&self) -> usize {
        self.action.first().map_or(0, Matrix::rows)
    }

    /// Action matrix of an arbitrary element.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(self.h.field(), d, d);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m = m.add(&a.scale(c));
            }
        }
        m
    }

    /// The action on `M⊗N` through `Δ(x)`.
    fn diagonal(&self, other: &HModule, x: &[Scalar]) -> Matrix {
        let n = self.h.dim();
        let mut out = Matrix::zeros(self.h.field(), self.dim() * other.dim(), self.dim() * other.dim());
        for (idx, c) in self.h.delta(x).iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[idx / n].kron(&other.action[idx % n]).scale(c));
            }
        }
        out
    }
}

pub fn regular_module(h: &WeakBialgebra) -> HModule {
    let action = (0..h.dim()).map(|i| h.algebra.left_mult(&h.basis(i))).collect();
    HModule { h: h.clone(), action }
}

/// `shape`, `action-multiplicative`, `unit`.
pub fn module_check(m: &HModule) -> CheckReport {
    let n = m.h.dim();
    let d = m.dim();
    let mut report = CheckReport::new();
    let mut shape = CheckItem::new("shape");
    shape.record_bool(&[], m.action.len() == n && m.action.iter().all(|a| a.rows() == d && a.cols() == d));
    let ok = shape.passed;
    report.push(shape);
    if !ok {
        return report;
    }
    let mut mult = CheckItem::new("action-multiplicative");
    for i in 0..n {
        for j in 0..n {
            let lhs = m.act(&m.h.mul(&m.h.basis(i), &m.h.basis(j)));
            mult.record(&[i, j], lhs.entries(), m.action[i].matmul(&m.action[j]).entries());
        }
    }
    let mut unit = CheckItem::new("unit");
    unit.record(&[], m.act(&m.h.one()).entries(), Matrix::identity(m.h.field(), d).entries());
    report.push(mult);
    report.push(unit);
    report
}

/// `M ⊙ N = Δ(1)(M⊗N)` with the diagonal action, in the canonical basis of
/// `carrier`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTensor {
    pub module: HModule,
    pub carrier: Subspace,
}

fn require_modules(m: &HModule, n: &HModule) -> Result<()> {
    if m.h != n.h || !module_check(m).overall() || !module_check(n).overall() {
        return Err(Error::InvalidInput("modules must be valid and over the same weak bialgebra".into()));
    }
    m.h.require_valid("module tensor")
}

pub fn module_tensor(m: &HModule, n: &HModule) -> Result<ModuleTensor> {
    require_modules(m, n)?;
    let h = &m.h;
    let carrier = Subspace::column_space(&m.diagonal(n, &h.one()));
    let d = carrier.dim();
    let action = (0..h.dim())
        .map(|i| {
            let a = m.diagonal(n, &h.basis(i));
            let cols = carrier
                .basis()
                .iter()
                .map(|v| {
                    carrier
                        .coordinates(&a.mul_vec(v))
                        .ok_or_else(|| Error::IllDefined("diagonal action leaves Δ(1)(M⊗N)".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(h.field(), d, &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    let out = HModule { h: h.clone(), action };
    let report = module_check(&out);
    if !report.overall() {
        return Err(Error::AxiomFailure { context: "module_tensor".into(), report: Box::new(report) });
    }
    Ok(ModuleTensor { module: out, carrier })
}

/// `M ⊗_{H_t} N`, balanced by `ε′_s(r)m ⊗ n = m ⊗ rn`.
fn balanced_module_quotient(m: &HModule, n: &HModule) -> Result<QuotientSpace> {
    let h = &m.h;
    let cd = counital_data(h)?;
    let (dm, dn) = (m.dim(), n.dim());
    let mut rels = Vec::new();
    for r in cd.h_t.basis() {
        let right = m.act(&cd.eps_s_prime.mul_vec(r));
        let left = n.act(r);
        for i in 0..dm {
            for j in 0..dn {
                let a = crate::algcore::tensor::outer(&right.column(i), &h.field().unit_vector(dn, j));
                let b = crate::algcore::tensor::outer(&h.field().unit_vector(dm, i), &left.column(j));
                rels.push(sub_vec(&a, &b));
            }
        }
    }
    quotient_by(h.field(), dm * dn, &rels)
}

/// The identity of `M⊗N` induces an isomorphism of modules from `M ⊙ N`
/// onto `M ⊗_{H_t} N` with `ℓ(m⊗n) = ℓ⁽¹⁾m ⊗ ℓ⁽²⁾n`.
///
/// Items: `modules`, `compressed-closed`, `quotient-well-defined`,
/// `gamma-bijective`, `gamma-linear`.
pub fn gamma_monoidal_check(m: &HModule, n: &HModule) -> CheckReport {
    let mut report = CheckReport::new();
    let mut valid = CheckItem::new("modules");
    valid.record_bool(&[], require_modules(m, n).is_ok());
    let ok = valid.passed;
    report.push(valid);
    if !ok {
        return report;
    }
    let h = &m.h;
    let carrier = Subspace::column_space(&m.diagonal(n, &h.one()));
    let quotient = match balanced_module_quotient(m, n) {
        Ok(q) => q,
        Err(_) => {
            let mut item = CheckItem::new("quotient-well-defined");
            item.record_bool(&[], false);
            report.push(item);
            return report;
        }
    };
    let mut closed = CheckItem::new("compressed-closed");
    let mut well = CheckItem::new("quotient-well-defined");
    let mut linear = CheckItem::new("gamma-linear");
    let actions: Vec<Matrix> = (0..h.dim()).map(|i| m.diagonal(n, &h.basis(i))).collect();
    for (i, a) in actions.iter().enumerate() {
        for (k, v) in carrier.basis().iter().enumerate() {
            closed.record_bool(&[i, k], carrier.contains(&a.mul_vec(v)));
            // γ(ℓ·x) against ℓ·γ(x), the latter computed on the section
            let lhs = quotient.project(&a.mul_vec(v));
            let rhs = quotient.project(&a.mul_vec(&quotient.lift(&quotient.project(v))));
            linear.record(&[i, k], &lhs, &rhs);
        }
        for (k, rel) in quotient.relations.basis().iter().enumerate() {
            well.record_bool(&[i, k], quotient.relations.contains(&a.mul_vec(rel)));
        }
    }
    let mut bij = CheckItem::new("gamma-bijective");
    let cols: Vec<Vec<Scalar>> = carrier.basis().iter().map(|v| quotient.project(v)).collect();
    let gm = Matrix::from_columns(h.field(), quotient.dim(), &cols);
    bij.record_bool(&[carrier.dim(), quotient.dim()], carrier.dim() == quotient.dim() && gm.rank() == carrier.dim());
    for item in [closed, well, bij, linear] {
        report.push(item);
    }
    report
}

/// A left comodule over the coalgebra of `h`; `delta` is `(n·dim M) × dim M`
/// with `e_p ⊗ m_j` at row `p·dim M + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgComodule {
    pub h: WeakBialgebra,
    pub delta: Matrix,
}

impl CoalgComodule {
    pub fn dim(&self) -> usize {
        self.delta.cols()
    }

    /// `δ(m) = g ⊗ m` on a one-dimensional space.
    pub fn grouplike(h: &WeakBialgebra, g: &[Scalar]) -> Self {
        CoalgComodule { h: h.clone(), delta: Matrix::from_columns(h.field(), h.dim(), &[g.to_vec()]) }
    }

    /// `H` with `δ = Δ`.
    pub fn regular(h: &WeakBialgebra) -> Self {
        CoalgComodule { h: h.clone(), delta: h.coalgebra.delta_matrix() }
    }

    /// `m ↦ ε(m₋₁ x)m₀` (right action for `x ∈ H_t`).
    pub fn right_by(&self, x: &[Scalar]) -> Matrix {
        self.contract_counit(|p| self.h.epsilon(&self.h.mul(&self.h.basis(p), x)))
    }

    /// `m ↦ ε(x m₋₁)m₀` (left action for `x ∈ H_t`).
    pub fn left_by(&self, x: &[Scalar]) -> Matrix {
        self.contract_counit(|p| self.h.epsilon(&self.h.mul(x, &self.h.basis(p))))
    }

    fn contract_counit(&self, mut w: impl FnMut(usize) -> Scalar) -> Matrix {
        let d = self.dim();
        let weights: Vec<Scalar> = (0..self.h.dim()).map(&mut w).collect();
        Matrix::from_fn(self.h.field(), d, d, |j, i| {
            let mut s = self.h.field().zero();
            for (p, wp) in weights.iter().enumerate() {
                let c = &self.delta[(p * d + j, i)];
                if !c.is_zero() && !wp.is_zero() {
                    s = &s + &(c * wp);
                }
            }
            s
        })
    }
}

/// A left comodule over a bialgebroid: an `R`-bimodule with a coaction
/// `λ: M → H ⊗_R M` held as its projector-normalised representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebroidComodule {
    pub l: FsBialgebroid,
    pub left_act: Vec<Matrix>,
    pub right_act: Vec<Matrix>,
    pub lambda: Matrix,
}

impl BialgebroidComodule {
    pub fn dim(&self) -> usize {
        self.lambda.cols()
    }

    fn left_of(&self, r: &[Scalar]) -> Matrix {
        combine(&self.left_act, r, self.dim(), self.l.field())
    }

    fn right_of(&self, r: &[Scalar]) -> Matrix {
        combine(&self.right_act, r, self.dim(), self.l.field())
    }

    /// `h⊗m ↦ tgt(e¹)h ⊗ e²m` on `H⊗M`.
    pub fn projector(&self) -> Matrix {
        let n = self.l.dim();
        let d = self.dim();
        let mut p = Matrix::zeros(self.l.field(), n * d, n * d);
        for (a, b, c) in self.l.base.terms() {
            let lt = self.l.total.left_mult(&self.l.tgt.column(a));
            p = p.add(&lt.kron(&self.left_act[b]).scale(&c));
        }
        p
    }
}

fn combine(mats: &[Matrix], coeffs: &[Scalar], d: usize, field: crate::exactla::FieldSpec) -> Matrix {
    let mut m = Matrix::zeros(field, d, d);
    for (c, a) in coeffs.iter().zip(mats) {
        if !c.is_zero() {
            m = m.add(&a.scale(c));
        }
    }
    m
}

pub trait Comodule {
    fn check(&self) -> CheckReport;
}

pub fn comodule_check<C: Comodule>(c: &C) -> CheckReport {
    c.check()
}

impl Comodule for CoalgComodule {
    /// `shape`, `coassociativity`, `counit`, and when the weak bialgebra
    /// is valid the bimodule laws of `rms = ε(r m₋₁ s)m₀` (`bimodule-left`,
    /// `bimodule-right`, `bimodule-commute`) and `unit-absorption`
    /// (`m₋₁1₁ ⊗ m₀1₂ = m₋₁ ⊗ m₀`).
    fn check(&self) -> CheckReport {
        let h = &self.h;
        let n = h.dim();
        let d = self.dim();
        let field = h.field();
        let mut report = CheckReport::new();
        let mut shape = CheckItem::new("shape");
        shape.record_bool(&[], self.delta.rows() == n * d && self.delta.field() == field);
        let ok = shape.passed;
        report.push(shape);
        if !ok {
            return report;
        }
        let dm = h.coalgebra.delta_matrix();
        let mut coass = CheckItem::new("coassociativity");
        let mut counit = CheckItem::new("counit");
        let deltas = self.delta.columns();
        for (i, v) in deltas.iter().enumerate() {
            let lhs = crate::algcore::tensor::apply_block(v, 1, d, &dm);
            let rhs = crate::algcore::tensor::apply_block(v, n, 1, &self.delta);
            coass.record(&[i], &lhs, &rhs);
            let mut back = field.zeros(d);
            for (idx, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let w = c * &h.coalgebra.counit()[idx / d];
                    back[idx % d] = &back[idx % d] + &w;
                }
            }
            counit.record(&[i], &back, &field.unit_vector(d, i));
        }
        report.push(coass);
        report.push(counit);

        let Ok(cd) = counital_data(h) else {
            return report;
        };
        let rs = cd.h_t.basis();
        let mut bl = CheckItem::new("bimodule-left");
        let mut br = CheckItem::new("bimodule-right");
        let mut bc = CheckItem::new("bimodule-commute");
        for (a, r) in rs.iter().enumerate() {
            for (b, s) in rs.iter().enumerate() {
                let rs_ = h.mul(r, s);
                bl.record(&[a, b], self.left_by(&rs_).entries(), self.left_by(r).matmul(&self.left_by(s)).entries());
                br.record(&[a, b], self.right_by(&rs_).entries(), self.right_by(s).matmul(&self.right_by(r)).entries());
                bc.record(
                    &[a, b],
                    self.left_by(r).matmul(&self.right_by(s)).entries(),
                    self.right_by(s).matmul(&self.left_by(r)).entries(),
                );
            }
        }
        let mut absorb = CheckItem::new("unit-absorption");
        let rights: Vec<Matrix> = (0..n).map(|b| self.right_by(&h.basis(b))).collect();
        let d1 = h.delta_one_terms();
        for (i, v) in deltas.iter().enumerate() {
            let mut out = field.zeros(n * d);
            for (idx, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (p, j) = (idx / d, idx % d);
                for (a, b, w) in &d1 {
                    let left = h.mul(&h.basis(p), &h.basis(*a));
                    let right = rights[*b].column(j);
                    let cw = c * w;
                    axpy(&mut out, &cw, &crate::algcore::tensor::outer(&left, &right));
                }
            }
            absorb.record(&[i], &out, v);
        }
        for item in [bl, br, bc, absorb] {
            report.push(item);
        }
        report
    }
}

impl Comodule for BialgebroidComodule {
    /// `shape`, `base-left-module`, `base-right-module`, `bimodule-commute`,
    /// `bimodule-unit`, `lambda-normalized`, `lambda-left-linear`,
    /// `lambda-right-linear`, `takeuchi`, `coassociativity`, `counit`.
    ///
    /// `H ⊗_R M` is an `R`-bimodule through `r·(h⊗m)·s = src(r)h src(s) ⊗ m`.
    fn check(&self) -> CheckReport {
        let l = &self.l;
        let n = l.dim();
        let dr = l.base_dim();
        let d = self.dim();
        let field = l.field();
        let r = l.base_algebra();
        let mut report = CheckReport::new();
        let mut shape = CheckItem::new("shape");
        shape.record_bool(
            &[],
            self.lambda.rows() == n * d
                && self.left_act.len() == dr
                && self.right_act.len() == dr
                && self.left_act.iter().chain(&self.right_act).all(|m| m.rows() == d && m.cols() == d),
        );
        let ok = shape.passed;
        report.push(shape);
        if !ok {
            return report;
        }
        let mut lm = CheckItem::new("base-left-module");
        let mut rm = CheckItem::new("base-right-module");
        let mut bc = CheckItem::new("bimodule-commute");
        for a in 0..dr {
            for b in 0..dr {
                let ab = r.mul(&r.basis(a), &r.basis(b));
                lm.record(&[a, b], self.left_of(&ab).entries(), self.left_act[a].matmul(&self.left_act[b]).entries());
                rm.record(&[a, b], self.right_of(&ab).entries(), self.right_act[b].matmul(&self.right_act[a]).entries());
                bc.record(
                    &[a, b],
                    self.left_act[a].matmul(&self.right_act[b]).entries(),
                    self.right_act[b].matmul(&self.left_act[a]).entries(),
                );
            }
        }
        let mut unit = CheckItem::new("bimodule-unit");
        let id = Matrix::identity(field, d);
        unit.record(&[0], self.left_of(r.unit()).entries(), id.entries());
        unit.record(&[1], self.right_of(r.unit()).entries(), id.entries());
        for item in [lm, rm, bc, unit] {
            report.push(item);
        }

        let pm = self.projector();
        let lambdas = self.lambda.columns();
        let mut normal = CheckItem::new("lambda-normalized");
        for (i, v) in lambdas.iter().enumerate() {
            normal.record(&[i], &pm.mul_vec(v), v);
        }
        // λ(r·m·s) = src(r) m₋₁ src(s) ⊗ m₀ and m₋₁ tgt(s) ⊗ m₀ = m₋₁ ⊗ m₀·s
        let mut lin_l = CheckItem::new("lambda-left-linear");
        let mut lin_r = CheckItem::new("lambda-right-linear");
        let mut tak = CheckItem::new("takeuchi");
        let idm = Matrix::identity(field, d);
        let idn = Matrix::identity(field, n);
        for a in 0..dr {
            let src_left = l.total.left_mult(&l.src.column(a)).kron(&idm);
            let src_right = l.total.right_mult(&l.src.column(a)).kron(&idm);
            let tgt_right = l.total.right_mult(&l.tgt.column(a)).kron(&idm);
            let on_m = idn.kron(&self.right_act[a]);
            for (i, v) in lambdas.iter().enumerate() {
                let lhs = self.lambda.mul_vec(&self.left_act[a].column(i));
                lin_l.record(&[a, i], &lhs, &pm.mul_vec(&src_left.mul_vec(v)));
                let lhs = self.lambda.mul_vec(&self.right_act[a].column(i));
                lin_r.record(&[a, i], &lhs, &pm.mul_vec(&src_right.mul_vec(v)));
                tak.record(&[a, i], &pm.mul_vec(&tgt_right.mul_vec(v)), &pm.mul_vec(&on_m.mul_vec(v)));
            }
        }
        report.push(normal);
        report.push(lin_l);
        report.push(lin_r);
        report.push(tak);

        // (Γ⊗id)λ = (id⊗λ)λ after normalising both tensor positions
        let hp = SparseProjector::new(&l.projector());
        let mp = crate::algcore::tensor::sparse_columns(&pm);
        let normalise = |v: &[Scalar]| {
            let v = crate::algcore::tensor::apply_block_sparse(v, n, 1, n * d, n * d, &mp, field);
            hp.apply(&v, 1, d)
        };
        let mut coass = CheckItem::new("coassociativity");
        let mut counit = CheckItem::new("counit");
        let c0: Vec<Vec<Scalar>> = (0..n).map(|p| l.counit0(&l.total.basis(p))).collect();
        for (i, v) in lambdas.iter().enumerate() {
            let lhs = crate::algcore::tensor::apply_block(v, 1, d, &l.gamma);
            let rhs = crate::algcore::tensor::apply_block(v, n, 1, &self.lambda);
            coass.record(&[i], &normalise(&lhs), &normalise(&rhs));
            let mut back = field.zeros(d);
            for (idx, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let x = self.left_of(&c0[idx / d]).column(idx % d);
                    axpy(&mut back, c, &x);
                }
            }
            counit.record(&[i], &back, &field.unit_vector(d, i));
        }
        report.push(coass);
        report.push(counit);
        report
    }
}

/// The bimodule `rms = ε(r m₋₁ s)m₀` over `H_t` and `λ = Π ∘ δ`.
pub fn coalg_comodule_to_bialgebroid(m: &CoalgComodule) -> Result<BialgebroidComodule> {
    if !comodule_check(m).overall() {
        return Err(Error::InvalidInput("coalg_comodule_to_bialgebroid: not a comodule".into()));
    }
    let l = weak_to_bialgebroid(&m.h)?;
    let rs = l.src.columns();
    let left_act: Vec<Matrix> = rs.iter().map(|r| m.left_by(r)).collect();
    let right_act: Vec<Matrix> = rs.iter().map(|r| m.right_by(r)).collect();
    let mut out = BialgebroidComodule { l, left_act, right_act, lambda: m.delta.clone() };
    out.lambda = out.projector().matmul(&m.delta);
    let report = comodule_check(&out);
    if !report.overall() {
        return Err(Error::AxiomFailure { context: "coalg_comodule_to_bialgebroid".into(), report: Box::new(report) });
    }
    Ok(out)
}

/// `δ(m) = tgt(e¹)m₋₁ ⊗ e²m₀` over the weak bialgebra of the bialgebroid
/// for its own base system.
pub fn bialgebroid_comodule_to_coalg(m: &BialgebroidComodule) -> Result<CoalgComodule> {
    if !comodule_check(m).overall() || !check_bialgebroid(&m.l).overall() {
        return Err(Error::InvalidInput("bialgebroid_comodule_to_coalg: not a comodule".into()));
    }
    let h = bialgebroid_to_weak(&m.l, &m.l.base)?;
    let out = CoalgComodule { h, delta: m.projector().matmul(&m.lambda) };
    let report = comodule_check(&out);
    if !report.overall() {
        return Err(Error::AxiomFailure { context: "bialgebroid_comodule_to_coalg".into(), report: Box::new(report) });
    }
    Ok(out)
}

/// Both forms of `M ⊗_R N` for comodules over a weak bialgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleTensor {
    /// `M⊗N` modulo `mr ⊗ n − m ⊗ rn`.
    pub quotient: QuotientSpace,
    /// The quotient with `m⊗n ↦ m₋₁n₋₁ ⊗ m₀⊗n₀`, in quotient coordinates.
    pub quotient_form: CoalgComodule,
    /// `span{ε(m₋₁n₋₁)m₀⊗n₀}` inside `M⊗N`.
    pub compressed: Subspace,
    /// The isomorphism from the quotient onto `compressed`, in coordinates.
    pub identification: Matrix,
}

pub fn comodule_tensor(m: &CoalgComodule, n: &CoalgComodule) -> Result<ComoduleTensor> {
    if m.h != n.h || !comodule_check(m).overall() || !comodule_check(n).overall() {
        return Err(Error::InvalidInput("comodule_tensor: comodules must be valid and over the same weak bialgebra".into()));
    }
    let h = &m.h;
    let field = h.field();
    let cd = counital_data(h)?;
    let (dm, dn, nh) = (m.dim(), n.dim(), h.dim());
    let dt = dm * dn;

    let mut rels = Vec::new();
    for r in cd.h_t.basis() {
        let right = m.right_by(r);
        let left = n.left_by(r);
        for i in 0..dm {
            for j in 0..dn {
                let a = crate::algcore::tensor::outer(&right.column(i), &field.unit_vector(dn, j));
                let b = crate::algcore::tensor::outer(&field.unit_vector(dm, i), &left.column(j));
                rels.push(sub_vec(&a, &b));
            }
        }
    }
    let quotient = quotient_by(field, dt, &rels)?;

    // δ on M⊗N: m⊗n ↦ m₋₁n₋₁ ⊗ m₀ ⊗ n₀, rows (p, i, j)
    let mut big = Matrix::zeros(field, nh * dt, dt);
    for i in 0..dm {
        let dmi = m.delta.column(i);
        for j in 0..dn {
            let dnj = n.delta.column(j);
            for (x, c) in dmi.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (y, e) in dnj.iter().enumerate() {
                    if e.is_zero() {
                        continue;
                    }
                    let ce = c * e;
                    let (p, i0, q, j0) = (x / dm, x % dm, y / dn, y % dn);
                    for (k, s) in h.algebra.basis_product(p, q) {
                        let row = k * dt + i0 * dn + j0;
                        let col = i * dn + j;
                        big[(row, col)] = &big[(row, col)] + &(&ce * s);
                    }
                }
            }
        }
    }
    let proj = Matrix::identity(field, nh).kron(&quotient.projection);
    for rel in quotient.relations.basis() {
        if !crate::exactla::vector::is_zero_vec(&proj.mul_vec(&big.mul_vec(rel))) {
            return Err(Error::IllDefined("coaction does not descend to M ⊗_R N".into()));
        }
    }
    let delta = proj.matmul(&big).matmul(&quotient.section);
    let quotient_form = CoalgComodule { h: h.clone(), delta };
    let report = comodule_check(&quotient_form);
    if !report.overall() {
        return Err(Error::AxiomFailure { context: "comodule_tensor".into(), report: Box::new(report) });
    }

    // E(m⊗n) = ε(m₋₁n₋₁)m₀⊗n₀
    let e = Matrix::from_fn(field, dt, dt, |row, col| {
        let mut s = field.zero();
        for p in 0..nh {
            let c = &big[(p * dt + row, col)];
            if !c.is_zero() {
                s = &s + &(c * &h.coalgebra.counit()[p]);
            }
        }
        s
    });
    let compressed = Subspace::column_space(&e);
    for rel in quotient.relations.basis() {
        if !crate::exactla::vector::is_zero_vec(&e.mul_vec(rel)) {
            return Err(Error::IllDefined("compression does not vanish on the balancing relations".into()));
        }
    }
    let cols: Vec<Vec<Scalar>> = quotient
        .section
        .columns()
        .iter()
        .map(|v| compressed.coordinates(&e.mul_vec(v)).expect("image of E"))
        .collect();
    let identification = Matrix::from_columns(field, compressed.dim(), &cols);
    if identification.rows() != identification.cols() || identification.rank() != quotient.dim() {
        return Err(Error::IllDefined("compressed form is not isomorphic to the balanced tensor product".into()));
    }
    Ok(ComoduleTensor { quotient, quotient_form, compressed, identification })
}

#[cfg(test)]
mod tests;
