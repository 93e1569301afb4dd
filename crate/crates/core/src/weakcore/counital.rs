use super::WeakBialgebra;
use crate::algcore::tensor::{as_matrix, outer};
use crate::algcore::{check_algebra_hom, CheckItem, CheckReport, FinDimAlgebra, LinearMap};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Subspace};
use crate::frobenius::{verify_ifs, FrobeniusSystem};

/// The four counital maps, the counital subalgebras and the idempotent
/// Frobenius system on `H_t` given by `(ε|_{H_t}, (ε_t ⊗ id)Δ(1))`.
///
/// `ifs_t` lives on [`CounitalData::h_t_algebra`], whose basis is the
/// canonical basis of `h_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounitalData {
    pub eps_s: Matrix,
    pub eps_t: Matrix,
    pub eps_s_prime: Matrix,
    pub eps_t_prime: Matrix,
    pub h_s: Subspace,
    pub h_t: Subspace,
    pub ifs_t: FrobeniusSystem,
}

impl CounitalData {
    pub fn h_t_algebra(&self) -> &FinDimAlgebra {
        &self.ifs_t.algebra
    }

    /// Coordinates in the `H_t` basis of a member of `H_t`.
    pub fn t_coords(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        self.h_t.coordinates(x)
    }

    /// The member of `H_t` with the given coordinates.
    pub fn t_element(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.h_t.combine(coords)
    }
}

enum Side {
    /// `Σ c ε(e_a h) e_b`
    T,
    /// `Σ c e_a ε(h e_b)`
    S,
    /// `Σ c e_a ε(e_b h)`
    SPrime,
    /// `Σ c ε(h e_a) e_b`
    TPrime,
}

fn counital_matrix(h: &WeakBialgebra, side: Side) -> Matrix {
    let n = h.dim();
    let e = h.epsilon_products();
    let terms = h.delta_one_terms();
    let mut m = Matrix::zeros(h.field(), n, n);
    for x in 0..n {
        for (a, b, c) in &terms {
            let (row, w) = match side {
                Side::T => (*b, &e[(*a, x)]),
                Side::S => (*a, &e[(x, *b)]),
                Side::SPrime => (*a, &e[(*b, x)]),
                Side::TPrime => (*b, &e[(x, *a)]),
            };
            if !w.is_zero() {
                m[(row, x)] = &m[(row, x)] + &(c * w);
            }
        }
    }
    m
}

/// `ε_s`, `ε_t`, `ε′_s`, `ε′_t`, `H_s`, `H_t` and the target IFS.
pub fn counital_data(h: &WeakBialgebra) -> Result<CounitalData> {
    if !h.is_valid() {
        return Err(Error::InvalidInput("counital_data: input is not a weak bialgebra".into()));
    }
    let eps_t = counital_matrix(h, Side::T);
    let eps_s = counital_matrix(h, Side::S);
    let eps_s_prime = counital_matrix(h, Side::SPrime);
    let eps_t_prime = counital_matrix(h, Side::TPrime);
    let h_t = Subspace::column_space(&eps_t);
    let h_s = Subspace::column_space(&eps_s);
    let algebra = h.algebra.restrict(&h_t)?;
    let phi: Vec<Scalar> = h_t.basis().iter().map(|b| h.epsilon(b)).collect();
    let n = h.dim();
    let d = h_t.dim();
    // e = ε_t(1₁) ⊗ 1₂, re-expressed in H_t coordinates
    let mut e_full = h.field().zeros(n * n);
    for (a, b, c) in h.delta_one_terms() {
        let col = eps_t.column(a);
        for (i, s) in col.iter().enumerate() {
            if !s.is_zero() {
                e_full[i * n + b] = &e_full[i * n + b] + &(&c * s);
            }
        }
    }
    let em = as_matrix(&e_full, h.field(), n, n);
    let piv = h_t.pivots();
    let mut e = h.field().zeros(d * d);
    for (p, &i) in piv.iter().enumerate() {
        for (q, &j) in piv.iter().enumerate() {
            e[p * d + q] = em[(i, j)].clone();
        }
    }
    let ifs_t = FrobeniusSystem::new(algebra, phi, e)?;
    Ok(CounitalData { eps_s, eps_t, eps_s_prime, eps_t_prime, h_s, h_t, ifs_t })
}

/// Left multiplication of a vector in `H⊗H` by `x⊗y`.
fn left_by(h: &WeakBialgebra, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    h.algebra.mul_power(2, &outer(x, y), v)
}

fn right_by(h: &WeakBialgebra, v: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    h.algebra.mul_power(2, v, &outer(x, y))
}

/// Apply `f ⊗ g` to a vector in `H⊗H`.
fn apply_pair(f: &Matrix, g: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    let n = f.cols();
    let vm = as_matrix(v, f.field(), n, n);
    f.matmul(&vm).matmul(&g.transpose()).entries().to_vec()
}

/// Multiply the two factors of a vector in `H⊗H` together, as `x·y` or `y·x`.
fn contract(h: &WeakBialgebra, v: &[Scalar], reversed: bool) -> Vec<Scalar> {
    let n = h.dim();
    let mut out = h.field().zeros(n);
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (a, b) = if reversed { (idx % n, idx / n) } else { (idx / n, idx % n) };
        for (k, s) in h.algebra.basis_product(a, b) {
            out[*k] = &out[*k] + &(c * s);
        }
    }
    out
}

/// The identities satisfied by the counital maps of any weak bialgebra.
pub fn verify_counital_identities(h: &WeakBialgebra) -> Result<CheckReport> {
    let cd = counital_data(h)?;
    let n = h.dim();
    let field = h.field();
    let a = &h.algebra;
    let id = Matrix::identity(field, n);
    let one = h.one();
    let d1 = h.delta_one();
    let mut report = CheckReport::new();

    // h₁ε_s(h₂) = ε_t(h₁)h₂ = ε′_s(h₂)h₁ = h₂ε′_t(h₁) = h
    let mut recon = [CheckItem::new("reconstruct-s"), CheckItem::new("reconstruct-t"), CheckItem::new("reconstruct-s-prime"), CheckItem::new("reconstruct-t-prime")];
    for i in 0..n {
        let x = h.basis(i);
        let d = h.delta(&x);
        recon[0].record(&[i], &contract(h, &apply_pair(&id, &cd.eps_s, &d), false), &x);
        recon[1].record(&[i], &contract(h, &apply_pair(&cd.eps_t, &id, &d), false), &x);
        recon[2].record(&[i], &contract(h, &apply_pair(&id, &cd.eps_s_prime, &d), true), &x);
        recon[3].record(&[i], &contract(h, &apply_pair(&cd.eps_t_prime, &id, &d), true), &x);
    }
    report.items.extend(recon);

    // Δ(x) = x1₁⊗1₂ = 1₁x⊗1₂ on H_t, Δ(y) = 1₁⊗y1₂ = 1₁⊗1₂y on H_s
    let mut on_t = CheckItem::new("delta-on-target");
    for (p, x) in cd.h_t.basis().iter().enumerate() {
        let d = h.delta(x);
        on_t.record(&[p], &d, &left_by(h, x, &one, &d1));
        on_t.record(&[p], &d, &right_by(h, &d1, x, &one));
    }
    let mut on_s = CheckItem::new("delta-on-source");
    for (p, y) in cd.h_s.basis().iter().enumerate() {
        let d = h.delta(y);
        on_s.record(&[p], &d, &left_by(h, &one, y, &d1));
        on_s.record(&[p], &d, &right_by(h, &d1, &one, y));
    }
    report.push(on_t);
    report.push(on_s);

    // ε(gh) = ε(g1₂)ε(1₁h) = ε(gε_t(h)); ε_t(gh) = ε_t(gε_t(h))
    let e = h.epsilon_products();
    let terms = h.delta_one_terms();
    let mut through_t = CheckItem::new("counit-through-target");
    let mut eps_t_through = CheckItem::new("eps-t-through-target");
    for g in 0..n {
        for k in 0..n {
            let mid = terms.iter().fold(field.zero(), |acc, (p, q, c)| &acc + &(c * &(&e[(g, *q)] * &e[(*p, k)])));
            let et = cd.eps_t.column(k);
            let via = h.epsilon(&a.mul(&h.basis(g), &et));
            through_t.record(&[g, k], &[e[(g, k)].clone(), e[(g, k)].clone()], &[mid, via]);
            let lhs = cd.eps_t.mul_vec(&a.mul(&h.basis(g), &h.basis(k)));
            let rhs = cd.eps_t.mul_vec(&a.mul(&h.basis(g), &et));
            eps_t_through.record(&[g, k], &lhs, &rhs);
        }
    }
    report.push(through_t);
    report.push(eps_t_through);

    // x ε_t(h) = ε_t(xh) for x in H_t
    let mut t_linear = CheckItem::new("eps-t-target-linear");
    for (p, x) in cd.h_t.basis().iter().enumerate() {
        for k in 0..n {
            let lhs = a.mul(x, &cd.eps_t.column(k));
            let rhs = cd.eps_t.mul_vec(&a.mul(x, &h.basis(k)));
            t_linear.record(&[p, k], &lhs, &rhs);
        }
    }
    report.push(t_linear);

    let mut epseps = CheckItem::new("epseps");
    epseps.record(&[0], cd.eps_t.matmul(&cd.eps_s_prime).entries(), cd.eps_t.entries());
    epseps.record(&[1], cd.eps_s_prime.matmul(&cd.eps_t).entries(), cd.eps_s_prime.entries());
    report.push(epseps);

    // x ε_t(1₁)⊗1₂ = ε_t(1₁)⊗1₂ x on H_t; 1₁y⊗ε_s(1₂) = 1₁⊗yε_s(1₂) on H_s
    let et1 = apply_pair(&cd.eps_t, &id, &d1);
    let es1 = apply_pair(&id, &cd.eps_s, &d1);
    let mut ht_cas = CheckItem::new("ht-casimir");
    let mut slide = CheckItem::new("slide-across");
    for (p, x) in cd.h_t.basis().iter().enumerate() {
        ht_cas.record(&[p], &left_by(h, x, &one, &et1), &right_by(h, &et1, &one, x));
        let sx = cd.eps_s_prime.mul_vec(x);
        slide.record(&[p], &right_by(h, &d1, &sx, &one), &right_by(h, &d1, &one, x));
    }
    let mut hs_cas = CheckItem::new("hs-casimir");
    for (p, y) in cd.h_s.basis().iter().enumerate() {
        hs_cas.record(&[p], &right_by(h, &es1, y, &one), &left_by(h, &one, y, &es1));
    }
    report.push(ht_cas);
    report.push(hs_cas);
    report.push(slide);

    let mut commute = CheckItem::new("st-commute");
    for (p, x) in cd.h_t.basis().iter().enumerate() {
        for (q, y) in cd.h_s.basis().iter().enumerate() {
            commute.record(&[p, q], &a.mul(x, y), &a.mul(y, x));
        }
    }
    report.push(commute);

    let mut split = CheckItem::new("unit-split");
    split.record(&[0], &apply_pair(&cd.eps_s, &cd.eps_t, &d1), &d1);
    split.record(&[1], &apply_pair(&cd.eps_s_prime, &cd.eps_t_prime, &d1), &d1);
    report.push(split);

    let mut idem = CheckItem::new("idempotents");
    for (i, m) in [&cd.eps_s, &cd.eps_t, &cd.eps_s_prime, &cd.eps_t_prime].into_iter().enumerate() {
        idem.record(&[i], m.matmul(m).entries(), m.entries());
    }
    idem.record_bool(&[4], Subspace::column_space(&cd.eps_t_prime) == cd.h_t);
    idem.record_bool(&[5], Subspace::column_space(&cd.eps_s_prime) == cd.h_s);
    report.push(idem);

    // Δ(1) ∈ H_s ⊗ H_t: columns of the coefficient matrix lie in H_s, rows in H_t
    let mut member = CheckItem::new("delta-one-membership");
    let dm = as_matrix(&d1, field, n, n);
    let cols_ok = dm.columns().iter().all(|c| cd.h_s.contains(c));
    let rows_ok = (0..n).all(|i| cd.h_t.contains(dm.row(i)));
    member.record_bool(&[], cols_ok && rows_ok);
    report.push(member);

    report.extend_prefixed("target-ifs", verify_ifs(&cd.ifs_t));
    Ok(report)
}

/// `ε_t|H_s → H_t` and `ε′_s|H_t → H_s` are mutually inverse algebra
/// antiisomorphisms.
pub fn antiiso_check(h: &WeakBialgebra) -> Result<CheckReport> {
    let cd = counital_data(h)?;
    let a = &h.algebra;
    let mut report = CheckReport::new();
    let pairs = [("eps-t", &cd.eps_t, &cd.h_s, &cd.h_t), ("eps-s-prime", &cd.eps_s_prime, &cd.h_t, &cd.h_s)];
    for (name, map, from, to) in pairs {
        let mut anti = CheckItem::new(format!("{name}-anti"));
        let basis = from.basis();
        for (p, x) in basis.iter().enumerate() {
            for (q, y) in basis.iter().enumerate() {
                let lhs = map.mul_vec(&a.mul(x, y));
                let rhs = a.mul(&map.mul_vec(y), &map.mul_vec(x));
                anti.record(&[p, q], &lhs, &rhs);
            }
        }
        anti.record(&[], &map.mul_vec(a.unit()), a.unit());
        let mut onto = CheckItem::new(format!("{name}-onto"));
        let images: Vec<Vec<Scalar>> = basis.iter().map(|x| map.mul_vec(x)).collect();
        let span = Subspace::span(h.field(), h.dim(), &images)?;
        onto.record_bool(&[], &span == to);
        report.push(anti);
        report.push(onto);
    }
    let mut comp_s = CheckItem::new("composite-s");
    for (p, y) in cd.h_s.basis().iter().enumerate() {
        comp_s.record(&[p], &cd.eps_s_prime.mul_vec(&cd.eps_t.mul_vec(y)), y);
    }
    let mut comp_t = CheckItem::new("composite-t");
    for (p, x) in cd.h_t.basis().iter().enumerate() {
        comp_t.record(&[p], &cd.eps_t.mul_vec(&cd.eps_s_prime.mul_vec(x)), x);
    }
    report.push(comp_s);
    report.push(comp_t);
    Ok(report)
}

/// Weak bialgebra map checks for `f: B → H`: algebra map, `Δf = (f⊗f)Δ`, `εf = ε`.
pub fn check_weak_hom(f: &Matrix, b: &WeakBialgebra, h: &WeakBialgebra) -> CheckReport {
    let mut report = check_algebra_hom(f, &b.algebra, &h.algebra, false);
    if !report.passed("dimensions") {
        return report;
    }
    let mut comult = CheckItem::new("comultiplicative");
    let mut counit = CheckItem::new("counital");
    for i in 0..b.dim() {
        let x = b.basis(i);
        let fx = f.mul_vec(&x);
        comult.record(&[i], &h.delta(&fx), &apply_pair(f, f, &b.delta(&x)));
        counit.record_scalar(&[i], &h.epsilon(&fx), &b.epsilon(&x));
    }
    report.push(comult);
    report.push(counit);
    report
}

/// For a weak bialgebra map `f: B → H`, the map `g(x) = ε(x f(1₁))1₂`
/// from `H_t` to `B_t`, returned as a `dim B × dim H` matrix (defined on
/// all of `H` by the same formula), with checks that it inverts `f` on the
/// target counital subalgebras.
pub fn induced_counital_iso(f: &LinearMap, b: &WeakBialgebra, h: &WeakBialgebra) -> Result<(LinearMap, CheckReport)> {
    let fm = f.matrix();
    if !check_weak_hom(fm, b, h).overall() {
        return Err(Error::NotAHomomorphism);
    }
    let cb = counital_data(b)?;
    let ch = counital_data(h)?;
    let terms = b.delta_one_terms();
    let images: Vec<Vec<Scalar>> = (0..b.dim()).map(|a| fm.mul_vec(&b.basis(a))).collect();
    let g = Matrix::from_fn(h.field(), b.dim(), h.dim(), |row, x| {
        terms.iter().filter(|(_, q, _)| *q == row).fold(h.field().zero(), |acc, (p, _, c)| {
            &acc + &(c * &h.epsilon(&h.mul(&h.basis(x), &images[*p])))
        })
    });
    let mut report = CheckReport::new();
    let mut gf = CheckItem::new("g-after-f");
    for (p, y) in cb.h_t.basis().iter().enumerate() {
        gf.record(&[p], &g.mul_vec(&fm.mul_vec(y)), y);
    }
    let mut fg = CheckItem::new("f-after-g");
    for (p, x) in ch.h_t.basis().iter().enumerate() {
        fg.record(&[p], &fm.mul_vec(&g.mul_vec(x)), x);
    }
    report.push(gf);
    report.push(fg);
    Ok((LinearMap::from(g), report))
}
