//! Dual weak bialgebras and skew pairings, at the weak level and at the
//! bialgebroid level.

use crate::algcore::{CheckItem, CheckReport, FinDimCoalgebra};
use crate::bialgebroid::{bialgebroid_to_weak, FsBialgebroid};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::frobenius::FrobeniusSystem;
use crate::hopf::verify_antipode;
use crate::weakcore::{variant, Variant, WeakBialgebra};

/// `H*`: the dual algebra of the coalgebra `H` and the dual coalgebra of
/// the algebra `H`, in the dual basis. An antipode `S` becomes `Sᵀ`.
pub fn dual_weak_bialgebra(h: &WeakBialgebra) -> Result<WeakBialgebra> {
    if !h.is_valid() {
        return Err(Error::InvalidInput("dual_weak_bialgebra: input is not a weak bialgebra".into()));
    }
    let algebra = h.coalgebra.dual_algebra();
    let coalgebra = FinDimCoalgebra::dual_of(&h.algebra);
    let antipode = h.antipode.as_ref().map(Matrix::transpose);
    let mut out = WeakBialgebra::new(algebra, coalgebra, antipode)?;
    if let Some(names) = &h.names {
        out.names = Some(names.iter().map(|n| format!("d{n}")).collect());
    }
    out.require_valid("dual_weak_bialgebra")?;
    if let Some(s) = &out.antipode {
        let report = verify_antipode(&out, s);
        if !report.overall() {
            return Err(Error::AxiomFailure { context: "dual antipode".into(), report: Box::new(report) });
        }
    }
    Ok(out)
}

/// A bilinear form `τ₀: Λ ⊗ H → k`, stored as a `dim Λ × dim H` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakPairing {
    pub lambda_side: WeakBialgebra,
    pub h_side: WeakBialgebra,
    pub tau0: Matrix,
}

impl WeakPairing {
    pub fn eval(&self, xi: &[Scalar], h: &[Scalar]) -> Scalar {
        crate::exactla::vector::dot(xi, &self.tau0.mul_vec(h))
    }
}

/// `τ₀(ξ|gh) = τ₀(ξ₁|g)τ₀(ξ₂|h)`, `τ₀(ξ|1) = ε(ξ)`,
/// `τ₀(ξζ|h) = τ₀(ζ|h₁)τ₀(ξ|h₂)`, `τ₀(1|h) = ε(h)` on basis tuples.
pub fn check_weak_skew_pairing(p: &WeakPairing) -> CheckReport {
    let lam = &p.lambda_side;
    let h = &p.h_side;
    let (nl, nh) = (lam.dim(), h.dim());
    let t = &p.tau0;
    let field = h.field();
    let mut report = CheckReport::new();
    let mut shape = CheckItem::new("shape");
    shape.record_bool(&[], t.rows() == nl && t.cols() == nh && lam.field() == field);
    let ok = shape.passed;
    report.push(shape);
    if !ok {
        return report;
    }

    let mut mult_h = CheckItem::new("mult-h");
    for xi in 0..nl {
        let d = lam.coalgebra.basis_coproduct(xi);
        for g in 0..nh {
            for k in 0..nh {
                let lhs = crate::exactla::vector::dot(t.row(xi), &h.mul(&h.basis(g), &h.basis(k)));
                let rhs = d.iter().fold(field.zero(), |acc, (ab, c)| {
                    let (a, b) = (ab / nl, ab % nl);
                    &acc + &(c * &(&t[(a, g)] * &t[(b, k)]))
                });
                mult_h.record_scalar(&[xi, g, k], &lhs, &rhs);
            }
        }
    }
    let mut unit_h = CheckItem::new("unit-h");
    for xi in 0..nl {
        unit_h.record_scalar(&[xi], &crate::exactla::vector::dot(t.row(xi), h.algebra.unit()), &lam.coalgebra.counit()[xi]);
    }
    let mut mult_l = CheckItem::new("mult-lambda");
    for xi in 0..nl {
        for zeta in 0..nl {
            let prod = lam.mul(&lam.basis(xi), &lam.basis(zeta));
            for k in 0..nh {
                let lhs = crate::exactla::vector::dot(&prod, &t.column(k));
                let rhs = h.coalgebra.basis_coproduct(k).iter().fold(field.zero(), |acc, (ab, c)| {
                    let (a, b) = (ab / nh, ab % nh);
                    &acc + &(c * &(&t[(zeta, a)] * &t[(xi, b)]))
                });
                mult_l.record_scalar(&[xi, zeta, k], &lhs, &rhs);
            }
        }
    }
    let mut unit_l = CheckItem::new("unit-lambda");
    for k in 0..nh {
        let lhs = crate::exactla::vector::dot(lam.algebra.unit(), &t.column(k));
        unit_l.record_scalar(&[k], &lhs, &h.coalgebra.counit()[k]);
    }
    report.push(mult_h);
    report.push(unit_h);
    report.push(mult_l);
    report.push(unit_l);
    report
}

/// Evaluation of `(H*)^op` on `H`, with nondegeneracy in the left and
/// right argument.
pub fn evaluation_pairing(h: &WeakBialgebra) -> Result<(WeakPairing, (bool, bool))> {
    let dual = dual_weak_bialgebra(h)?;
    let lambda = variant(&dual, Variant::Op)?;
    let tau0 = Matrix::identity(h.field(), h.dim());
    let rank = tau0.rank();
    let flags = (rank == lambda.dim(), rank == h.dim());
    Ok((WeakPairing { lambda_side: lambda, h_side: h.clone(), tau0 }, flags))
}

/// Evaluation of `H*` (without the opposite multiplication) on `H`.
pub fn unopped_evaluation_pairing(h: &WeakBialgebra) -> Result<WeakPairing> {
    let dual = dual_weak_bialgebra(h)?;
    Ok(WeakPairing { lambda_side: dual, h_side: h.clone(), tau0: Matrix::identity(h.field(), h.dim()) })
}

/// An `R`-valued form `τ: Λ ⊗ H → R` between bialgebroids over the same
/// base; `tau[(ξ·dim H + h)·dim R + r]` is the `r`-th coordinate of `τ(ξ|h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebroidPairing {
    pub lambda_side: FsBialgebroid,
    pub h_side: FsBialgebroid,
    pub tau: Vec<Scalar>,
}

impl BialgebroidPairing {
    /// Build `τ` from a rule on basis pairs.
    pub fn from_fn(
        lambda_side: FsBialgebroid,
        h_side: FsBialgebroid,
        mut f: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Self {
        let mut tau = Vec::new();
        for xi in 0..lambda_side.dim() {
            for h in 0..h_side.dim() {
                tau.extend(f(xi, h));
            }
        }
        BialgebroidPairing { lambda_side, h_side, tau }
    }

    /// `τ(ξ|h)` for arbitrary vectors.
    pub fn eval(&self, xi: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        let d = self.lambda_side.base_dim();
        let nh = self.h_side.dim();
        let mut out = self.h_side.field().zeros(d);
        for (i, a) in xi.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in h.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let base = (i * nh + j) * d;
                for (o, t) in out.iter_mut().zip(&self.tau[base..base + d]) {
                    if !t.is_zero() {
                        *o = &*o + &(&ab * t);
                    }
                }
            }
        }
        out
    }
}

/// The form `τ(ξ|h) = C(ξh)(1)` of a bialgebroid with itself.
pub fn counit_pairing(l: &FsBialgebroid) -> BialgebroidPairing {
    let h = &l.total;
    BialgebroidPairing::from_fn(l.clone(), l.clone(), |xi, k| l.counit0(&h.mul(&h.basis(xi), &h.basis(k))))
}

/// (skp.1) on all base-basis quintuples, (skp.2), (skp.3) with the
/// normalised comultiplication representatives, and the two unit laws.
pub fn check_bialgebroid_skew_pairing(p: &BialgebroidPairing) -> CheckReport {
    let lam = &p.lambda_side;
    let hs = &p.h_side;
    let mut report = CheckReport::new();
    let mut shape = CheckItem::new("shape");
    let d = lam.base_dim();
    shape.record_bool(
        &[],
        lam.base == hs.base && p.tau.len() == lam.dim() * hs.dim() * d,
    );
    let ok = shape.passed;
    report.push(shape);
    if !ok {
        return report;
    }
    let (nl, nh) = (lam.dim(), hs.dim());
    let r = lam.base_algebra();
    let lt = &lam.total;
    let ht = &hs.total;

    // τ((r⊗s̄)ξ(t⊗ū)|h)v = r τ(ξ|(t⊗v̄)h(u⊗s̄))
    let mut skp1 = CheckItem::new("skp1");
    let ls: Vec<Vec<Scalar>> = lam.src.columns();
    let ltg: Vec<Vec<Scalar>> = lam.tgt.columns();
    let hsrc: Vec<Vec<Scalar>> = hs.src.columns();
    let htg: Vec<Vec<Scalar>> = hs.tgt.columns();
    for xi in 0..nl {
        for k in 0..nh {
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        for u in 0..d {
                            let left_el = lt.mul(&lt.mul(&ls[a], &ltg[b]), &lt.mul(&lt.mul(&lt.basis(xi), &ls[c]), &ltg[u]));
                            for v in 0..d {
                                let lhs = r.mul(&p.eval(&left_el, &ht.basis(k)), &r.basis(v));
                                let right_el =
                                    ht.mul(&ht.mul(&ht.mul(&hsrc[c], &htg[v]), &ht.basis(k)), &ht.mul(&hsrc[u], &htg[b]));
                                let rhs = r.mul(&r.basis(a), &p.eval(&lt.basis(xi), &right_el));
                                skp1.record(&[xi, k, a, b, c, u, v], &lhs, &rhs);
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(skp1);

    // τ(ξ|gh) = τ(tgt(τ(ξ⁽²⁾|h))ξ⁽¹⁾ | g)
    let mut skp2 = CheckItem::new("skp2");
    for xi in 0..nl {
        let g = lam.gamma.column(xi);
        for a in 0..nh {
            for b in 0..nh {
                let lhs = p.eval(&lt.basis(xi), &ht.mul(&ht.basis(a), &ht.basis(b)));
                let mut rhs = r.field().zeros(d);
                for (idx, c) in g.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (x1, x2) = (idx / nl, idx % nl);
                    let inner = p.eval(&lt.basis(x2), &ht.basis(b));
                    let el = lt.mul(&lam.tgt.mul_vec(&inner), &lt.basis(x1));
                    for (o, v) in rhs.iter_mut().zip(p.eval(&el, &ht.basis(a))) {
                        *o = &*o + &(c * &v);
                    }
                }
                skp2.record(&[xi, a, b], &lhs, &rhs);
            }
        }
    }
    report.push(skp2);

    // τ(ξζ|g) = τ(ξ | src(τ(ζ|g⁽¹⁾))g⁽²⁾)
    let mut skp3 = CheckItem::new("skp3");
    for xi in 0..nl {
        for zeta in 0..nl {
            let prod = lt.mul(&lt.basis(xi), &lt.basis(zeta));
            for k in 0..nh {
                let lhs = p.eval(&prod, &ht.basis(k));
                let g = hs.gamma.column(k);
                let mut rhs = r.field().zeros(d);
                for (idx, c) in g.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (g1, g2) = (idx / nh, idx % nh);
                    let inner = p.eval(&lt.basis(zeta), &ht.basis(g1));
                    let el = ht.mul(&hs.src.mul_vec(&inner), &ht.basis(g2));
                    for (o, v) in rhs.iter_mut().zip(p.eval(&lt.basis(xi), &el)) {
                        *o = &*o + &(c * &v);
                    }
                }
                skp3.record(&[xi, zeta, k], &lhs, &rhs);
            }
        }
    }
    report.push(skp3);

    let mut unit_h = CheckItem::new("unit-h");
    for xi in 0..nl {
        unit_h.record(&[xi], &p.eval(&lt.basis(xi), ht.unit()), &lam.counit0(&lt.basis(xi)));
    }
    let mut unit_l = CheckItem::new("unit-lambda");
    for k in 0..nh {
        unit_l.record(&[k], &p.eval(lt.unit(), &ht.basis(k)), &hs.counit0(&ht.basis(k)));
    }
    report.push(unit_h);
    report.push(unit_l);
    report
}

/// `τ₀ = φ ∘ τ` between the weak bialgebras built with `s` on both sides.
pub fn descend_pairing(p: &BialgebroidPairing, s: &FrobeniusSystem) -> Result<WeakPairing> {
    let report = check_bialgebroid_skew_pairing(p);
    if !report.overall() {
        return Err(Error::AxiomFailure { context: "descend_pairing".into(), report: Box::new(report) });
    }
    let lambda_side = bialgebroid_to_weak(&p.lambda_side, s)?;
    let h_side = bialgebroid_to_weak(&p.h_side, s)?;
    let (nl, nh) = (lambda_side.dim(), h_side.dim());
    let tau0 = Matrix::from_fn(s.field(), nl, nh, |xi, k| {
        s.phi_of(&p.eval(&lambda_side.basis(xi), &h_side.basis(k)))
    });
    Ok(WeakPairing { lambda_side, h_side, tau0 })
}

/// On an enveloping bialgebroid `R ⊗ R^op` paired with a bialgebroid `H`
/// over `R`: `τ(r_a ⊗ r̄_b | h) = r_a · C(h)(r_b)`.
pub fn enveloping_evaluation_candidate(env: &FsBialgebroid, h: &FsBialgebroid) -> BialgebroidPairing {
    let r = env.base_algebra().clone();
    let d = r.dim();
    BialgebroidPairing::from_fn(env.clone(), h.clone(), |xi, k| {
        let (a, b) = (xi / d, xi % d);
        r.mul(&r.basis(a), &h.counit_c[k].mul_vec(&r.basis(b)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::weak_to_bialgebroid;
    use crate::exactla::FieldSpec;
    use crate::weakcore::{check_weak_bialgebra, counital_data, mutate, MutationTarget};
    use crate::zoo::fixtures::*;
    use std::collections::BTreeSet;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn dual_of_pair_groupoid_is_pointwise() {
        let h = pg2(Q);
        let d = dual_weak_bialgebra(&h).unwrap();
        assert!(check_weak_bialgebra(&d).overall());
        // δ_a δ_b = [a = b] δ_a
        for a in 0..4 {
            for b in 0..4 {
                let expect = if a == b { d.basis(a) } else { Q.zeros(4) };
                assert_eq!(d.mul(&d.basis(a), &d.basis(b)), expect);
            }
        }
        // Δ(δ_g11) = δ_g11 ⊗ δ_g11 + δ_g12 ⊗ δ_g21
        let i = |n: &str| h.index_of(n).unwrap();
        let mut expect = Q.zeros(16);
        expect[i("g11") * 4 + i("g11")] = Q.one();
        expect[i("g12") * 4 + i("g21")] = Q.one();
        assert_eq!(d.delta(&d.basis(i("g11"))), expect);
        assert_eq!(d.names.as_ref().unwrap()[0], "dg11");
    }

    #[test]
    fn double_dual_and_counital_exchange() {
        for (name, h) in all_weak(Q) {
            let d = dual_weak_bialgebra(&h).unwrap();
            let dd = dual_weak_bialgebra(&d).unwrap();
            assert_eq!(dd, h, "{name}");
            let (ch, cd) = (counital_data(&h).unwrap(), counital_data(&d).unwrap());
            assert_eq!(cd.h_s.dim(), ch.h_t.dim(), "{name}");
            assert_eq!(cd.h_t.dim(), ch.h_s.dim(), "{name}");
        }
        let k = dual_weak_bialgebra(&k2(Q)).unwrap();
        assert!(k.algebra.is_commutative());
    }

    fn raw_dual(h: &WeakBialgebra) -> WeakBialgebra {
        WeakBialgebra::new(h.coalgebra.dual_algebra(), FinDimCoalgebra::dual_of(&h.algebra), None).unwrap()
    }

    fn failing(report: &CheckReport, id: &str) -> BTreeSet<usize> {
        report.item(id).unwrap().witnesses.iter().flat_map(|w| w.discrepancy.iter().map(|(i, _)| *i)).collect()
    }

    fn failing_triples(report: &CheckReport, id: &str, n: usize) -> BTreeSet<usize> {
        report
            .item(id)
            .unwrap()
            .witnesses
            .iter()
            .map(|w| (w.indices[0] * n + w.indices[1]) * n + w.indices[2])
            .collect()
    }

    // Only products are mutated: with a broken coalgebra the literal forms
    // of the two sides differ by the counit laws.
    #[test]
    fn duality_swaps_weak_axioms() {
        let h = pg2(Q);
        let n = h.dim();
        let targets = [
            MutationTarget::Mul(0, 0, 0),
            MutationTarget::Mul(2, 1, 0),
            MutationTarget::Mul(1, 2, 3),
            MutationTarget::Mul(3, 3, 3),
        ];
        for t in targets {
            let m = mutate(&h, t, Q.int(3));
            let r = check_weak_bialgebra(&m);
            let rd = check_weak_bialgebra(&raw_dual(&m));
            assert_eq!(failing_triples(&r, "counit-weak-mult", n), failing(&rd, "unit-weak-comult"), "{t:?}");
            assert_eq!(failing_triples(&r, "counit-weak-mult-opposite", n), failing(&rd, "unit-weak-comult-opposite"), "{t:?}");
            assert_eq!(failing(&r, "unit-weak-comult"), failing_triples(&rd, "counit-weak-mult", n), "{t:?}");
        }
    }

    #[test]
    fn evaluation_pairings() {
        for h in [pg2(Q), k2(Q), mx(Q)] {
            let (p, flags) = evaluation_pairing(&h).unwrap();
            assert!(check_weak_skew_pairing(&p).overall());
            assert_eq!(flags, (true, true));
        }
        // the plain dual needs cocommutativity of H
        let u = unopped_evaluation_pairing(&pg2_dual(Q)).unwrap();
        assert_eq!(check_weak_skew_pairing(&u).failed_ids(), vec!["mult-lambda"]);
    }

    #[test]
    fn trivial_pairing_through_counits() {
        let h = k2(Q);
        let e = h.coalgebra.counit();
        let tau0 = Matrix::from_fn(Q, 2, 2, |i, j| &e[i] * &e[j]);
        let p = WeakPairing { lambda_side: h.clone(), h_side: h, tau0 };
        assert!(check_weak_skew_pairing(&p).overall());
    }

    #[test]
    fn bialgebroid_pairings() {
        let e = eb2(Q);
        let cand = enveloping_evaluation_candidate(&e, &e);
        assert!(check_bialgebroid_skew_pairing(&cand).overall());
        let w = descend_pairing(&cand, &e.base).unwrap();
        assert!(check_weak_skew_pairing(&w).overall());
        // τ₀(ξ|1) = ε(ξ)
        for xi in 0..w.lambda_side.dim() {
            assert_eq!(w.eval(&w.lambda_side.basis(xi), &w.h_side.one()), w.lambda_side.epsilon(&w.lambda_side.basis(xi)));
        }

        // C(ξh)(1) on the groupoid bialgebroid is not a pairing
        let l = weak_to_bialgebroid(&pg2(Q)).unwrap();
        let r = check_bialgebroid_skew_pairing(&counit_pairing(&l));
        assert_eq!(r.failed_ids(), vec!["skp1", "skp2", "skp3"]);
        assert!(matches!(descend_pairing(&counit_pairing(&l), &l.base), Err(Error::AxiomFailure { .. })));
    }

    #[test]
    fn trivial_base_reduces_to_weak_check() {
        let h = k2(Q);
        let l = weak_to_bialgebroid(&h).unwrap();
        for tau0 in [Matrix::identity(Q, 2), Matrix::from_ints(Q, &[&[1, 1], &[1, -1]]), Matrix::from_ints(Q, &[&[1, 0], &[1, 1]])] {
            let p = BialgebroidPairing::from_fn(l.clone(), l.clone(), |a, b| vec![tau0[(a, b)].clone()]);
            let weak = WeakPairing { lambda_side: h.clone(), h_side: h.clone(), tau0: tau0.clone() };
            assert_eq!(check_bialgebroid_skew_pairing(&p).overall(), check_weak_skew_pairing(&weak).overall());
            if let Ok(d) = descend_pairing(&p, &l.base) {
                assert_eq!(d.tau0, tau0);
            }
        }
    }
}
