use super::*;
use crate::exactla::FieldSpec;
use crate::zoo::fixtures::*;

const Q: FieldSpec = FieldSpec::Rational;

/// `g_ij ↦ E_ij` on `k²`.
fn column_module(h: &WeakBialgebra) -> HModule {
    let f = h.field();
    let action = (0..4)
        .map(|a| {
            let name = &h.names.as_ref().unwrap()[a];
            let (i, j) = (name.as_bytes()[1] - b'1', name.as_bytes()[2] - b'1');
            Matrix::from_fn(f, 2, 2, |r, c| if (r, c) == (i as usize, j as usize) { f.one() } else { f.zero() })
        })
        .collect();
    HModule { h: h.clone(), action }
}

fn arrow(h: &WeakBialgebra, name: &str) -> Vec<Scalar> {
    h.basis(h.index_of(name).unwrap())
}

#[test]
fn compressed_module_tensors() {
    let h = pg2(Q);
    let reg = regular_module(&h);
    assert_eq!(module_tensor(&reg, &reg).unwrap().carrier.dim(), 8);
    let col = column_module(&h);
    assert!(module_check(&col).overall());
    assert_eq!(module_tensor(&col, &col).unwrap().carrier.dim(), 2);
    let k = k2(Q);
    let rk = regular_module(&k);
    assert_eq!(module_tensor(&rk, &rk).unwrap().carrier.dim(), 4);
}

#[test]
fn monoidal_comparison() {
    let h = pg2(Q);
    let k = k2(Q);
    for (m, n) in [
        (regular_module(&h), regular_module(&h)),
        (regular_module(&k), regular_module(&k)),
        (column_module(&h), column_module(&h)),
        (column_module(&h), regular_module(&h)),
    ] {
        let r = gamma_monoidal_check(&m, &n);
        assert!(r.overall(), "{:?}", r.failed_ids());
    }
    let r = gamma_monoidal_check(&regular_module(&h), &regular_module(&h));
    assert_eq!(r.item("gamma-bijective").unwrap().checked, 1);
}

#[test]
fn comodule_examples() {
    let h = pg2(Q);
    assert!(comodule_check(&CoalgComodule::grouplike(&h, &arrow(&h, "g12"))).overall());
    assert!(comodule_check(&CoalgComodule::regular(&h)).overall());
    let sum = crate::exactla::vector::add_vec(&arrow(&h, "g11"), &arrow(&h, "g12"));
    let bad = comodule_check(&CoalgComodule::grouplike(&h, &sum));
    assert!(!bad.passed("coassociativity"));
}

#[test]
fn grouplike_bimodule() {
    let h = pg2(Q);
    let b = coalg_comodule_to_bialgebroid(&CoalgComodule::grouplike(&h, &arrow(&h, "g12"))).unwrap();
    // base basis (g11, g22): g11·m = m, m·g22 = m, the others vanish
    let one = Matrix::identity(Q, 1);
    let zero = Matrix::zeros(Q, 1, 1);
    assert_eq!(b.left_act, vec![one.clone(), zero.clone()]);
    assert_eq!(b.right_act, vec![zero, one]);
    let k = k2(Q);
    let b = coalg_comodule_to_bialgebroid(&CoalgComodule::grouplike(&k, &arrow(&k, "u"))).unwrap();
    assert_eq!(b.left_act, vec![Matrix::identity(Q, 1)]);
}

#[test]
fn regular_bimodule_is_multiplication() {
    // r·h·s = ε(r h₁ s)h₂ = rhs
    let h = pg2(Q);
    let c = CoalgComodule::regular(&h);
    let cd = counital_data(&h).unwrap();
    for r in cd.h_t.basis() {
        assert_eq!(c.left_by(r), h.algebra.left_mult(r));
        assert_eq!(c.right_by(r), h.algebra.right_mult(r));
    }
}

fn sample_comodules(field: FieldSpec) -> Vec<CoalgComodule> {
    let h = pg2(field);
    let mut out: Vec<CoalgComodule> =
        ["g11", "g12", "g21", "g22"].iter().map(|g| CoalgComodule::grouplike(&h, &arrow(&h, g))).collect();
    out.push(CoalgComodule::regular(&h));
    out.push(CoalgComodule::regular(&k2(field)));
    out.push(CoalgComodule::regular(&pg2_dual(field)));
    out.push(CoalgComodule::regular(&mx(field)));
    out
}

#[test]
fn correspondence_round_trips() {
    for c in sample_comodules(Q) {
        let b = coalg_comodule_to_bialgebroid(&c).unwrap();
        let back = bialgebroid_comodule_to_coalg(&b).unwrap();
        assert_eq!(back.delta, c.delta);
        assert_eq!(back.h, c.h.clone().with_antipode(None));
        let again = coalg_comodule_to_bialgebroid(&back).unwrap();
        assert_eq!(again.lambda, b.lambda);
        assert_eq!((again.left_act, again.right_act), (b.left_act, b.right_act));
    }
}

/// All vectors of `F_p^n`.
fn all_vectors(field: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    let FieldSpec::Prime(p) = field else { unreachable!() };
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let v = field.int((k % p as usize) as i64);
                    k /= p as usize;
                    v
                })
                .collect()
        })
        .collect()
}

fn one_dimensional_count(h: &WeakBialgebra) -> usize {
    let f = h.field();
    let coalg: Vec<CoalgComodule> = all_vectors(f, h.dim())
        .into_iter()
        .map(|g| CoalgComodule::grouplike(h, &g))
        .filter(|c| comodule_check(c).overall())
        .collect();

    let l = weak_to_bialgebroid(h).unwrap();
    let chars = all_vectors(f, l.base_dim());
    let mut bialg = Vec::new();
    for la in &chars {
        for ra in &chars {
            for lam in all_vectors(f, l.dim()) {
                let c = BialgebroidComodule {
                    l: l.clone(),
                    left_act: la.iter().map(|x| Matrix::from_fn(f, 1, 1, |_, _| x.clone())).collect(),
                    right_act: ra.iter().map(|x| Matrix::from_fn(f, 1, 1, |_, _| x.clone())).collect(),
                    lambda: Matrix::from_columns(f, l.dim(), &[lam]),
                };
                if comodule_check(&c).overall() {
                    bialg.push(c);
                }
            }
        }
    }
    assert_eq!(bialg.len(), coalg.len());
    let mapped: Vec<BialgebroidComodule> = coalg.iter().map(|c| coalg_comodule_to_bialgebroid(c).unwrap()).collect();
    for b in &bialg {
        assert_eq!(mapped.iter().filter(|m| m.lambda == b.lambda && m.left_act == b.left_act && m.right_act == b.right_act).count(), 1);
    }
    coalg.len()
}

#[test]
fn one_dimensional_comodules_correspond() {
    let f3 = FieldSpec::prime(3).unwrap();
    // one grouplike per arrow
    assert_eq!(one_dimensional_count(&pg2(f3)), 4);
    // a comatrix coalgebra has no grouplikes
    assert_eq!(one_dimensional_count(&eb2_weak(f3)), 0);
}

#[test]
fn comodule_tensor_products() {
    let h = pg2(Q);
    let g = |n: &str| CoalgComodule::grouplike(&h, &arrow(&h, n));
    let t = comodule_tensor(&g("g12"), &g("g21")).unwrap();
    assert_eq!((t.quotient.dim(), t.compressed.dim()), (1, 1));
    assert_eq!(t.quotient_form.delta.column(0), {
        let mut v = arrow(&h, "g11");
        let s = t.quotient_form.delta[(h.index_of("g11").unwrap(), 0)].clone();
        v[h.index_of("g11").unwrap()] = s;
        v
    });
    assert!(!t.quotient_form.delta[(h.index_of("g11").unwrap(), 0)].is_zero());
    let t = comodule_tensor(&g("g12"), &g("g12")).unwrap();
    assert_eq!((t.quotient.dim(), t.compressed.dim()), (0, 0));
    let k = k2(Q);
    let rk = CoalgComodule::regular(&k);
    let t = comodule_tensor(&rk, &rk).unwrap();
    assert_eq!((t.quotient.dim(), t.compressed.dim()), (4, 4));
    let r = CoalgComodule::regular(&h);
    let t = comodule_tensor(&r, &r).unwrap();
    assert_eq!(t.quotient.dim(), t.compressed.dim());
}

