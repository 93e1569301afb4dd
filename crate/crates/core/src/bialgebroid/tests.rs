use super::*;
use crate::frobenius::{compare_frobenius_systems, twist_system};
use crate::zoo::fixtures::*;
use crate::zoo::{enveloping_bialgebroid, matrix_algebra};

const Q: FieldSpec = FieldSpec::Rational;

#[test]
fn pg2_translation() {
    let h = pg2(Q);
    let l = weak_to_bialgebroid(&h).unwrap();
    assert!(check_bialgebroid(&l).overall());
    let t = tensor_over_r(&l).unwrap();
    assert_eq!(t.image.dim(), 8);
    assert_eq!(t.quotient.dim(), 8);
    // the projector is left multiplication by Δ(1)
    assert_eq!(l.projector_element(&l.base), h.delta_one());

    // H_t basis is (g11, g22); C(g12) sends g22 to g11 and kills g11
    let g12 = h.index_of("g12").unwrap();
    let c = &l.counit_c[g12];
    assert_eq!(c.column(1), vec![Q.one(), Q.zero()]);
    assert_eq!(c.column(0), vec![Q.zero(), Q.zero()]);

    let back = bialgebroid_to_weak(&l, &l.base).unwrap();
    assert_eq!(back, h.clone().with_antipode(None));
}

#[test]
fn ordinary_bialgebra_has_trivial_base() {
    let h = k2(Q);
    let l = weak_to_bialgebroid(&h).unwrap();
    assert_eq!(l.base_dim(), 1);
    assert!(tensor_over_r(&l).unwrap().projector.is_identity());
    assert!(check_bialgebroid(&l).overall());
}

#[test]
fn enveloping_of_split_algebra() {
    let l = eb2(Q);
    assert!(check_bialgebroid(&l).overall());
    let t = tensor_over_r(&l).unwrap();
    // Π(g⊗h) = g⊗h when the inner indices agree and 0 otherwise
    assert_eq!(t.image.dim(), 8);
    assert_eq!(t.quotient.dim(), 8);
    let h = bialgebroid_to_weak(&l, &l.base).unwrap();
    // ε(p_a ⊗ p_b) = δ_ab
    assert_eq!(h.coalgebra.counit(), &[Q.one(), Q.zero(), Q.zero(), Q.one()]);
    // Δ(p_a ⊗ p_b) = Σ_i (p_a ⊗ p_i) ⊗ (p_i ⊗ p_b)
    for a in 0..2 {
        for b in 0..2 {
            let mut expect = Q.zeros(16);
            for i in 0..2 {
                expect[(2 * a + i) * 4 + 2 * i + b] = Q.one();
            }
            assert_eq!(h.delta(&h.basis(2 * a + b)), expect);
        }
    }
}

#[test]
fn unnormalised_gamma_fails_item_b() {
    let r = r2(Q);
    let s = eb2(Q).base;
    let l = enveloping_unnormalized(&r, &s).unwrap();
    let rep = check_bialgebroid(&l);
    assert!(!rep.passed("gamma-normalized"));
}

#[test]
fn base_field_enveloping_is_trivial() {
    let r = matrix_algebra(1, Q);
    let s = crate::frobenius::trace_ifs_commutative(&r).unwrap();
    let l = enveloping_bialgebroid(&r, &s).unwrap();
    assert_eq!(l.dim(), 1);
    assert!(check_bialgebroid(&l).overall());
}

#[test]
fn twist_rejects_non_normalised_units() {
    let h = pg2(Q);
    let one = h.one();
    assert_eq!(twist_weak(&h, &one).unwrap(), h.clone().with_antipode(None));
    let mut t = Q.zeros(4);
    t[h.index_of("g11").unwrap()] = Q.one();
    t[h.index_of("g22").unwrap()] = Q.int(2);
    assert!(matches!(twist_weak(&h, &t), Err(Error::BadTwist)));
}

#[test]
fn twisting_matches_change_of_system() {
    let l = ebm2(Q);
    let s1 = l.base.clone();
    // a second IFS with tr(u⁻¹) = 1
    let u = Matrix::from_ints(Q, &[&[2, 1], &[0, 2]]);
    let s2 = crate::frobenius::matrix_ifs(2, &u, Q).unwrap();
    let t = compare_frobenius_systems(&s1, &s2).unwrap();
    assert_eq!(twist_system(&s1, &t).unwrap(), s2);
    let h1 = bialgebroid_to_weak(&l, &s1).unwrap();
    let h2 = bialgebroid_to_weak(&l, &s2).unwrap();
    assert_ne!(h1, h2);
    let t_h = l.src.mul_vec(&t);
    assert_eq!(twist_weak(&h1, &t_h).unwrap(), h2);
}
