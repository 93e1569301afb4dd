//! Translates a weak bialgebra into a bialgebroid over its target algebra
//! and back, then shows how a change of Frobenius system on the base twists
//! the resulting weak bialgebra.
//!
//!     cargo run --example bialgebroid_translation

use wqg::bialgebroid::{bialgebroid_to_weak, check_bialgebroid, twist_weak, weak_to_bialgebroid};
use wqg::exactla::{FieldSpec, Matrix};
use wqg::frobenius::{compare_frobenius_systems, matrix_ifs};
use wqg::weakcore::check_weak_bialgebra;
use wqg::zoo::fixtures::{ebm2, pg3};

fn main() -> wqg::Result<()> {
    let q = FieldSpec::Rational;

    let h = pg3(q);
    let l = weak_to_bialgebroid(&h)?;
    println!("PG3: dim {} over a base of dim {}", h.dim(), l.base.dim());
    println!("bialgebroid axioms: {}", if check_bialgebroid(&l).overall() { "pass" } else { "fail" });
    let back = bialgebroid_to_weak(&l, &l.base)?;
    println!("round trip recovers PG3: {}", back == h.clone().with_antipode(None));

    // Same bialgebroid, two separability systems on M2(Q).
    let l = ebm2(q);
    let s1 = l.base.clone();
    let s2 = matrix_ifs(2, &Matrix::from_ints(q, &[&[2, 1], &[0, 2]]), q)?;
    let h1 = bialgebroid_to_weak(&l, &s1)?;
    let h2 = bialgebroid_to_weak(&l, &s2)?;
    let t = compare_frobenius_systems(&s1, &s2)?;
    println!("\nchange of system on M2(Q): t = [{}]", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
    println!("both weak structures satisfy the axioms: {}", check_weak_bialgebra(&h1).overall() && check_weak_bialgebra(&h2).overall());
    println!("weak structures differ: {}", h1 != h2);
    println!("twisting the first by src(t) gives the second: {}", twist_weak(&h1, &l.src.mul_vec(&t))? == h2);
    Ok(())
}
