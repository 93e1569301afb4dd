//! Solves for antipodes, and shows the rank obstruction on a structure that
//! has none.
//!
//!     cargo run --example antipode_solver

use wqg::bialgebroid::weak_to_bialgebroid;
use wqg::exactla::FieldSpec;
use wqg::hopf::{beta_map, check_tak_hopf, solve_antipode, verify_antipode};
use wqg::zoo::fixtures::mx;
use wqg::zoo::{groupoid_algebra, FiniteGroupoid};
use wqg::Error;

fn main() -> wqg::Result<()> {
    let q = FieldSpec::Rational;
    let g = FiniteGroupoid::pair(2).disjoint_union(&FiniteGroupoid::cyclic(3));
    let h = groupoid_algebra(&g, q)?.with_antipode(None);
    let s = solve_antipode(&h)?;
    println!("groupoid algebra of PG2 ⊔ C3 (dim {}), antipode on the arrows:", h.dim());
    let names = g.names();
    for (a, name) in names.iter().enumerate() {
        let image = s.column(a);
        let b = image.iter().position(|x| !x.is_zero()).unwrap();
        println!("  S({name}) = {}", names[b]);
    }
    println!("antipode axioms: {}", if verify_antipode(&h, &s).overall() { "pass" } else { "fail" });

    let m = mx(q);
    let beta = beta_map(&m)?;
    println!("\nMX: β has rank {} (domain {}, codomain {})", beta.rank, beta.domain.dim(), beta.codomain.dim());
    println!("Takeuchi Hopf condition on the bialgebroid: {}", check_tak_hopf(&weak_to_bialgebroid(&m)?)?);
    match solve_antipode(&m) {
        Err(Error::NotHopf { rank, domain_dim, .. }) => println!("solver: no antipode (rank {rank} of {domain_dim})"),
        other => println!("solver: unexpected {other:?}"),
    }
    Ok(())
}
