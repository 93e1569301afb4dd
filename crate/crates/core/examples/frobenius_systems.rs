//! Frobenius systems on small separable algebras: verification, symmetry,
//! and comparison of two systems on the same algebra.
//!
//!     cargo run --example frobenius_systems

use wqg::exactla::{FieldSpec, Matrix, Scalar};
use wqg::frobenius::{compare_frobenius_systems, matrix_ifs, symmetry_flags, trace_ifs_commutative, twist_system, verify_ifs};
use wqg::zoo::product_algebra;

fn show(v: &[Scalar]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() -> wqg::Result<()> {
    let q = FieldSpec::Rational;
    let systems = [
        ("trace on Q×Q×Q", trace_ifs_commutative(&product_algebra(3, q))?),
        ("M2, u = 2I", matrix_ifs(2, &Matrix::identity(q, 2).scale(&q.int(2)), q)?),
        ("M2, u = [[2,1],[0,2]]", matrix_ifs(2, &Matrix::from_ints(q, &[&[2, 1], &[0, 2]]), q)?),
    ];
    for (name, s) in &systems {
        let (theta_id, flip, sym) = symmetry_flags(s)?;
        println!("{name:<22} IFS {:<5} θ = id {theta_id:<5} e flip-invariant {flip:<5} φ symmetric {sym}", verify_ifs(s).overall());
        println!("{:<22} φ = [{}]", "", show(&s.phi));
    }

    let base = &systems[1].1;
    let t: Vec<Scalar> = [1, -1, 0, 1].iter().map(|&x| q.int(x)).collect();
    let twisted = twist_system(base, &t)?;
    println!("\ntwisted by t = [{}]: IFS {}", show(&t), verify_ifs(&twisted).overall());
    println!("recovered t = [{}]", show(&compare_frobenius_systems(base, &twisted)?));
    Ok(())
}
