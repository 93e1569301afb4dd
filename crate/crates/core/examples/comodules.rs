//! Modules and comodules: the monoidal check on module tensor products and
//! the passage between coalgebra comodules and bialgebroid comodules.
//!
//!     cargo run --example comodules

use wqg::exactla::FieldSpec;
use wqg::repcat::{bialgebroid_comodule_to_coalg, coalg_comodule_to_bialgebroid, comodule_check, comodule_tensor, gamma_monoidal_check, module_tensor, regular_module, CoalgComodule};
use wqg::zoo::fixtures::{k2, pg2};

fn main() -> wqg::Result<()> {
    let q = FieldSpec::Rational;
    for (name, h) in [("PG2", pg2(q)), ("K2", k2(q))] {
        let m = regular_module(&h);
        let t = module_tensor(&m, &m)?;
        println!("{name}: regular ⊙ regular has dim {}, monoidal check {}", t.module.dim(), gamma_monoidal_check(&m, &m).overall());
    }

    let h = pg2(q);
    let g = |n: &str| CoalgComodule::grouplike(&h, &h.basis(h.index_of(n).unwrap()));
    println!();
    for n in ["g11", "g12", "g21", "g22"] {
        let c = g(n);
        let b = coalg_comodule_to_bialgebroid(&c)?;
        let back = bialgebroid_comodule_to_coalg(&b)?;
        println!("k_{n}: bialgebroid comodule {}, round trip {}", comodule_check(&b).overall(), back.delta == c.delta);
    }
    println!();
    for (a, b) in [("g12", "g21"), ("g21", "g12"), ("g12", "g12"), ("g11", "g11")] {
        let t = comodule_tensor(&g(a), &g(b))?;
        println!("k_{a} ⊗ k_{b}: dim {} (compressed form dim {})", t.quotient.dim(), t.compressed.dim());
    }
    Ok(())
}
