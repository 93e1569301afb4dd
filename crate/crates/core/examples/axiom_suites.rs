//! Runs the weak bialgebra axiom suite on the built-in instances, then on a
//! copy of PG2 with one structure constant changed.
//!
//!     cargo run --example axiom_suites

use wqg::algcore::CheckReport;
use wqg::cli::weak_report;
use wqg::exactla::FieldSpec;
use wqg::weakcore::{mutate, MutationTarget};
use wqg::zoo::fixtures::{all_weak, pg2};

fn summary(r: &CheckReport) -> String {
    let failed = r.failed_ids();
    if failed.is_empty() {
        format!("{} items pass", r.items.len())
    } else {
        format!("{} of {} items fail: {}", failed.len(), r.items.len(), failed.join(", "))
    }
}

fn main() -> wqg::Result<()> {
    for field in [FieldSpec::Rational, FieldSpec::prime(5)?] {
        for (name, h) in all_weak(field) {
            println!("{name:>6} over {field}: dim {:>2}, {}", h.dim(), summary(&weak_report(&h)?));
        }
    }

    let q = FieldSpec::Rational;
    let broken = mutate(&pg2(q), MutationTarget::Comul(1, 1, 0), q.one());
    let r = weak_report(&broken)?;
    println!("\nPG2 with Δ(g21) perturbed: {}", summary(&r));
    for item in r.items.iter().filter(|i| !i.passed) {
        let w = item.witness().expect("failed items carry a witness");
        let (coord, diff) = &w.discrepancy[0];
        println!("  {:<32} at {:?}: lhs - rhs = {diff} in coordinate {coord}", item.id, w.indices);
    }
    Ok(())
}
