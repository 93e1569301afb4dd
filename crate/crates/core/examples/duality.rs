//! Dual weak bialgebras and the evaluation skew pairing.
//!
//!     cargo run --example duality

use wqg::duality::{check_weak_skew_pairing, dual_weak_bialgebra, evaluation_pairing, unopped_evaluation_pairing};
use wqg::exactla::FieldSpec;
use wqg::weakcore::check_weak_bialgebra;
use wqg::zoo::fixtures::{k2, pg2, pg2_dual, pg3};

fn main() -> wqg::Result<()> {
    let q = FieldSpec::Rational;
    for (name, h) in [("PG2", pg2(q)), ("PG3", pg3(q)), ("K2", k2(q)), ("PG2*", pg2_dual(q))] {
        let d = dual_weak_bialgebra(&h)?;
        let (p, (left, right)) = evaluation_pairing(&h)?;
        let un = check_weak_skew_pairing(&unopped_evaluation_pairing(&h)?);
        println!(
            "{name:>4}: dual is weak bialgebra {}, dual antipode = Sᵀ {}, evaluation pairing {} (nondegenerate {left}/{right}), without op {}",
            check_weak_bialgebra(&d).overall(),
            d.antipode == h.antipode.as_ref().map(|s| s.transpose()),
            if check_weak_skew_pairing(&p).overall() { "pass" } else { "fail" },
            if un.overall() { "pass".to_string() } else { format!("fail ({})", un.failed_ids().join(", ")) },
        );
    }
    Ok(())
}
