//! Exhaustively verify the candidate idempotent Frobenius system
//! `(tr(u·), Σ e_ij ⊗ u⁻¹e_ji)` on `M_2(F_2)` with `u⁻¹ = [[1,1],[1,0]]`,
//! and every other normalised `u` in `GL_2(F_2)`.
//!
//! It is often asserted that `M_p(k)` in characteristic `p` is separable but
//! has no idempotent Frobenius system. The output records what the
//! exhaustive check finds for this candidate. The committed copy lives at
//! `tests/data/m2_f2_probe.json` and the acceptance suite recomputes it.
//!
//! ```text
//! cargo run --example ifs_probe [-- OUTPUT.json]
//! ```

use serde_json::json;
use wqg::exactla::{FieldSpec, Matrix};
use wqg::frobenius::{matrix_system, verify_ifs_exhaustive};

fn show(m: &Matrix) -> serde_json::Value {
    json!((0..m.rows()).map(|r| m.row(r).iter().map(|s| s.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn main() -> wqg::Result<()> {
    let f2 = FieldSpec::prime(2)?;
    let u_inv = Matrix::from_ints(f2, &[&[1, 1], &[1, 0]]);
    let u = u_inv.inverse().expect("invertible");
    let s = matrix_system(2, &u)?;
    let report = verify_ifs_exhaustive(&s)?;

    let mut normalised = 0;
    let mut passing = 0;
    for bits in 0..16i64 {
        let m = Matrix::from_fn(f2, 2, 2, |i, j| f2.int((bits >> (2 * i + j)) & 1));
        let Some(inv) = m.inverse() else { continue };
        if !(&inv[(0, 0)] + &inv[(1, 1)]).is_one() {
            continue;
        }
        normalised += 1;
        if verify_ifs_exhaustive(&matrix_system(2, &m)?)?.overall() {
            passing += 1;
        }
    }

    let out = json!({
        "algebra": "M_2(F_2)",
        "u_inverse": show(&u_inv),
        "u": show(&u),
        "phi": s.phi.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "e": s.e.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "report": report.to_json(false, None),
        "normalised_candidates": { "count": normalised, "passing": passing },
        "note": "A frequently repeated claim says M_p(k) over a field of characteristic p is separable but not Frobenius-separable. \
                 Every law of an idempotent Frobenius system was checked here on all 16 elements of M_2(F_2); see `report` for the outcome.",
    });
    let text = format!("{}\n", serde_json::to_string_pretty(&out).expect("serializable"));
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
