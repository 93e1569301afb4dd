//! Writes structures to the text format, reads them back and runs the
//! check suite on the loaded copy.
//!
//!     cargo run --example structure_files -- [output-dir]

use wqg::cli::structure_report;
use wqg::exactla::FieldSpec;
use wqg::format::{self, Structure};
use wqg::zoo::fixtures::{ebm2, m2_scaled_trace, pg2};
use wqg::zoo::FiniteGroupoid;

fn main() -> wqg::Result<()> {
    let dir = std::env::args().nth(1).map(std::path::PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let q = FieldSpec::Rational;
    let structures = [
        ("pg2", Structure::WeakBialgebra(pg2(q))),
        ("ebm2", Structure::Bialgebroid(ebm2(q))),
        ("m2-trace", Structure::FrobeniusSystem(m2_scaled_trace(q))),
        ("pair3", Structure::Groupoid(FiniteGroupoid::pair(3))),
    ];
    for (name, s) in &structures {
        let path = dir.join(format!("{name}.json"));
        format::save(s, &path)?;
        let loaded = format::load(&path)?;
        let report = structure_report(&loaded)?;
        println!(
            "{} ({}, {} bytes): identical after load {}, checks {}",
            path.display(),
            loaded.kind(),
            std::fs::metadata(&path)?.len(),
            &loaded == s,
            if report.overall() { "pass" } else { "fail" }
        );
    }
    println!("\n{}", format::to_string(&structures[3].1));
    Ok(())
}
