//! Acceptance suite: one PASS/FAIL line per criterion, all comparisons
//! exact.
//!
//! Criterion 6 contains a sub-claim that cannot hold: the un-opped
//! evaluation pairing satisfies every skew-pairing axiom on any
//! cocommutative weak bialgebra, and PG2 is cocommutative. That criterion
//! is reported as FAIL and listed in `EXPECTED_FAILURES`; the target exits
//! nonzero if the set of failing criteria differs from that list in either
//! direction.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, Stdio};

use wqg::algcore::CheckReport;
use wqg::bialgebroid::{bialgebroid_to_weak, check_bialgebroid, twist_weak, weak_to_bialgebroid};
use wqg::cli::weak_report;
use wqg::duality::{check_weak_skew_pairing, dual_weak_bialgebra, evaluation_pairing, unopped_evaluation_pairing};
use wqg::exactla::{FieldSpec, Matrix, Scalar};
use wqg::format::{self, Structure};
use wqg::frobenius::{
    algebra_inverse, compare_frobenius_systems, frobenius_automorphism, matrix_ifs, matrix_system, symmetry_flags, trace_ifs_commutative, twist_system,
    verify_ifs, verify_ifs_exhaustive, FrobeniusSystem,
};
use wqg::hopf::{beta_map, check_tak_hopf, solve_antipode, verify_antipode};
use wqg::repcat::{
    bialgebroid_comodule_to_coalg, coalg_comodule_to_bialgebroid, comodule_check, comodule_tensor, gamma_monoidal_check, module_tensor, regular_module,
    CoalgComodule,
};
use wqg::weakcore::{antiiso_check, check_weak_bialgebra, counital_data, mutate, verify_counital_identities, MutationTarget, WeakBialgebra};
use wqg::zoo::fixtures::*;
use wqg::zoo::{product_algebra, FiniteGroupoid};
use wqg::Error;

const Q: FieldSpec = FieldSpec::Rational;
const EXPECTED_FAILURES: &[usize] = &[6];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f5() -> FieldSpec {
    FieldSpec::prime(5).unwrap()
}

fn instances() -> Vec<(String, WeakBialgebra)> {
    [Q, f5()].into_iter().flat_map(|f| all_weak(f).into_iter().map(move |(n, h)| (format!("{n}/{f}"), h))).collect()
}

fn failing(r: &CheckReport) -> String {
    r.failed_ids().join(",")
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for (name, h) in instances() {
        let w = check_weak_bialgebra(&h);
        ensure(w.overall(), || format!("{name}: weak axioms fail {}", failing(&w)))?;
        let c = verify_counital_identities(&h).map_err(|e| e.to_string())?;
        ensure(c.overall(), || format!("{name}: counital identities fail {}", failing(&c)))?;
        let a = antiiso_check(&h).map_err(|e| e.to_string())?;
        ensure(a.overall(), || format!("{name}: anti-isomorphism fails {}", failing(&a)))?;
        let cd = counital_data(&h).map_err(|e| e.to_string())?;
        let i = verify_ifs(&cd.ifs_t);
        ensure(i.overall(), || format!("{name}: target system fails {}", failing(&i)))?;
        count += 1;
    }
    Ok(format!("{count} instances pass the weak axioms, counital identities, anti-isomorphism and target IFS"))
}

fn criterion_2() -> Outcome {
    let h = pg2(Q);
    let mut targets = Vec::new();
    for k in 0..8 {
        let m = (k * 37 + 11) % 64;
        targets.push(MutationTarget::Mul(m / 16, (m / 4) % 4, m % 4));
        let c = (k * 23 + 5) % 64;
        targets.push(MutationTarget::Comul(c / 16, (c / 4) % 4, c % 4));
    }
    targets.extend([MutationTarget::Unit(0), MutationTarget::Unit(1), MutationTarget::Counit(1), MutationTarget::Counit(2)]);
    for t in &targets {
        let current = match *t {
            MutationTarget::Mul(i, j, k) => h.algebra.mul_tensor().get(i, j, k).clone(),
            MutationTarget::Comul(i, j, k) => h.coalgebra.comul_tensor().get(i, j, k).clone(),
            MutationTarget::Unit(i) => h.algebra.unit()[i].clone(),
            MutationTarget::Counit(i) => h.coalgebra.counit()[i].clone(),
        };
        let m = mutate(&h, *t, &current + &Q.one());
        let r = weak_report(&m).map_err(|e| e.to_string())?;
        let witnessed = r.items.iter().any(|i| !i.passed && i.witness().is_some());
        ensure(witnessed, || format!("mutation {t:?} is not detected"))?;
    }
    Ok(format!("{} distinct mutations each fail an item with a witness", targets.len()))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for (name, h) in instances() {
        let l = weak_to_bialgebroid(&h).map_err(|e| format!("{name}: {e}"))?;
        let r = check_bialgebroid(&l);
        ensure(r.overall(), || format!("{name}: bialgebroid fails {}", failing(&r)))?;
        let back = bialgebroid_to_weak(&l, &l.base).map_err(|e| format!("{name}: {e}"))?;
        ensure(back == h.clone().with_antipode(None), || format!("{name}: round trip differs"))?;
        count += 1;
    }
    Ok(format!("{count} instances round-trip exactly"))
}

fn criterion_4() -> Outcome {
    let l = ebm2(Q);
    let s1 = l.base.clone();
    let s2 = matrix_ifs(2, &Matrix::from_ints(Q, &[&[2, 1], &[0, 2]]), Q).map_err(|e| e.to_string())?;
    ensure(s1 != s2, || "systems coincide".into())?;
    let t_r = compare_frobenius_systems(&s1, &s2).map_err(|e| e.to_string())?;
    let h1 = bialgebroid_to_weak(&l, &s1).map_err(|e| e.to_string())?;
    let h2 = bialgebroid_to_weak(&l, &s2).map_err(|e| e.to_string())?;
    let t = l.src.mul_vec(&t_r);
    let t_inv = algebra_inverse(&h1.algebra, &t).ok_or("t is not invertible")?;
    let n = h1.dim();
    let on_right = Matrix::identity(Q, n).kron(&h1.algebra.left_mult(&t_inv));
    for i in 0..n {
        let x = h1.basis(i);
        ensure(h2.delta(&x) == on_right.mul_vec(&h1.delta(&x)), || format!("Δ twist law fails at basis {i}"))?;
        ensure(h2.epsilon(&x) == h1.epsilon(&h1.mul(&t, &x)), || format!("ε twist law fails at basis {i}"))?;
    }
    let tw = twist_weak(&h1, &t).map_err(|e| e.to_string())?;
    ensure(tw == h2, || "twist_weak does not reproduce the second structure".into())?;
    Ok(format!("dim {n}: Δ and ε twist laws exact; twist_weak reproduces the second structure"))
}

fn criterion_5() -> Outcome {
    let mut hopf = 0;
    let mut count = 0;
    for (name, h) in instances() {
        let h = h.with_antipode(None);
        let beta = beta_map(&h).map_err(|e| format!("{name}: {e}"))?;
        let solved = solve_antipode(&h);
        let tak = check_tak_hopf(&weak_to_bialgebroid(&h).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(beta.bijective == solved.is_ok() && tak == beta.bijective, || {
            format!("{name}: beta {} solve {} tak {}", beta.bijective, solved.is_ok(), tak)
        })?;
        if let Ok(s) = &solved {
            let r = verify_antipode(&h, s);
            ensure(r.overall(), || format!("{name}: solved antipode fails {}", failing(&r)))?;
            hopf += 1;
        }
        count += 1;
    }
    let g = FiniteGroupoid::pair(2);
    let s = solve_antipode(&pg2(Q).with_antipode(None)).map_err(|e| e.to_string())?;
    let transpose = Matrix::from_fn(Q, 4, 4, |i, j| if g.inverse[j] == i { Q.one() } else { Q.zero() });
    ensure(s == transpose, || "PG2 antipode is not the arrow transposition".into())?;
    for a in 0..4 {
        let (i, j) = (g.arrows[a].target, g.arrows[a].source);
        let image = g.arrows.iter().position(|b| b.target == j && b.source == i).unwrap();
        ensure(s.column(a) == Q.unit_vector(4, image), || format!("S({}) is wrong", g.arrows[a].name))?;
    }
    match solve_antipode(&mx(Q)) {
        Err(Error::NotHopf { rank: 3, domain_dim: 4, .. }) => {}
        other => return Err(format!("MX: expected NotHopf rank 3 of 4, got {other:?}")),
    }
    Ok(format!("three tests agree on {count} instances ({hopf} Hopf); PG2 gives g_ij -> g_ji; MX rank 3 of 4"))
}

fn criterion_6() -> Outcome {
    for (name, h) in [("PG2", pg2(Q)), ("PG3", pg3(Q)), ("K2", k2(Q))] {
        let (p, flags) = evaluation_pairing(&h).map_err(|e| e.to_string())?;
        let r = check_weak_skew_pairing(&p);
        ensure(r.overall(), || format!("{name}: evaluation pairing fails {}", failing(&r)))?;
        ensure(flags == (true, true), || format!("{name}: nondegeneracy {flags:?}"))?;
    }
    for (name, h) in instances() {
        if let Some(s) = &h.antipode {
            let d = dual_weak_bialgebra(&h).map_err(|e| e.to_string())?;
            ensure(d.antipode.as_ref() == Some(&s.transpose()), || format!("{name}: dual antipode is not the transpose"))?;
        }
    }
    let contrast = check_weak_skew_pairing(&unopped_evaluation_pairing(&pg2_dual(Q)).map_err(|e| e.to_string())?);
    let un = check_weak_skew_pairing(&unopped_evaluation_pairing(&pg2(Q)).map_err(|e| e.to_string())?);
    ensure(!un.overall(), || {
        format!(
            "evaluation pairings and dual antipodes pass, but the un-opped pairing on PG2 satisfies every axiom (PG2 is cocommutative); \
             on the non-cocommutative PG2* it fails {}",
            failing(&contrast)
        )
    })?;
    Ok("evaluation pairings pass, un-opped fails on PG2".into())
}

fn flip_invariant(s: &FrobeniusSystem) -> bool {
    let n = s.dim();
    (0..n * n).all(|o| s.e[o] == s.e[(o % n) * n + o / n])
}

fn criterion_7() -> Outcome {
    let systems = vec![
        ("trace Q×Q", trace_ifs_commutative(&product_algebra(2, Q)).map_err(|e| e.to_string())?),
        ("trace Q×Q×Q", trace_ifs_commutative(&product_algebra(3, Q)).map_err(|e| e.to_string())?),
        ("M2 u=2I", matrix_ifs(2, &Matrix::identity(Q, 2).scale(&Q.int(2)), Q).map_err(|e| e.to_string())?),
        ("M2 u=[[2,1],[0,2]]", matrix_ifs(2, &Matrix::from_ints(Q, &[&[2, 1], &[0, 2]]), Q).map_err(|e| e.to_string())?),
        ("M3 u=3I", matrix_ifs(3, &Matrix::identity(Q, 3).scale(&Q.int(3)), Q).map_err(|e| e.to_string())?),
        ("M3 u=[[3,1,0],[0,3,0],[0,0,3]]", matrix_ifs(3, &Matrix::from_ints(Q, &[&[3, 1, 0], &[0, 3, 0], &[0, 0, 3]]), Q).map_err(|e| e.to_string())?),
    ];
    for (name, s) in &systems[..3] {
        ensure(verify_ifs(s).overall(), || format!("{name}: verify_ifs fails"))?;
    }
    let mut symmetric = 0;
    for (name, s) in &systems {
        let flip = flip_invariant(s);
        let theta = frobenius_automorphism(s).map_err(|e| e.to_string())?;
        ensure(theta.is_identity() == flip, || format!("{name}: θ = id is {} but flip(e) = e is {flip}", theta.is_identity()))?;
        let (a, b, c) = symmetry_flags(s).map_err(|e| e.to_string())?;
        ensure(a == flip && b == flip && c == flip, || format!("{name}: symmetry flags {:?} vs flip {flip}", (a, b, c)))?;
        symmetric += flip as usize;
    }
    let s1 = &systems[2].1;
    // t⁻¹ = [[1,1],[0,1]] keeps tr(t⁻¹u⁻¹) = 1 for u = 2I
    let planted: Vec<Scalar> = [1, -1, 0, 1].iter().map(|&x| Q.int(x)).collect();
    let s2 = twist_system(s1, &planted).map_err(|e| e.to_string())?;
    ensure(verify_ifs(&s2).overall(), || "twisted system is not an IFS".into())?;
    let t = compare_frobenius_systems(s1, &s2).map_err(|e| e.to_string())?;
    ensure(t == planted, || format!("recovered t {t:?}"))?;
    Ok(format!("3 IFSs verified; symmetry equivalence on {} systems ({symmetric} symmetric); planted t recovered", systems.len()))
}

fn criterion_8() -> Outcome {
    for (name, h, dim) in [("PG2", pg2(Q), 8), ("K2", k2(Q), 4)] {
        let m = regular_module(&h);
        let r = gamma_monoidal_check(&m, &m);
        ensure(r.overall(), || format!("{name}: gamma check fails {}", failing(&r)))?;
        let t = module_tensor(&m, &m).map_err(|e| e.to_string())?;
        ensure(t.module.dim() == dim, || format!("{name}: dim(M⊙N) = {}", t.module.dim()))?;
    }
    let h = pg2(Q);
    let g = |n: &str| CoalgComodule::grouplike(&h, &h.basis(h.index_of(n).unwrap()));
    let mut comodules: Vec<(String, CoalgComodule)> = ["g11", "g12", "g21", "g22"].iter().map(|n| (format!("k_{n}"), g(n))).collect();
    comodules.push(("PG2".into(), CoalgComodule::regular(&h)));
    comodules.push(("K2".into(), CoalgComodule::regular(&k2(Q))));
    comodules.push(("PG2*".into(), CoalgComodule::regular(&pg2_dual(Q))));
    comodules.push(("MX".into(), CoalgComodule::regular(&mx(Q))));
    comodules.push(("EB2".into(), CoalgComodule::regular(&eb2_weak(Q))));
    for (name, c) in &comodules {
        ensure(comodule_check(c).overall(), || format!("{name}: not a comodule"))?;
        let b = coalg_comodule_to_bialgebroid(c).map_err(|e| format!("{name}: {e}"))?;
        let rb = comodule_check(&b);
        ensure(rb.overall(), || format!("{name}: bialgebroid comodule fails {}", failing(&rb)))?;
        let back = bialgebroid_comodule_to_coalg(&b).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.delta == c.delta, || format!("{name}: coaction changes on the round trip"))?;
        let again = coalg_comodule_to_bialgebroid(&back).map_err(|e| format!("{name}: {e}"))?;
        ensure(again == b, || format!("{name}: bialgebroid side changes on the round trip"))?;
    }
    let cases = [("g12⊗g21", g("g12"), g("g21"), Some(1)), ("g12⊗g12", g("g12"), g("g12"), Some(0)), ("PG2⊗PG2", CoalgComodule::regular(&h), CoalgComodule::regular(&h), None)];
    for (name, m, n, expect) in cases {
        let t = comodule_tensor(&m, &n).map_err(|e| format!("{name}: {e}"))?;
        ensure(t.quotient.dim() == t.compressed.dim(), || format!("{name}: {} vs {}", t.quotient.dim(), t.compressed.dim()))?;
        if let Some(d) = expect {
            ensure(t.quotient.dim() == d, || format!("{name}: dim {}", t.quotient.dim()))?;
        }
    }
    Ok(format!("gamma checks pass (8, 4); {} comodules round-trip; comodule tensor forms agree (1, 0, regular)", comodules.len()))
}

fn criterion_9() -> Outcome {
    let f2 = FieldSpec::prime(2).unwrap();
    let u_inv = Matrix::from_ints(f2, &[&[1, 1], &[1, 0]]);
    let s = matrix_system(2, &u_inv.inverse().ok_or("u⁻¹ singular")?).map_err(|e| e.to_string())?;
    let report = verify_ifs_exhaustive(&s).map_err(|e| e.to_string())?;
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/m2_f2_probe.json");
    let artifact: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(artifact["report"] == report.to_json(false, None), || "recorded outcome differs from the recomputed one".into())?;
    ensure(artifact["phi"] == serde_json::json!(s.phi.iter().map(|x| x.to_string()).collect::<Vec<_>>()), || "recorded φ differs".into())?;
    ensure(artifact["note"].as_str().is_some_and(|n| !n.is_empty()), || "artifact has no note".into())?;
    Ok(format!(
        "M2(F2) candidate: {} on all elements (items {}); recorded outcome matches",
        if report.overall() { "every IFS law holds" } else { "some IFS law fails" },
        report.items.iter().map(|i| format!("{}={}", i.id, if i.passed { "pass" } else { "fail" })).collect::<Vec<_>>().join(" ")
    ))
}

fn wqg(args: &[&str], stdin: &[u8]) -> Result<(i32, Vec<u8>), String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wqg"))
        .args(args)
        .env("WQG_COLOR", "0")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child.stdin.take().unwrap().write_all(stdin).map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn pipeline(stages: &[&[&str]]) -> Result<(i32, Vec<u8>), String> {
    let mut data = Vec::new();
    for (k, args) in stages.iter().enumerate() {
        let (code, out) = wqg(args, &data)?;
        if code != 0 || k + 1 == stages.len() {
            return Ok((code, out));
        }
        data = out;
    }
    unreachable!()
}

fn criterion_10() -> Outcome {
    let pipelines: Vec<Vec<&[&str]>> = vec![
        vec![&["gen", "pair-groupoid", "--objects", "2"], &["check", "-"]],
        vec![&["gen", "pair-groupoid", "--objects", "3", "--field", "F5"], &["check", "-"]],
        vec![&["gen", "pair-groupoid", "--objects", "2", "--dual"], &["check", "-"]],
        vec![&["gen", "pair-groupoid", "--objects", "2", "--groupoid"], &["check", "-"]],
        vec![&["gen", "group", "--cyclic", "3"], &["check", "-"]],
        vec![&["gen", "monoid", "--table", "0 1; 1 1", "--names", "1,x"], &["check", "-"]],
        vec![&["gen", "enveloping", "--split", "2"], &["check", "-"]],
        vec![&["gen", "enveloping", "--split", "2"], &["from-bialgebroid", "-", "--ifs", "canonical"], &["check", "-"]],
        vec![&["gen", "enveloping", "--matrix", "2"], &["from-bialgebroid", "-", "--ifs", "canonical"], &["check", "-"]],
        vec![&["gen", "pair-groupoid", "--objects", "2"], &["to-bialgebroid", "-"], &["check", "-"]],
        vec![&["gen", "pair-groupoid", "--objects", "2"], &["to-bialgebroid", "-"], &["from-bialgebroid", "-", "--ifs", "canonical"], &["antipode", "-"], &["check", "-"]],
        vec![&["gen", "pair-groupoid", "--objects", "2"], &["dual", "-"], &["check", "-"]],
        vec![&["gen", "pair-groupoid", "--objects", "2"], &["twist", "-", "--t", "g11=1,g22=1"], &["check", "-"]],
    ];
    for p in &pipelines {
        let (code, _) = pipeline(p)?;
        ensure(code == 0, || format!("pipeline {p:?} exited {code}"))?;
    }
    let (code, _) = wqg(&["antipode", "-"], format::to_string(&Structure::WeakBialgebra(mx(Q))).as_bytes())?;
    ensure(code == 1, || format!("antipode on MX exited {code}"))?;

    let mut structures: Vec<Structure> = instances().into_iter().map(|(_, h)| Structure::WeakBialgebra(h)).collect();
    structures.push(Structure::Bialgebroid(eb2(Q)));
    structures.push(Structure::Bialgebroid(ebm2(Q)));
    structures.push(Structure::FrobeniusSystem(m2_scaled_trace(Q)));
    structures.push(Structure::Groupoid(FiniteGroupoid::pair(3)));
    structures.push(Structure::Comodule(CoalgComodule::regular(&k2(Q))));
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (k, s) in structures.iter().enumerate() {
        let path = dir.path().join(format!("s{k}.json"));
        format::save(s, &path).map_err(|e| e.to_string())?;
        let bytes = std::fs::read(&path).map_err(|e| e.to_string())?;
        let loaded = format::load(&path).map_err(|e| e.to_string())?;
        ensure(&loaded == s, || format!("{}: loaded structure differs", s.kind()))?;
        let again = dir.path().join(format!("s{k}b.json"));
        format::save(&loaded, &again).map_err(|e| e.to_string())?;
        ensure(std::fs::read(&again).map_err(|e| e.to_string())? == bytes, || format!("{}: re-save is not byte-identical", s.kind()))?;
    }

    let broken = mutate(&pg2(Q), MutationTarget::Comul(1, 0, 1), Q.one());
    let inputs = [format::to_string(&Structure::WeakBialgebra(pg3(Q))), format::to_string(&Structure::WeakBialgebra(broken))];
    for input in &inputs {
        let first = wqg(&["check", "-", "--report", "-", "--all-witnesses"], input.as_bytes())?;
        let second = wqg(&["check", "-", "--report", "-", "--all-witnesses"], input.as_bytes())?;
        ensure(first == second, || "reports differ between runs".into())?;
    }
    Ok(format!("{} pipelines exit 0; MX antipode exits 1; {} files re-save byte-identically; reports deterministic", pipelines.len(), structures.len()))
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome); 10] = [
        (1, "axiom suites", criterion_1),
        (2, "mutation sensitivity", criterion_2),
        (3, "weak/bialgebroid round trip", criterion_3),
        (4, "twist law", criterion_4),
        (5, "antipode equivalence", criterion_5),
        (6, "duality", criterion_6),
        (7, "Frobenius suite", criterion_7),
        (8, "module and comodule categories", criterion_8),
        (9, "M2(F2) probe", criterion_9),
        (10, "CLI", criterion_10),
    ];
    // `cargo test -- --list` and filters pass arguments; run everything anyway
    if std::env::args().any(|a| a == "--list") {
        for (n, name, _) in &criteria {
            println!("criterion_{n}: test  # {name}");
        }
        return;
    }
    let mut failures = BTreeSet::new();
    for (n, name, f) in criteria {
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {n:>2} ({name}): {detail} [{secs:.2}s]"),
            Err(detail) => {
                println!("FAIL criterion {n:>2} ({name}): {detail} [{secs:.2}s]");
                failures.insert(n);
            }
        }
    }
    let expected: BTreeSet<usize> = EXPECTED_FAILURES.iter().copied().collect();
    println!("{} of 10 criteria pass", 10 - failures.len());
    if failures == expected {
        println!("failing criteria {failures:?} are exactly the documented unattainable ones");
    } else {
        println!("failing criteria {failures:?} differ from the documented unattainable set {expected:?}");
        std::process::exit(1);
    }
}
