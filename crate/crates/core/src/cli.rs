//! The `wqg` command line, callable in-process through [`run`].
//!
//! Exit codes: 0 when every check passes or a construction succeeds, 1 on
//! an axiom failure (including "not Hopf"), 2 on usage, parse, schema or
//! I/O errors. A file argument of `-` is stdin; `-o -` (the default) is
//! stdout.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algcore::{check_algebra, check_coalgebra, CheckReport};
use crate::bialgebroid::{bialgebroid_to_weak, check_bialgebroid, tensor_over_r, twist_weak, weak_to_bialgebroid};
use crate::duality::{check_bialgebroid_skew_pairing, check_weak_skew_pairing, dual_weak_bialgebra, BialgebroidPairing, WeakPairing};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};
use crate::format::{self, PairingForm, Structure};
use crate::frobenius::{matrix_ifs, symmetry_flags, trace_ifs_commutative, verify_frobenius_system, verify_ifs};
use crate::hopf::{beta_map, check_tak_hopf, solve_antipode, verify_antipode};
use crate::repcat::comodule_check;
use crate::weakcore::{antiiso_check, check_weak_bialgebra, counital_data, verify_counital_identities, WeakBialgebra};
use crate::zoo::{check_groupoid, enveloping_bialgebroid, groupoid_algebra, groupoid_function_algebra, matrix_algebra, monoid_bialgebra, product_algebra, FiniteGroupoid};

#[derive(Parser, Debug)]
#[command(name = "wqg", version, about = "Exact checks and constructions for weak bialgebras and bialgebroids")]
pub struct Cli {
    /// Write the full check report as JSON to this path (`-` for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    pub report: Option<String>,
    /// Keep every recorded witness instead of the first per item.
    #[arg(long, global = true)]
    pub all_witnesses: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Where to write the resulting structure.
    #[arg(short, long, default_value = "-", value_name = "PATH")]
    pub output: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the axiom suites appropriate to the file's kind.
    Check { file: String },
    /// Report counital data, the base system and dimensions.
    Analyze { file: String },
    /// Solve for the antipode through the canonical map.
    Antipode {
        file: String,
        #[command(flatten)]
        out: Output,
    },
    /// The dual weak bialgebra.
    Dual {
        file: String,
        #[command(flatten)]
        out: Output,
    },
    /// The bialgebroid over the target counital subalgebra.
    ToBialgebroid {
        file: String,
        #[command(flatten)]
        out: Output,
    },
    /// The weak bialgebra of a bialgebroid for a chosen base system.
    FromBialgebroid {
        file: String,
        /// A frobenius-system file, or `canonical` for the stored base.
        #[arg(long, value_name = "FILE|canonical")]
        ifs: String,
        #[command(flatten)]
        out: Output,
    },
    /// Twist by an element of the target counital subalgebra.
    Twist {
        file: String,
        /// Comma-separated coordinates, or `name=value` pairs.
        #[arg(long = "t", value_name = "VECTOR", allow_hyphen_values = true)]
        t: String,
        #[command(flatten)]
        out: Output,
    },
    /// Check a skew pairing between two weak bialgebras or two bialgebroids.
    Pair {
        lambda: String,
        h: String,
        /// A pairing file.
        #[arg(long, value_name = "FILE")]
        tau: String,
    },
    /// Generate a structure.
    #[command(subcommand)]
    Gen(Gen),
}

#[derive(Args, Debug, Clone)]
pub struct GenCommon {
    #[arg(long, default_value = "Q", value_name = "Q|Fp")]
    pub field: String,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Args, Debug, Clone)]
pub struct GroupoidForm {
    /// Emit the dual (function algebra) instead.
    #[arg(long, conflicts_with = "groupoid")]
    pub dual: bool,
    /// Emit the groupoid itself instead of its algebra.
    #[arg(long)]
    pub groupoid: bool,
}

#[derive(Subcommand, Debug)]
pub enum Gen {
    /// Groupoid algebra of the pair groupoid.
    PairGroupoid {
        #[arg(long)]
        objects: usize,
        #[command(flatten)]
        form: GroupoidForm,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Group algebra, from `--cyclic M` or a multiplication table.
    Group {
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        cyclic: Option<usize>,
        /// Rows separated by `;`, entries by spaces or commas.
        #[arg(long)]
        table: Option<String>,
        /// Comma-separated element names.
        #[arg(long)]
        names: Option<String>,
        #[command(flatten)]
        form: GroupoidForm,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Monoid bialgebra from a multiplication table.
    Monoid {
        #[arg(long)]
        table: String,
        #[arg(long)]
        names: Option<String>,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Enveloping bialgebroid of `k^N` (trace system) or `M_N(k)`.
    Enveloping {
        #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
        split: Option<usize>,
        #[arg(long)]
        matrix: Option<usize>,
        /// The matrix `u` of the system `(tr(u·), Σ e_ij ⊗ u⁻¹e_ji)`;
        /// defaults to `N·I`.
        #[arg(long, requires = "matrix")]
        u: Option<String>,
        #[command(flatten)]
        common: GenCommon,
    },
}

/// Standard streams for one invocation.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
    pub color: bool,
}

/// Outcome of a command before exit-code mapping.
enum Outcome {
    Pass,
    Fail,
}

fn usage_error(e: &Error) -> bool {
    matches!(e, Error::Parse { .. } | Error::Schema { .. } | Error::Io(_) | Error::InvalidInput(_) | Error::FieldMismatch(..))
}

/// Parse `args` (including the program name) and run. Returns the exit code.
pub fn run<I, T>(args: I, io: &mut Streams<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(io.stderr, "{text}");
                2
            } else {
                let _ = write!(io.stdout, "{text}");
                0
            };
        }
    };
    match execute(&cli, io) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            if let Error::AxiomFailure { report, .. } = &e {
                let _ = emit_report(&cli, io, report, None);
            }
            if usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

fn read_input(path: &str, io: &mut Streams<'_>) -> Result<Structure> {
    let text = if path == "-" {
        let mut s = String::new();
        io.stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(PathBuf::from(path))?
    };
    format::from_str(&text)
}

fn write_to(path: &str, text: &str, io: &mut Streams<'_>) -> Result<()> {
    if path == "-" {
        io.stdout.write_all(text.as_bytes())?;
    } else {
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn write_structure(s: &Structure, out: &Output, io: &mut Streams<'_>) -> Result<()> {
    write_to(&out.output, &format::to_string(s), io)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn emit_report(cli: &Cli, io: &mut Streams<'_>, report: &CheckReport, names: Option<&[String]>) -> Result<()> {
    if let Some(path) = &cli.report {
        write_to(path, &pretty(&report.to_json(cli.all_witnesses, names)), io)?;
    }
    Ok(())
}

fn paint(io: &Streams<'_>, passed: bool) -> String {
    let (tag, code) = if passed { ("PASS", "32") } else { ("FAIL", "31") };
    if io.color {
        format!("\x1b[{code}m{tag}\x1b[0m")
    } else {
        tag.to_string()
    }
}

/// One line per item, with witnesses under failures.
fn print_summary(cli: &Cli, io: &mut Streams<'_>, report: &CheckReport, names: Option<&[String]>) -> Result<()> {
    let label = |i: usize| names.and_then(|n| n.get(i)).cloned().unwrap_or_else(|| i.to_string());
    let mut text = String::new();
    for item in &report.items {
        text.push_str(&format!("{} {} ({} checked)\n", paint(io, item.passed), item.id, item.checked));
        let shown = if cli.all_witnesses { item.witnesses.len() } else { item.witnesses.len().min(1) };
        for w in &item.witnesses[..shown] {
            let at: Vec<String> = w.indices.iter().map(|&i| label(i)).collect();
            let diff: Vec<String> = w.discrepancy.iter().map(|(i, s)| format!("{i}: {s}")).collect();
            text.push_str(&format!("    at ({}) lhs-rhs {{{}}}\n", at.join(", "), diff.join(", ")));
        }
    }
    text.push_str(&format!("overall: {}\n", if report.overall() { "pass" } else { "fail" }));
    io.stdout.write_all(text.as_bytes())?;
    Ok(())
}

fn finish_check(cli: &Cli, io: &mut Streams<'_>, report: &CheckReport, names: Option<&[String]>) -> Result<Outcome> {
    print_summary(cli, io, report, names)?;
    emit_report(cli, io, report, names)?;
    Ok(if report.overall() { Outcome::Pass } else { Outcome::Fail })
}

/// Weak bialgebra axioms, then (when they hold) the counital identities,
/// the counital anti-isomorphism and any stored antipode.
pub fn weak_report(h: &WeakBialgebra) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let base = check_weak_bialgebra(h);
    let ok = base.overall();
    report.extend_prefixed("weak", base);
    if ok {
        report.extend_prefixed("counital", verify_counital_identities(h)?);
        report.extend_prefixed("antiiso", antiiso_check(h)?);
        if let Some(s) = &h.antipode {
            report.extend_prefixed("antipode", verify_antipode(h, s));
        }
    }
    Ok(report)
}

/// The suite `check` runs for each kind. Pairings need their two sides and
/// are checked with `pair`.
pub fn structure_report(s: &Structure) -> Result<CheckReport> {
    Ok(match s {
        Structure::Algebra { algebra, .. } => check_algebra(algebra),
        Structure::Coalgebra { coalgebra, .. } => check_coalgebra(coalgebra),
        Structure::WeakBialgebra(h) => weak_report(h)?,
        Structure::FrobeniusSystem(fs) => verify_frobenius_system(fs),
        Structure::Bialgebroid(l) => check_bialgebroid(l),
        Structure::Groupoid(g) => check_groupoid(g),
        Structure::Comodule(c) => comodule_check(c),
        Structure::Pairing { .. } => return Err(Error::InvalidInput("a pairing is checked with `pair <lambda> <h> --tau <file>`".into())),
    })
}

fn names_of(s: &Structure) -> Option<Vec<String>> {
    match s {
        Structure::Algebra { names, .. } | Structure::Coalgebra { names, .. } => names.clone(),
        Structure::WeakBialgebra(h) => h.names.clone(),
        Structure::Bialgebroid(l) => l.names.clone(),
        Structure::Groupoid(g) => Some(g.names()),
        _ => None,
    }
}

fn expect_weak(s: Structure, what: &str) -> Result<WeakBialgebra> {
    match s {
        Structure::WeakBialgebra(h) => Ok(h),
        other => Err(Error::InvalidInput(format!("{what} expects a weak-bialgebra, got {}", other.kind()))),
    }
}

/// Fails with the axiom report when `h` is not a weak bialgebra.
fn require_weak(h: &WeakBialgebra, what: &str) -> Result<()> {
    let report = check_weak_bialgebra(h);
    if report.overall() {
        Ok(())
    } else {
        Err(Error::AxiomFailure { context: what.into(), report: Box::new(report) })
    }
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| json!(s.to_string())).collect())
}

fn analyze(s: &Structure) -> Result<(Value, bool)> {
    let report = structure_report(s).ok();
    let valid = report.as_ref().is_none_or(CheckReport::overall);
    let mut v = json!({ "kind": s.kind(), "field": s.field().to_string(), "valid": valid });
    let obj = v.as_object_mut().expect("object");
    match s {
        Structure::Algebra { algebra, .. } => {
            obj.insert("dim".into(), json!(algebra.dim()));
            obj.insert("commutative".into(), json!(algebra.is_commutative()));
            if valid {
                obj.insert("frobenius_separable_commutative".into(), json!(algebra.is_commutative() && trace_ifs_commutative(algebra).is_ok()));
            }
        }
        Structure::Coalgebra { coalgebra, .. } => {
            obj.insert("dim".into(), json!(coalgebra.dim()));
        }
        Structure::WeakBialgebra(h) => {
            obj.insert("dim".into(), json!(h.dim()));
            obj.insert("antipode_stored".into(), json!(h.antipode.is_some()));
            if valid {
                let cd = counital_data(h)?;
                obj.insert("dim_target_subalgebra".into(), json!(cd.h_t.dim()));
                obj.insert("dim_source_subalgebra".into(), json!(cd.h_s.dim()));
                obj.insert("delta_one".into(), scalars(&h.delta_one()));
                obj.insert(
                    "target_system".into(),
                    json!({ "phi": scalars(&cd.ifs_t.phi), "e": scalars(&cd.ifs_t.e), "ifs": verify_ifs(&cd.ifs_t).overall() }),
                );
                let beta = beta_map(h)?;
                obj.insert(
                    "canonical_map".into(),
                    json!({ "domain": beta.domain.dim(), "codomain": beta.codomain.dim(), "rank": beta.rank, "bijective": beta.bijective }),
                );
            }
        }
        Structure::FrobeniusSystem(fs) => {
            obj.insert("dim".into(), json!(fs.dim()));
            obj.insert("ifs".into(), json!(verify_ifs(fs).overall()));
            if valid {
                let (a, b, c) = symmetry_flags(fs)?;
                obj.insert("symmetric".into(), json!([a, b, c]));
            }
        }
        Structure::Bialgebroid(l) => {
            obj.insert("dim".into(), json!(l.dim()));
            obj.insert("base_dim".into(), json!(l.base_dim()));
            obj.insert("base_ifs".into(), json!(verify_ifs(&l.base).overall()));
            if valid {
                obj.insert("takeuchi_dim".into(), json!(tensor_over_r(l)?.image.dim()));
                obj.insert("hopf".into(), json!(check_tak_hopf(l)?));
            }
        }
        Structure::Groupoid(g) => {
            obj.insert("objects".into(), json!(g.objects));
            obj.insert("arrows".into(), json!(g.len()));
        }
        Structure::Comodule(c) => {
            obj.insert("dim".into(), json!(c.dim()));
            obj.insert("over_dim".into(), json!(c.h.dim()));
        }
        Structure::Pairing { form, .. } => match form {
            PairingForm::Weak(m) => {
                obj.insert("level".into(), json!("weak"));
                obj.insert("shape".into(), json!([m.rows(), m.cols()]));
            }
            PairingForm::Bialgebroid { shape, .. } => {
                obj.insert("level".into(), json!("bialgebroid"));
                obj.insert("shape".into(), json!(shape));
            }
        },
    }
    Ok((v, valid))
}

/// `1,0,0,2` or `g11=1,g22=2`.
fn parse_vector(text: &str, h: &WeakBialgebra) -> Result<Vec<Scalar>> {
    let field = h.field();
    let bad = |m: String| Error::InvalidInput(format!("--t: {m}"));
    let parts: Vec<&str> = text.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
    if parts.iter().any(|p| p.contains('=')) {
        let mut v = field.zeros(h.dim());
        for p in parts {
            let (name, val) = p.split_once('=').ok_or_else(|| bad(format!("expected name=value, got {p:?}")))?;
            let i = h.index_of(name.trim()).ok_or_else(|| bad(format!("unknown basis element {name:?}")))?;
            v[i] = field.parse(val.trim()).map_err(bad)?;
        }
        Ok(v)
    } else {
        if parts.len() != h.dim() {
            return Err(bad(format!("{} coordinates for dimension {}", parts.len(), h.dim())));
        }
        parts.iter().map(|p| field.parse(p).map_err(bad)).collect()
    }
}

fn parse_table(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split(';')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|_| Error::InvalidInput(format!("--table: bad entry {x:?}"))))
                .collect()
        })
        .collect()
}

fn parse_matrix(text: &str, field: FieldSpec) -> Result<Matrix> {
    let rows = text
        .split(';')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| field.parse(x).map_err(|m| Error::InvalidInput(format!("--u: {m}"))))
                .collect()
        })
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    Matrix::from_rows(field, rows)
}

fn parse_names(names: &Option<String>, m: usize, prefix: &str) -> Vec<String> {
    match names {
        Some(n) => n.split(',').map(|s| s.trim().to_string()).collect(),
        None => (0..m).map(|i| format!("{prefix}{i}")).collect(),
    }
}

fn field_of(common: &GenCommon) -> Result<FieldSpec> {
    common.field.parse()
}

fn groupoid_output(g: FiniteGroupoid, form: &GroupoidForm, field: FieldSpec) -> Result<Structure> {
    if form.groupoid {
        Ok(Structure::Groupoid(g))
    } else if form.dual {
        Ok(Structure::WeakBialgebra(groupoid_function_algebra(&g, field)?))
    } else {
        Ok(Structure::WeakBialgebra(groupoid_algebra(&g, field)?))
    }
}

/// The structure a `gen` invocation produces, and where it goes.
pub fn generate(g: &Gen) -> Result<(Structure, &Output)> {
    match g {
        Gen::PairGroupoid { objects, form, common } => {
            if *objects == 0 {
                return Err(Error::InvalidInput("--objects must be positive".into()));
            }
            Ok((groupoid_output(FiniteGroupoid::pair(*objects), form, field_of(common)?)?, &common.out))
        }
        Gen::Group { cyclic, table, names, form, common } => {
            let g = match (cyclic, table) {
                (Some(m), _) => FiniteGroupoid::cyclic(*m),
                (None, Some(t)) => {
                    let t = parse_table(t)?;
                    let names = parse_names(names, t.len(), "x");
                    FiniteGroupoid::group(&t, &names).map_err(|e| Error::InvalidInput(e.to_string()))?
                }
                (None, None) => return Err(Error::InvalidInput("give --cyclic or --table".into())),
            };
            Ok((groupoid_output(g, form, field_of(common)?)?, &common.out))
        }
        Gen::Monoid { table, names, common } => {
            let t = parse_table(table)?;
            let names = parse_names(names, t.len(), "m");
            let h = monoid_bialgebra(&t, &names, field_of(common)?).map_err(|e| Error::InvalidInput(e.to_string()))?;
            Ok((Structure::WeakBialgebra(h), &common.out))
        }
        Gen::Enveloping { split, matrix, u, common } => {
            let field = field_of(common)?;
            let l = match (split, matrix) {
                (Some(n), _) => {
                    let r = product_algebra(*n, field);
                    enveloping_bialgebroid(&r, &trace_ifs_commutative(&r)?)?
                }
                (None, Some(n)) => {
                    let u = match u {
                        Some(text) => parse_matrix(text, field)?,
                        None => Matrix::identity(field, *n).scale(&field.int(*n as i64)),
                    };
                    enveloping_bialgebroid(&matrix_algebra(*n, field), &matrix_ifs(*n, &u, field)?)?
                }
                (None, None) => return Err(Error::InvalidInput("give --split or --matrix".into())),
            };
            Ok((Structure::Bialgebroid(l), &common.out))
        }
    }
}

fn execute(cli: &Cli, io: &mut Streams<'_>) -> Result<Outcome> {
    match &cli.command {
        Command::Check { file } => {
            let s = read_input(file, io)?;
            let report = structure_report(&s)?;
            finish_check(cli, io, &report, names_of(&s).as_deref())
        }
        Command::Analyze { file } => {
            let s = read_input(file, io)?;
            let (v, valid) = analyze(&s)?;
            io.stdout.write_all(pretty(&v).as_bytes())?;
            if let Some(report) = structure_report(&s).ok().filter(|_| cli.report.is_some()) {
                emit_report(cli, io, &report, names_of(&s).as_deref())?;
            }
            Ok(if valid { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Antipode { file, out } => {
            let h = expect_weak(read_input(file, io)?, "antipode")?;
            require_weak(&h, "antipode")?;
            match solve_antipode(&h) {
                Ok(s) => {
                    emit_report(cli, io, &verify_antipode(&h, &s), h.names.as_deref())?;
                    write_structure(&Structure::WeakBialgebra(h.with_antipode(Some(s))), out, io)?;
                    Ok(Outcome::Pass)
                }
                Err(Error::NotHopf { domain_dim, codomain_dim, rank }) => {
                    writeln!(io.stderr, "not Hopf: canonical map has rank {rank} of {domain_dim} (codomain {codomain_dim})")?;
                    if let Some(path) = &cli.report {
                        let v = json!({ "overall": "fail", "not_hopf": { "rank": rank, "domain": domain_dim, "codomain": codomain_dim } });
                        write_to(path, &pretty(&v), io)?;
                    }
                    Ok(Outcome::Fail)
                }
                Err(e) => Err(e),
            }
        }
        Command::Dual { file, out } => {
            let h = expect_weak(read_input(file, io)?, "dual")?;
            require_weak(&h, "dual")?;
            write_structure(&Structure::WeakBialgebra(dual_weak_bialgebra(&h)?), out, io)?;
            Ok(Outcome::Pass)
        }
        Command::ToBialgebroid { file, out } => {
            let h = expect_weak(read_input(file, io)?, "to-bialgebroid")?;
            require_weak(&h, "to-bialgebroid")?;
            write_structure(&Structure::Bialgebroid(weak_to_bialgebroid(&h)?), out, io)?;
            Ok(Outcome::Pass)
        }
        Command::FromBialgebroid { file, ifs, out } => {
            let l = match read_input(file, io)? {
                Structure::Bialgebroid(l) => l,
                other => return Err(Error::InvalidInput(format!("from-bialgebroid expects a bialgebroid, got {}", other.kind()))),
            };
            let report = check_bialgebroid(&l);
            if !report.overall() {
                return Err(Error::AxiomFailure { context: "from-bialgebroid".into(), report: Box::new(report) });
            }
            let s = if ifs == "canonical" {
                l.base.clone()
            } else {
                match read_input(ifs, io)? {
                    Structure::FrobeniusSystem(s) => s,
                    other => return Err(Error::InvalidInput(format!("--ifs expects a frobenius-system, got {}", other.kind()))),
                }
            };
            write_structure(&Structure::WeakBialgebra(bialgebroid_to_weak(&l, &s)?), out, io)?;
            Ok(Outcome::Pass)
        }
        Command::Twist { file, t, out } => {
            let h = expect_weak(read_input(file, io)?, "twist")?;
            require_weak(&h, "twist")?;
            let t = parse_vector(t, &h)?;
            write_structure(&Structure::WeakBialgebra(twist_weak(&h, &t)?), out, io)?;
            Ok(Outcome::Pass)
        }
        Command::Pair { lambda, h, tau } => {
            let (a, b, t) = (read_input(lambda, io)?, read_input(h, io)?, read_input(tau, io)?);
            let Structure::Pairing { form, .. } = t else {
                return Err(Error::InvalidInput("--tau expects a pairing file".into()));
            };
            let report = match (a, b, form) {
                (Structure::WeakBialgebra(lambda_side), Structure::WeakBialgebra(h_side), PairingForm::Weak(tau0)) => {
                    check_weak_skew_pairing(&WeakPairing { lambda_side, h_side, tau0 })
                }
                (Structure::Bialgebroid(lambda_side), Structure::Bialgebroid(h_side), PairingForm::Bialgebroid { tau, .. }) => {
                    check_bialgebroid_skew_pairing(&BialgebroidPairing { lambda_side, h_side, tau })
                }
                _ => return Err(Error::InvalidInput("pair expects two weak bialgebras with a weak pairing or two bialgebroids with a bialgebroid pairing".into())),
            };
            finish_check(cli, io, &report, None)
        }
        Command::Gen(g) => {
            let (s, out) = generate(g)?;
            write_structure(&s, out, io)?;
            Ok(Outcome::Pass)
        }
    }
}

/// Entry point for the binary: real streams, colour when stdout is a
/// terminal and `WQG_COLOR` is not `0`.
pub fn main_with_std() -> i32 {
    use std::io::IsTerminal;
    let color = std::io::stdout().is_terminal() && std::env::var("WQG_COLOR").map_or(true, |v| v != "0");
    let (mut stdin, mut stdout, mut stderr) = (std::io::stdin().lock(), std::io::stdout().lock(), std::io::stderr().lock());
    let mut io = Streams { stdin: &mut stdin, stdout: &mut stdout, stderr: &mut stderr, color };
    let code = run(std::env::args_os(), &mut io);
    let _ = io.stdout.flush();
    code
}
