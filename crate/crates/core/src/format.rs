//! The structure file format.
//!
//! One JSON document per object. Scalars are strings (`"3"`, `"-5/7"`, or a
//! residue over `F_p`) so nothing is lost to floating point. Sparse tensors
//! are lists of `[indices, scalar]` pairs with nonzero scalars, sorted
//! lexicographically by indices, one pair per line. [`to_string`] is the
//! canonical serialization: loading a canonical file and saving it again
//! reproduces it byte for byte.
//!
//! ```text
//! {
//!   "format": "wqg/1",
//!   "kind": "weak-bialgebra",
//!   "field": "Q",
//!   "dim": 2,
//!   "basis": ["1", "u"],
//!   "unit": [
//!     [0, "1"]
//!   ],
//!   "mul": [
//!     [[0, 0, 0], "1"],
//!     ...
//! ```
//!
//! Kinds and their keys, in canonical order (`?` marks optional keys):
//!
//! | kind | keys |
//! |---|---|
//! | `algebra` | `dim`, `basis?`, `unit`, `mul` |
//! | `coalgebra` | `dim`, `basis?`, `counit`, `comul` |
//! | `weak-bialgebra` | `dim`, `basis?`, `unit`, `mul`, `counit`, `comul`, `antipode?` |
//! | `frobenius-system` | `dim`, `unit`, `mul`, `phi`, `e` |
//! | `bialgebroid` | `base`, `dim`, `basis?`, `unit`, `mul`, `src`, `tgt`, `gamma`, `counit` |
//! | `groupoid` | `objects`, `arrows`, `compose` |
//! | `comodule` | `over`, `dim`, `delta` |
//! | `pairing` | `level`, `shape`, `tau` |
//!
//! Index conventions: `mul` entry `[i, j, k]` is the coefficient of `e_k` in
//! `e_i e_j`; `comul` entry `[i, j, k]` that of `e_j ⊗ e_k` in `Δ(e_i)`;
//! matrices (`antipode`, `src`, `tgt`) use `[row, column]`; `e` uses
//! `[a, b]` for `r_a ⊗ r_b`; bialgebroid `gamma` entry `[i, j, k]` is the
//! coefficient of `e_i ⊗ e_j` in `Γ(e_k)` and `counit` entry `[h, a, b]` is
//! entry `(a, b)` of `C(e_h)`; comodule `delta` entry `[p, j, i]` is the
//! coefficient of `e_p ⊗ m_j` in `δ(m_i)`. Nested `base` and `over`
//! objects carry their own `kind` and inherit the field. Groupoid arrows
//! are `[name, source, target]` and `compose` lists `[a, b, a∘b]`.
//! A weak pairing has `shape = [dim Λ, dim H]` and entries `[ξ, h]`; a
//! bialgebroid pairing has `shape = [dim Λ, dim H, dim R]` and entries
//! `[ξ, h, r]`.

use std::path::Path;

use serde_json::{Map, Value};

use crate::algcore::{FinDimAlgebra, FinDimCoalgebra, Tensor3};
use crate::bialgebroid::FsBialgebroid;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};
use crate::frobenius::FrobeniusSystem;
use crate::repcat::CoalgComodule;
use crate::weakcore::WeakBialgebra;
use crate::zoo::{Arrow, FiniteGroupoid};

pub const FORMAT_TAG: &str = "wqg/1";

/// Scalar values of a pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingForm {
    /// `τ₀` as a `dim Λ × dim H` matrix.
    Weak(Matrix),
    /// `τ(ξ|h) ∈ R`, flat at `(ξ·dim H + h)·dim R + r`.
    Bialgebroid { shape: [usize; 3], tau: Vec<Scalar> },
}

impl PairingForm {
    pub fn field(&self) -> Option<FieldSpec> {
        match self {
            PairingForm::Weak(m) => Some(m.field()),
            PairingForm::Bialgebroid { tau, .. } => tau.first().map(Scalar::field),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra { algebra: FinDimAlgebra, names: Option<Vec<String>> },
    Coalgebra { coalgebra: FinDimCoalgebra, names: Option<Vec<String>> },
    WeakBialgebra(WeakBialgebra),
    FrobeniusSystem(FrobeniusSystem),
    Bialgebroid(FsBialgebroid),
    Groupoid(FiniteGroupoid),
    Comodule(CoalgComodule),
    Pairing { field: FieldSpec, form: PairingForm },
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra { .. } => "algebra",
            Structure::Coalgebra { .. } => "coalgebra",
            Structure::WeakBialgebra(_) => "weak-bialgebra",
            Structure::FrobeniusSystem(_) => "frobenius-system",
            Structure::Bialgebroid(_) => "bialgebroid",
            Structure::Groupoid(_) => "groupoid",
            Structure::Comodule(_) => "comodule",
            Structure::Pairing { .. } => "pairing",
        }
    }

    /// Groupoids carry no field; they are written over `Q`.
    pub fn field(&self) -> FieldSpec {
        match self {
            Structure::Algebra { algebra, .. } => algebra.field(),
            Structure::Coalgebra { coalgebra, .. } => coalgebra.field(),
            Structure::WeakBialgebra(h) => h.field(),
            Structure::FrobeniusSystem(s) => s.field(),
            Structure::Bialgebroid(l) => l.field(),
            Structure::Groupoid(_) => FieldSpec::Rational,
            Structure::Comodule(c) => c.h.field(),
            Structure::Pairing { field, .. } => *field,
        }
    }
}

// ---------------------------------------------------------------- emitting

enum Node {
    /// Inline JSON text.
    Atom(String),
    /// An array with one atom per line.
    Lines(Vec<String>),
    Obj(Vec<(&'static str, Node)>),
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn inline_list<T: ToString>(xs: &[T]) -> String {
    format!("[{}]", xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn entry(idx: &[usize], s: &Scalar) -> String {
    let key = if idx.len() == 1 { idx[0].to_string() } else { inline_list(idx) };
    format!("[{key}, {}]", quote(&s.to_string()))
}

fn vector_node(v: &[Scalar]) -> Node {
    Node::Lines(v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| entry(&[i], s)).collect())
}

fn matrix_node(m: &Matrix) -> Node {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for (c, s) in m.row(r).iter().enumerate() {
            if !s.is_zero() {
                out.push(entry(&[r, c], s));
            }
        }
    }
    Node::Lines(out)
}

fn tensor_node(t: &Tensor3) -> Node {
    Node::Lines(t.nonzero_entries().map(|(idx, s)| entry(&idx, s)).collect())
}

fn names_node(names: &[String]) -> Node {
    Node::Atom(format!("[{}]", names.iter().map(|n| quote(n)).collect::<Vec<_>>().join(", ")))
}

fn algebra_fields(out: &mut Vec<(&'static str, Node)>, a: &FinDimAlgebra) {
    out.push(("unit", vector_node(a.unit())));
    out.push(("mul", tensor_node(a.mul_tensor())));
}

fn coalgebra_fields(out: &mut Vec<(&'static str, Node)>, c: &FinDimCoalgebra) {
    out.push(("counit", vector_node(c.counit())));
    out.push(("comul", tensor_node(c.comul_tensor())));
}

fn dim_and_names(out: &mut Vec<(&'static str, Node)>, dim: usize, names: Option<&Vec<String>>) {
    out.push(("dim", Node::Atom(dim.to_string())));
    if let Some(n) = names {
        out.push(("basis", names_node(n)));
    }
}

fn body(s: &Structure) -> Vec<(&'static str, Node)> {
    let mut out = Vec::new();
    match s {
        Structure::Algebra { algebra, names } => {
            dim_and_names(&mut out, algebra.dim(), names.as_ref());
            algebra_fields(&mut out, algebra);
        }
        Structure::Coalgebra { coalgebra, names } => {
            dim_and_names(&mut out, coalgebra.dim(), names.as_ref());
            coalgebra_fields(&mut out, coalgebra);
        }
        Structure::WeakBialgebra(h) => {
            dim_and_names(&mut out, h.dim(), h.names.as_ref());
            algebra_fields(&mut out, &h.algebra);
            coalgebra_fields(&mut out, &h.coalgebra);
            if let Some(a) = &h.antipode {
                out.push(("antipode", matrix_node(a)));
            }
        }
        Structure::FrobeniusSystem(fs) => {
            out.push(("dim", Node::Atom(fs.dim().to_string())));
            algebra_fields(&mut out, &fs.algebra);
            out.push(("phi", vector_node(&fs.phi)));
            let d = fs.dim();
            let e: Vec<String> = fs.e.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| entry(&[i / d, i % d], s)).collect();
            out.push(("e", Node::Lines(e)));
        }
        Structure::Bialgebroid(l) => {
            out.push(("base", nested(&Structure::FrobeniusSystem(l.base.clone()))));
            dim_and_names(&mut out, l.dim(), l.names.as_ref());
            algebra_fields(&mut out, &l.total);
            out.push(("src", matrix_node(&l.src)));
            out.push(("tgt", matrix_node(&l.tgt)));
            let n = l.dim();
            let mut g = Vec::new();
            for row in 0..n * n {
                for (k, s) in l.gamma.row(row).iter().enumerate() {
                    if !s.is_zero() {
                        g.push((vec![row / n, row % n, k], s.clone()));
                    }
                }
            }
            g.sort_by(|a, b| a.0.cmp(&b.0));
            out.push(("gamma", Node::Lines(g.iter().map(|(i, s)| entry(i, s)).collect())));
            let mut c = Vec::new();
            for (h, m) in l.counit_c.iter().enumerate() {
                for a in 0..m.rows() {
                    for (b, s) in m.row(a).iter().enumerate() {
                        if !s.is_zero() {
                            c.push(entry(&[h, a, b], s));
                        }
                    }
                }
            }
            out.push(("counit", Node::Lines(c)));
        }
        Structure::Groupoid(g) => {
            out.push(("objects", Node::Atom(g.objects.to_string())));
            let arrows = g.arrows.iter().map(|a| format!("[{}, {}, {}]", quote(&a.name), a.source, a.target)).collect();
            out.push(("arrows", Node::Lines(arrows)));
            let mut comp = Vec::new();
            for (a, row) in g.compose.iter().enumerate() {
                for (b, c) in row.iter().enumerate() {
                    if let Some(c) = c {
                        comp.push(inline_list(&[a, b, *c]));
                    }
                }
            }
            out.push(("compose", Node::Lines(comp)));
        }
        Structure::Comodule(c) => {
            out.push(("over", nested(&Structure::WeakBialgebra(c.h.clone()))));
            let d = c.dim();
            out.push(("dim", Node::Atom(d.to_string())));
            let mut delta = Vec::new();
            for row in 0..c.delta.rows() {
                for (i, s) in c.delta.row(row).iter().enumerate() {
                    if !s.is_zero() {
                        delta.push(entry(&[row / d, row % d, i], s));
                    }
                }
            }
            out.push(("delta", Node::Lines(delta)));
        }
        Structure::Pairing { form, .. } => match form {
            PairingForm::Weak(m) => {
                out.push(("level", Node::Atom(quote("weak"))));
                out.push(("shape", Node::Atom(inline_list(&[m.rows(), m.cols()]))));
                out.push(("tau", matrix_node(m)));
            }
            PairingForm::Bialgebroid { shape, tau } => {
                out.push(("level", Node::Atom(quote("bialgebroid"))));
                out.push(("shape", Node::Atom(inline_list(shape))));
                let [_, dh, dr] = *shape;
                let t = tau.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(o, s)| entry(&[o / (dh * dr), (o / dr) % dh, o % dr], s)).collect();
                out.push(("tau", Node::Lines(t)));
            }
        },
    }
    out
}

fn nested(s: &Structure) -> Node {
    let mut fields = vec![("kind", Node::Atom(quote(s.kind())))];
    fields.extend(body(s));
    Node::Obj(fields)
}

fn render(node: &Node, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match node {
        Node::Atom(a) => out.push_str(a),
        Node::Lines(lines) if lines.is_empty() => out.push_str("[]"),
        Node::Lines(lines) => {
            out.push_str("[\n");
            for (i, l) in lines.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(l);
                out.push_str(if i + 1 < lines.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Node::Obj(fields) => {
            out.push_str("{\n");
            for (i, (k, v)) in fields.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&quote(k));
                out.push_str(": ");
                render(v, indent + 1, out);
                out.push_str(if i + 1 < fields.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
    }
}

/// Canonical serialization, newline-terminated.
pub fn to_string(s: &Structure) -> String {
    let mut fields = vec![
        ("format", Node::Atom(quote(FORMAT_TAG))),
        ("kind", Node::Atom(quote(s.kind()))),
        ("field", Node::Atom(quote(&s.field().to_string()))),
    ];
    fields.extend(body(s));
    let mut out = String::new();
    render(&Node::Obj(fields), 0, &mut out);
    out.push('\n');
    out
}

pub fn save(s: &Structure, path: &Path) -> Result<()> {
    std::fs::write(path, to_string(s))?;
    Ok(())
}

// ----------------------------------------------------------------- parsing

fn schema(field: &str, message: impl Into<String>) -> Error {
    Error::Schema { field: field.into(), message: message.into() }
}

/// 1-based line and column of byte offset `at`.
fn position(text: &str, at: usize) -> (usize, usize) {
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(at, |nl| at - nl - 1) + 1;
    (line, column)
}

struct Reader<'a> {
    text: &'a str,
    field: FieldSpec,
}

impl Reader<'_> {
    fn object<'v>(&self, v: &'v Value, path: &str, allowed: &[&str]) -> Result<&'v Map<String, Value>> {
        let obj = v.as_object().ok_or_else(|| schema(path, "expected an object"))?;
        if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(schema(&join(path, k), "unknown key"));
        }
        Ok(obj)
    }

    fn get<'v>(&self, obj: &'v Map<String, Value>, path: &str, key: &str) -> Result<&'v Value> {
        obj.get(key).ok_or_else(|| schema(&join(path, key), "missing"))
    }

    fn usize(&self, v: &Value, path: &str) -> Result<usize> {
        v.as_u64().map(|x| x as usize).ok_or_else(|| schema(path, "expected a non-negative integer"))
    }

    fn string<'v>(&self, v: &'v Value, path: &str) -> Result<&'v str> {
        v.as_str().ok_or_else(|| schema(path, "expected a string"))
    }

    fn scalar(&self, v: &Value, path: &str) -> Result<Scalar> {
        let lit = self.string(v, path)?;
        self.field.parse(lit).map_err(|message| {
            let (line, column) = self.text.find(&quote(lit)).map_or((0, 0), |at| position(self.text, at + 1));
            Error::Parse { line, column, message: format!("{path}: bad scalar {lit:?}: {message}") }
        })
    }

    fn names(&self, v: &Value, path: &str, dim: usize) -> Result<Vec<String>> {
        let arr = v.as_array().ok_or_else(|| schema(path, "expected a list of names"))?;
        if arr.len() != dim {
            return Err(schema(path, format!("{} names for dimension {dim}", arr.len())));
        }
        arr.iter().enumerate().map(|(i, n)| Ok(self.string(n, &format!("{path}[{i}]"))?.to_string())).collect()
    }

    /// Sparse entries `[indices, scalar]` with each index below its bound.
    fn sparse(&self, v: &Value, path: &str, bounds: &[usize]) -> Result<Vec<(Vec<usize>, Scalar)>> {
        let arr = v.as_array().ok_or_else(|| schema(path, "expected a list of entries"))?;
        let mut out: Vec<(Vec<usize>, Scalar)> = Vec::with_capacity(arr.len());
        for (i, e) in arr.iter().enumerate() {
            let p = format!("{path}[{i}]");
            let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(|| schema(&p, "expected [indices, scalar]"))?;
            let idx: Vec<usize> = if bounds.len() == 1 {
                vec![self.usize(&pair[0], &p)?]
            } else {
                let a = pair[0].as_array().filter(|a| a.len() == bounds.len()).ok_or_else(|| schema(&p, format!("expected {} indices", bounds.len())))?;
                a.iter().map(|x| self.usize(x, &p)).collect::<Result<_>>()?
            };
            if let Some((k, _)) = idx.iter().zip(bounds).enumerate().find(|(_, (x, b))| x >= b) {
                return Err(schema(&p, format!("index {} out of range (bound {})", idx[k], bounds[k])));
            }
            let s = self.scalar(&pair[1], &p)?;
            out.push((idx, s));
        }
        let mut sorted: Vec<&Vec<usize>> = out.iter().map(|(i, _)| i).collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(schema(path, format!("duplicate entry {:?}", w[0])));
        }
        Ok(out)
    }

    fn vector(&self, v: &Value, path: &str, n: usize) -> Result<Vec<Scalar>> {
        let mut out = self.field.zeros(n);
        for (i, s) in self.sparse(v, path, &[n])? {
            out[i[0]] = s;
        }
        Ok(out)
    }

    fn matrix(&self, v: &Value, path: &str, rows: usize, cols: usize) -> Result<Matrix> {
        let entries = self.sparse(v, path, &[rows, cols])?;
        let mut m = vec![self.field.zeros(cols); rows];
        for (i, s) in entries {
            m[i[0]][i[1]] = s;
        }
        Ok(Matrix::from_fn(self.field, rows, cols, |r, c| m[r][c].clone()))
    }

    fn tensor(&self, v: &Value, path: &str, n: usize) -> Result<Tensor3> {
        let mut t = Tensor3::zeros(self.field, [n; 3]);
        for (i, s) in self.sparse(v, path, &[n, n, n])? {
            t.set(i[0], i[1], i[2], s);
        }
        Ok(t)
    }

    fn algebra(&self, obj: &Map<String, Value>, path: &str, n: usize) -> Result<FinDimAlgebra> {
        let unit = self.vector(self.get(obj, path, "unit")?, &join(path, "unit"), n)?;
        let mul = self.tensor(self.get(obj, path, "mul")?, &join(path, "mul"), n)?;
        FinDimAlgebra::new(mul, unit)
    }

    fn coalgebra(&self, obj: &Map<String, Value>, path: &str, n: usize) -> Result<FinDimCoalgebra> {
        let counit = self.vector(self.get(obj, path, "counit")?, &join(path, "counit"), n)?;
        let comul = self.tensor(self.get(obj, path, "comul")?, &join(path, "comul"), n)?;
        FinDimCoalgebra::new(comul, counit)
    }

    fn dim_names(&self, obj: &Map<String, Value>, path: &str) -> Result<(usize, Option<Vec<String>>)> {
        let n = self.usize(self.get(obj, path, "dim")?, &join(path, "dim"))?;
        let names = obj.get("basis").map(|b| self.names(b, &join(path, "basis"), n)).transpose()?;
        Ok((n, names))
    }

    /// The kind-specific part of an object.
    fn structure(&self, kind: &str, v: &Value, path: &str, outer: &[&str]) -> Result<Structure> {
        let keys = |own: &[&'static str]| -> Vec<&str> { outer.iter().copied().chain(own.iter().copied()).collect() };
        match kind {
            "algebra" => {
                let obj = self.object(v, path, &keys(&["dim", "basis", "unit", "mul"]))?;
                let (n, names) = self.dim_names(obj, path)?;
                Ok(Structure::Algebra { algebra: self.algebra(obj, path, n)?, names })
            }
            "coalgebra" => {
                let obj = self.object(v, path, &keys(&["dim", "basis", "counit", "comul"]))?;
                let (n, names) = self.dim_names(obj, path)?;
                Ok(Structure::Coalgebra { coalgebra: self.coalgebra(obj, path, n)?, names })
            }
            "weak-bialgebra" => {
                let obj = self.object(v, path, &keys(&["dim", "basis", "unit", "mul", "counit", "comul", "antipode"]))?;
                let (n, names) = self.dim_names(obj, path)?;
                let algebra = self.algebra(obj, path, n)?;
                let coalgebra = self.coalgebra(obj, path, n)?;
                let antipode = obj.get("antipode").map(|a| self.matrix(a, &join(path, "antipode"), n, n)).transpose()?;
                let mut h = WeakBialgebra::new(algebra, coalgebra, antipode)?;
                if let Some(names) = names {
                    h = h.with_names(names);
                }
                Ok(Structure::WeakBialgebra(h))
            }
            "frobenius-system" => {
                let obj = self.object(v, path, &keys(&["dim", "unit", "mul", "phi", "e"]))?;
                let n = self.usize(self.get(obj, path, "dim")?, &join(path, "dim"))?;
                let algebra = self.algebra(obj, path, n)?;
                let phi = self.vector(self.get(obj, path, "phi")?, &join(path, "phi"), n)?;
                let e = self.matrix(self.get(obj, path, "e")?, &join(path, "e"), n, n)?;
                Ok(Structure::FrobeniusSystem(FrobeniusSystem::new(algebra, phi, e.entries().to_vec())?))
            }
            "bialgebroid" => {
                let obj = self.object(v, path, &keys(&["base", "dim", "basis", "unit", "mul", "src", "tgt", "gamma", "counit"]))?;
                let base = match self.nested(self.get(obj, path, "base")?, &join(path, "base"))? {
                    Structure::FrobeniusSystem(s) => s,
                    other => return Err(schema(&join(path, "base"), format!("expected a frobenius-system, found {}", other.kind()))),
                };
                let (n, names) = self.dim_names(obj, path)?;
                let d = base.dim();
                let total = self.algebra(obj, path, n)?;
                let src = self.matrix(self.get(obj, path, "src")?, &join(path, "src"), n, d)?;
                let tgt = self.matrix(self.get(obj, path, "tgt")?, &join(path, "tgt"), n, d)?;
                let mut gamma = vec![self.field.zeros(n); n * n];
                for (i, s) in self.sparse(self.get(obj, path, "gamma")?, &join(path, "gamma"), &[n, n, n])? {
                    gamma[i[0] * n + i[1]][i[2]] = s;
                }
                let gamma = Matrix::from_fn(self.field, n * n, n, |r, c| gamma[r][c].clone());
                let mut counit = vec![vec![self.field.zeros(d); d]; n];
                for (i, s) in self.sparse(self.get(obj, path, "counit")?, &join(path, "counit"), &[n, d, d])? {
                    counit[i[0]][i[1]][i[2]] = s;
                }
                let counit_c = counit.into_iter().map(|m| Matrix::from_fn(self.field, d, d, |a, b| m[a][b].clone())).collect();
                Ok(Structure::Bialgebroid(FsBialgebroid { base, total, src, tgt, gamma, counit_c, names }))
            }
            "groupoid" => {
                let obj = self.object(v, path, &keys(&["objects", "arrows", "compose"]))?;
                let objects = self.usize(self.get(obj, path, "objects")?, &join(path, "objects"))?;
                let ap = join(path, "arrows");
                let arr = self.get(obj, path, "arrows")?.as_array().ok_or_else(|| schema(&ap, "expected a list"))?;
                let arrows = arr
                    .iter()
                    .enumerate()
                    .map(|(i, a)| {
                        let p = format!("{ap}[{i}]");
                        let t = a.as_array().filter(|t| t.len() == 3).ok_or_else(|| schema(&p, "expected [name, source, target]"))?;
                        let (source, target) = (self.usize(&t[1], &p)?, self.usize(&t[2], &p)?);
                        if source >= objects || target >= objects {
                            return Err(schema(&p, "object out of range"));
                        }
                        Ok(Arrow { name: self.string(&t[0], &p)?.to_string(), source, target })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let m = arrows.len();
                let cp = join(path, "compose");
                let triples = self.get(obj, path, "compose")?.as_array().ok_or_else(|| schema(&cp, "expected a list"))?;
                let mut compose = vec![vec![None; m]; m];
                for (i, t) in triples.iter().enumerate() {
                    let p = format!("{cp}[{i}]");
                    let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| schema(&p, "expected [a, b, a∘b]"))?;
                    let abc = t.iter().map(|x| self.usize(x, &p)).collect::<Result<Vec<_>>>()?;
                    if abc.iter().any(|&x| x >= m) {
                        return Err(schema(&p, "arrow out of range"));
                    }
                    if compose[abc[0]][abc[1]].replace(abc[2]).is_some() {
                        return Err(schema(&p, "duplicate composite"));
                    }
                }
                groupoid_from_parts(objects, arrows, compose).map(Structure::Groupoid)
            }
            "comodule" => {
                let obj = self.object(v, path, &keys(&["over", "dim", "delta"]))?;
                let h = match self.nested(self.get(obj, path, "over")?, &join(path, "over"))? {
                    Structure::WeakBialgebra(h) => h,
                    other => return Err(schema(&join(path, "over"), format!("expected a weak-bialgebra, found {}", other.kind()))),
                };
                let d = self.usize(self.get(obj, path, "dim")?, &join(path, "dim"))?;
                let n = h.dim();
                let mut delta = vec![self.field.zeros(d); n * d];
                for (i, s) in self.sparse(self.get(obj, path, "delta")?, &join(path, "delta"), &[n, d, d])? {
                    delta[i[0] * d + i[1]][i[2]] = s;
                }
                let delta = Matrix::from_fn(self.field, n * d, d, |r, c| delta[r][c].clone());
                Ok(Structure::Comodule(CoalgComodule { h, delta }))
            }
            "pairing" => {
                let obj = self.object(v, path, &keys(&["level", "shape", "tau"]))?;
                let level = self.string(self.get(obj, path, "level")?, &join(path, "level"))?;
                let sp = join(path, "shape");
                let shape = self
                    .get(obj, path, "shape")?
                    .as_array()
                    .ok_or_else(|| schema(&sp, "expected a list"))?
                    .iter()
                    .map(|x| self.usize(x, &sp))
                    .collect::<Result<Vec<_>>>()?;
                let tp = join(path, "tau");
                let tau = self.get(obj, path, "tau")?;
                let form = match (level, shape.as_slice()) {
                    ("weak", &[a, b]) => PairingForm::Weak(self.matrix(tau, &tp, a, b)?),
                    ("bialgebroid", &[a, b, c]) => {
                        let mut flat = self.field.zeros(a * b * c);
                        for (i, s) in self.sparse(tau, &tp, &[a, b, c])? {
                            flat[(i[0] * b + i[1]) * c + i[2]] = s;
                        }
                        PairingForm::Bialgebroid { shape: [a, b, c], tau: flat }
                    }
                    ("weak" | "bialgebroid", _) => return Err(schema(&sp, "wrong number of dimensions for the level")),
                    _ => return Err(schema(&join(path, "level"), "expected \"weak\" or \"bialgebroid\"")),
                };
                Ok(Structure::Pairing { field: self.field, form })
            }
            other => Err(schema(&join(path, "kind"), format!("unknown kind {other:?}"))),
        }
    }

    fn nested(&self, v: &Value, path: &str) -> Result<Structure> {
        let kind = v.get("kind").ok_or_else(|| schema(&join(path, "kind"), "missing"))?;
        let kind = self.string(kind, &join(path, "kind"))?;
        self.structure(kind, v, path, &["kind"])
    }
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

/// Identities and inverses are recovered from the composition table.
fn groupoid_from_parts(objects: usize, arrows: Vec<Arrow>, compose: Vec<Vec<Option<usize>>>) -> Result<FiniteGroupoid> {
    let m = arrows.len();
    let identities = (0..objects)
        .map(|x| {
            (0..m)
                .find(|&a| {
                    arrows[a].source == x
                        && arrows[a].target == x
                        && (0..m).all(|b| (arrows[b].target != x || compose[a][b] == Some(b)) && (arrows[b].source != x || compose[b][a] == Some(b)))
                })
                .ok_or_else(|| schema("compose", format!("object {x} has no identity arrow")))
        })
        .collect::<Result<Vec<_>>>()?;
    let inverse = (0..m)
        .map(|a| {
            let (s, t) = (arrows[a].source, arrows[a].target);
            (0..m)
                .find(|&b| compose[a][b] == Some(identities[t]) && compose[b][a] == Some(identities[s]))
                .ok_or_else(|| schema("compose", format!("arrow {} has no inverse", arrows[a].name)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteGroupoid { objects, arrows, compose, inverse, identities })
}

pub fn from_str(text: &str) -> Result<Structure> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    let obj = v.as_object().ok_or_else(|| schema("", "expected a top-level object"))?;
    let tag = obj.get("format").and_then(Value::as_str).ok_or_else(|| schema("format", "missing"))?;
    if tag != FORMAT_TAG {
        return Err(schema("format", format!("unsupported format {tag:?}")));
    }
    let kind = obj.get("kind").and_then(Value::as_str).ok_or_else(|| schema("kind", "missing"))?;
    let field_str = obj.get("field").and_then(Value::as_str).ok_or_else(|| schema("field", "missing"))?;
    let field: FieldSpec = field_str.parse().map_err(|e: Error| schema("field", e.to_string()))?;
    let reader = Reader { text, field };
    reader.structure(kind, &v, "", &["format", "kind", "field"])
}

pub fn load(path: &Path) -> Result<Structure> {
    from_str(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::CoalgComodule;
    use crate::zoo::fixtures::*;
    use crate::zoo::FiniteGroupoid;

    const Q: FieldSpec = FieldSpec::Rational;

    fn round_trip(s: Structure) {
        let text = to_string(&s);
        let back = from_str(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(to_string(&back), text);
    }

    #[test]
    fn every_kind_round_trips() {
        let f5 = FieldSpec::prime(5).unwrap();
        for field in [Q, f5] {
            round_trip(Structure::WeakBialgebra(pg2(field)));
            round_trip(Structure::WeakBialgebra(mx(field)));
            round_trip(Structure::WeakBialgebra(pg2_dual(field)));
            round_trip(Structure::Algebra { algebra: m2(field), names: None });
            round_trip(Structure::Coalgebra { coalgebra: pg2(field).coalgebra, names: Some(pg2(field).names.unwrap()) });
            round_trip(Structure::FrobeniusSystem(eb2(field).base));
            round_trip(Structure::Bialgebroid(eb2(field)));
            round_trip(Structure::Comodule(CoalgComodule::regular(&k2(field))));
            round_trip(Structure::Pairing { field, form: PairingForm::Weak(Matrix::identity(field, 3)) });
            round_trip(Structure::Pairing { field, form: PairingForm::Bialgebroid { shape: [2, 1, 2], tau: vec![field.one(), field.zero(), field.int(3), field.int(-1)] } });
        }
        round_trip(Structure::Bialgebroid(ebm2(Q)));
        round_trip(Structure::Groupoid(FiniteGroupoid::pair(3)));
        round_trip(Structure::Groupoid(FiniteGroupoid::cyclic(3).disjoint_union(&FiniteGroupoid::pair(2))));
    }

    #[test]
    fn layout() {
        let text = to_string(&Structure::WeakBialgebra(k2(Q)));
        assert!(text.starts_with("{\n  \"format\": \"wqg/1\",\n  \"kind\": \"weak-bialgebra\",\n  \"field\": \"Q\",\n  \"dim\": 2,\n"));
        assert!(text.contains("  \"mul\": [\n    [[0, 0, 0], \"1\"],\n"));
    }

    #[test]
    fn bad_scalar_is_a_positional_parse_error() {
        let text = to_string(&Structure::WeakBialgebra(k2(Q)));
        let broken = text.replacen("[[0, 0, 0], \"1\"]", "[[0, 0, 0], \"1/0\"]", 1);
        match from_str(&broken) {
            Err(Error::Parse { line, column, message }) => {
                let expect_line = broken.lines().position(|l| l.contains("1/0")).unwrap() + 1;
                assert_eq!(line, expect_line);
                assert_eq!(column, broken.lines().nth(line - 1).unwrap().find("1/0").unwrap() + 1);
                assert!(message.contains("mul[0]"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(from_str("{\n  \"format\": \n}"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn schema_errors() {
        let text = to_string(&Structure::WeakBialgebra(k2(Q)));
        let oob = text.replacen("[[0, 0, 0], \"1\"]", "[[0, 0, 7], \"1\"]", 1);
        assert!(matches!(from_str(&oob), Err(Error::Schema { field, .. }) if field == "mul[0]"));
        let extra = text.replacen("\"dim\": 2,", "\"dim\": 2,\n  \"colour\": \"red\",", 1);
        assert!(matches!(from_str(&extra), Err(Error::Schema { field, .. }) if field == "colour"));
        let dup = text.replacen("[[0, 0, 0], \"1\"]", "[[0, 0, 0], \"1\"],\n    [[0, 0, 0], \"2\"]", 1);
        assert!(matches!(from_str(&dup), Err(Error::Schema { field, .. }) if field == "mul"));
        let no_unit = text.replacen("\"unit\"", "\"unity\"", 1);
        assert!(matches!(from_str(&no_unit), Err(Error::Schema { .. })));
        let wrong_field = text.replacen("\"Q\"", "\"F4\"", 1);
        assert!(matches!(from_str(&wrong_field), Err(Error::Schema { field, .. }) if field == "field"));
    }

    #[test]
    fn residues_and_fractions_reduce_over_prime_fields() {
        let f5 = FieldSpec::prime(5).unwrap();
        let text = to_string(&Structure::Pairing { field: f5, form: PairingForm::Weak(Matrix::identity(f5, 1)) }).replace("\"1\"]", "\"-1/2\"]");
        let Structure::Pairing { form: PairingForm::Weak(m), .. } = from_str(&text).unwrap() else { panic!() };
        assert_eq!(m[(0, 0)], f5.int(2));
    }
}
