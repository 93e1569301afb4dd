use serde_json::{json, Value};

use crate::exactla::vector::sparse_diff;
use crate::exactla::Scalar;

/// Witnesses kept per item; the first one is always the lexicographically
/// first failing tuple.
const WITNESS_CAP: usize = 1024;

/// A failing instance of an axiom: the basis indices it was evaluated on
/// and the nonzero entries of `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub discrepancy: Vec<(usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub id: String,
    pub passed: bool,
    /// Number of instances evaluated.
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckItem {
    pub fn new(id: impl Into<String>) -> Self {
        CheckItem { id: id.into(), passed: true, checked: 0, witnesses: Vec::new() }
    }

    /// Compare two coefficient vectors for the instance `indices`.
    pub fn record(&mut self, indices: &[usize], lhs: &[Scalar], rhs: &[Scalar]) {
        self.checked += 1;
        let diff = sparse_diff(lhs, rhs);
        if !diff.is_empty() {
            self.fail(indices, diff);
        }
    }

    pub fn record_scalar(&mut self, indices: &[usize], lhs: &Scalar, rhs: &Scalar) {
        self.record(indices, std::slice::from_ref(lhs), std::slice::from_ref(rhs));
    }

    /// Record a yes/no condition; a failure carries an empty discrepancy.
    pub fn record_bool(&mut self, indices: &[usize], ok: bool) {
        self.checked += 1;
        if !ok {
            self.fail(indices, Vec::new());
        }
    }

    fn fail(&mut self, indices: &[usize], discrepancy: Vec<(usize, Scalar)>) {
        self.passed = false;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(Witness { indices: indices.to_vec(), discrepancy });
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

/// Outcome of an axiom suite. `overall()` is the conjunction of its items.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    /// Append `other`'s items with ids prefixed by `prefix/`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        self.items.extend(other.items.into_iter().map(|mut it| {
            it.id = format!("{prefix}/{}", it.id);
            it
        }));
    }

    pub fn overall(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn item(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.id == id)
    }

    /// Whether item `id` exists and passed.
    pub fn passed(&self, id: &str) -> bool {
        self.item(id).is_some_and(|i| i.passed)
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.items.iter().filter(|i| !i.passed).map(|i| i.id.clone()).collect()
    }

    /// Stable JSON rendering. Basis indices are rendered by name when
    /// `names` is given.
    pub fn to_json(&self, all_witnesses: bool, names: Option<&[String]>) -> Value {
        let render_index = |i: usize| -> Value {
            match names.and_then(|n| n.get(i)) {
                Some(name) => json!(name),
                None => json!(i),
            }
        };
        let items: Vec<Value> = self
            .items
            .iter()
            .map(|it| {
                let mut obj = serde_json::Map::new();
                obj.insert("id".into(), json!(it.id));
                obj.insert("status".into(), json!(if it.passed { "pass" } else { "fail" }));
                obj.insert("checked".into(), json!(it.checked));
                let ws: Vec<&Witness> = if all_witnesses { it.witnesses.iter().collect() } else { it.witnesses.iter().take(1).collect() };
                if !ws.is_empty() {
                    let rendered: Vec<Value> = ws
                        .iter()
                        .map(|w| {
                            json!({
                                "indices": w.indices.iter().map(|&i| render_index(i)).collect::<Vec<_>>(),
                                "discrepancy": w.discrepancy.iter().map(|(i, s)| json!([i, s.to_string()])).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    if all_witnesses {
                        obj.insert("witnesses".into(), Value::Array(rendered));
                    } else {
                        obj.insert("witness".into(), rendered.into_iter().next().unwrap());
                    }
                }
                Value::Object(obj)
            })
            .collect();
        json!({ "overall": if self.overall() { "pass" } else { "fail" }, "items": items })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;

    #[test]
    fn overall_is_conjunction() {
        let q = FieldSpec::Rational;
        let mut a = CheckItem::new("a");
        a.record(&[0], &[q.one()], &[q.one()]);
        let mut b = CheckItem::new("b");
        b.record(&[1, 2], &[q.one(), q.zero()], &[q.zero(), q.zero()]);
        b.record(&[3, 4], &[q.one()], &[q.zero()]);
        let mut r = CheckReport::new();
        r.push(a);
        assert!(r.overall());
        r.push(b);
        assert!(!r.overall());
        let w = r.item("b").unwrap().witness().unwrap();
        assert_eq!(w.indices, vec![1, 2]);
        assert_eq!(w.discrepancy, vec![(0, q.one())]);
        assert_eq!(r.failed_ids(), vec!["b".to_string()]);
    }
}
