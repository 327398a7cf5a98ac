//! JSON reports. Field names are fixed; objects print with sorted keys, one field per line, and
//! arrays of numbers stay on one line so tuples read as rows.

use serde::Serialize;
use serde_json::Value;

use subclone::classify::{CentralType, Classification, Payload};
use subclone::finite::{Elem, Operation, Partition, Relation};
use subclone::oracle::replay::Comparison;

pub const TOOL_NAME: &str = "subclone";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

impl Tool {
    pub fn current() -> Self {
        Tool { name: TOOL_NAME, version: TOOL_VERSION }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationJson {
    pub arity: usize,
    pub k: usize,
    pub size: usize,
    pub tuples: Vec<Vec<Elem>>,
}

impl From<&Relation> for RelationJson {
    fn from(r: &Relation) -> Self {
        RelationJson { arity: r.arity(), k: r.k(), size: r.len(), tuples: r.tuples() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionJson {
    pub name: String,
    pub k: usize,
    pub blocks: Vec<Vec<Elem>>,
}

impl PartitionJson {
    pub fn new(name: &str, p: &Partition) -> Self {
        PartitionJson { name: name.to_string(), k: p.k(), blocks: p.blocks().to_vec() }
    }
}

/// Sizes of the input ρ in relational form.
#[derive(Debug, Clone, Serialize)]
pub struct RhoSummary {
    pub name: String,
    pub kind: &'static str,
    pub arity: usize,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputSummary {
    pub k: usize,
    pub theta: PartitionJson,
    pub rho: RhoSummary,
}

/// Operation table in rows of k values, the last argument varying along a row.
#[derive(Debug, Clone, Serialize)]
pub struct OperationJson {
    pub arity: usize,
    pub k: usize,
    pub table: Vec<Vec<Elem>>,
}

impl From<&Operation> for OperationJson {
    fn from(f: &Operation) -> Self {
        OperationJson { arity: f.arity(), k: f.k(), table: f.table().chunks(f.k()).map(<[Elem]>::to_vec).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Failed,
    Inconclusive,
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub label: String,
    pub kind: &'static str,
    pub status: Status,
    pub relation: Option<RelationJson>,
    pub operation: Option<OperationJson>,
    pub must_preserve: Option<Vec<RelationJson>>,
    pub must_violate: Option<Vec<RelationJson>>,
    pub elements: Option<Vec<Elem>>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralTypeJson {
    pub name: &'static str,
    pub order: Option<usize>,
    pub transversal: Option<Vec<Elem>>,
}

impl From<&CentralType> for CentralTypeJson {
    fn from(t: &CentralType) -> Self {
        match t {
            CentralType::TypeIII { order, transversal } => {
                CentralTypeJson { name: t.name(), order: Some(*order), transversal: Some(transversal.clone()) }
            }
            _ => CentralTypeJson { name: t.name(), order: None, transversal: None },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub tool: Tool,
    pub command: &'static str,
    pub input: InputSummary,
    pub class: &'static str,
    pub decision: String,
    pub criterion: String,
    pub central_type: Option<CentralTypeJson>,
    /// `construction` when statuses come from the checks made while building the certificates,
    /// `recheck` when every witness was verified again.
    pub verification: &'static str,
    pub status: Status,
    pub certificates: Vec<CertificateJson>,
}

impl ClassifyReport {
    /// The one-line summary, e.g. `Submaximal, central type I`.
    pub fn headline(&self) -> String {
        match &self.central_type {
            Some(t) if self.class == "central" => format!("{}, central type {}", self.decision, t.name),
            _ => format!("{}, {} {}", self.decision, self.class, self.criterion),
        }
    }
}

/// Builds a report; `recheck` re-verifies every witness instead of trusting the stored flag.
pub fn classify_report(input: InputSummary, c: &Classification, recheck: bool) -> subclone::Result<ClassifyReport> {
    let mut certificates = Vec::with_capacity(c.certificates.len());
    for cert in &c.certificates {
        let mut j = CertificateJson {
            label: cert.label.clone(),
            kind: "",
            status: Status::NotApplicable,
            relation: None,
            operation: None,
            must_preserve: None,
            must_violate: None,
            elements: None,
            note: None,
        };
        match &cert.payload {
            Payload::Relation(r) => {
                j.kind = "relation";
                j.relation = Some(r.into());
            }
            Payload::Witness(w) => {
                let ok = if recheck { w.verified && w.verify()? } else { w.verified };
                j.kind = "witness";
                j.status = if ok { Status::Verified } else { Status::Failed };
                j.operation = Some((&w.operation).into());
                j.must_preserve = Some(w.must_preserve.iter().map(Into::into).collect());
                j.must_violate = Some(w.must_violate.iter().map(Into::into).collect());
            }
            Payload::Elements(e) => {
                j.kind = "elements";
                j.elements = Some(e.clone());
            }
            Payload::Note(s) => {
                j.kind = "note";
                j.status = Status::Inconclusive;
                j.note = Some(s.clone());
            }
        }
        certificates.push(j);
    }
    let status = overall(certificates.iter().map(|c| c.status));
    Ok(ClassifyReport {
        tool: Tool::current(),
        command: "classify",
        input,
        class: c.class.name(),
        decision: c.decision.to_string(),
        criterion: c.criterion.name(),
        central_type: c.central_type.as_ref().map(Into::into),
        verification: if recheck { "recheck" } else { "construction" },
        status,
        certificates,
    })
}

/// Failed beats inconclusive beats verified.
pub fn overall(statuses: impl Iterator<Item = Status>) -> Status {
    let mut out = Status::Verified;
    for s in statuses {
        match s {
            Status::Failed => return Status::Failed,
            Status::Inconclusive => out = Status::Inconclusive,
            _ => {}
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteJson {
    pub name: &'static str,
    pub checks: usize,
    pub agreed: usize,
    pub results: Vec<CheckJson>,
}

impl SuiteJson {
    pub fn new(name: &'static str, results: &[Comparison]) -> Self {
        SuiteJson {
            name,
            checks: results.len(),
            agreed: results.iter().filter(|c| c.agree).count(),
            results: results.iter().map(|c| CheckJson { name: c.name.clone(), agree: c.agree }).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub tool: Tool,
    pub command: &'static str,
    pub status: Status,
    pub suites: Vec<SuiteJson>,
}

/// Renders any serializable report in the fixed layout, ending with a newline.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    let mut s = String::new();
    render(&value, 0, &mut s);
    s.push('\n');
    s
}

fn flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize, out: &mut String| out.extend(std::iter::repeat_n("  ", d));
    match v {
        Value::Array(xs) if flat(v) => {
            out.push('[');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        Value::Array(xs) => {
            if xs.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                pad(depth + 1, out);
                render(x, depth + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            pad(depth, out);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (key, x)) in map.iter().enumerate() {
                pad(depth + 1, out);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                render(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(depth, out);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn layout() {
        let v = json!({"b": [[0, 1], [1, 0]], "a": {"x": null, "y": "s"}, "c": [], "d": [3, 4]});
        let expected = "{\n  \"a\": {\n    \"x\": null,\n    \"y\": \"s\"\n  },\n  \"b\": [\n    [0, 1],\n    [1, 0]\n  ],\n  \"c\": [],\n  \"d\": [3, 4]\n}\n";
        assert_eq!(to_json(&v), expected);
    }

    #[test]
    fn rendering_is_valid_json() {
        let r = RelationJson::from(&subclone::fixtures::upsilon3());
        let text = to_json(&r);
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, serde_json::to_value(&r).unwrap());
    }

    #[test]
    fn status_precedence() {
        use Status::*;
        assert_eq!(overall([Verified, NotApplicable].into_iter()), Verified);
        assert_eq!(overall([Inconclusive, Verified].into_iter()), Inconclusive);
        assert_eq!(overall([Inconclusive, Failed].into_iter()), Failed);
    }
}
