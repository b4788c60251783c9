//! Report trees and their two renderings.
//!
//! The machine rendering is a YAML subset, stable byte for byte:
//!
//! * `key: value` per line, nested maps indented by two spaces;
//! * booleans `true`/`false`, integers in decimal, absent values `null`;
//! * text double-quoted with `\"` and `\\` escapes;
//! * element sets and table rows as `[0, 1, 2]`, relations as `[[0, 1], [0, 2]]`;
//! * lists and tables as `- ` items, table rows as maps keyed by column;
//! * empty maps as `{}`, empty lists as `[]`.
//!
//! Keys appear in insertion order. The human rendering uses the same keys
//! with `yes`/`no`, sets as `{0,1}`, relations as `0→1, 0→2` and tables
//! as aligned columns.

use std::fmt::Write as _;

use crate::actions::{ActionReport, GhReport, HgReport};
use crate::monoid::{FiniteMonoid, Submonoid};
use crate::pom::{coset_table, ClassificationReport, NormalityWitness, QuadWitness};
use crate::relation::Preorder;
use crate::schreier::{ConsequencesReport, SchreierReport};
use crate::zz::ZzReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Null,
    Bool(bool),
    Int(i64),
    Text(String),
    Set(Vec<usize>),
    /// A set equal to the whole carrier; rendered by name in human output.
    Carrier { name: String, members: Vec<usize> },
    Edges(Vec<(usize, usize)>),
    /// A table row or map; `[0, 1]` in machine output, `0 1` in human output.
    Row(Vec<usize>),
    List(Vec<Value>),
    Map(Report),
    Table(Table),
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(i: usize) -> Self {
        Value::Int(i as i64)
    }
}

impl From<i64> for Value {
    fn from(i: i64) -> Self {
        Value::Int(i)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<Report> for Value {
    fn from(r: Report) -> Self {
        Value::Map(r)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(o: Option<T>) -> Self {
        o.map_or(Value::Null, Into::into)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    /// `(machine key, human header)`
    pub columns: Vec<(String, String)>,
    pub rows: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.entries.push((key.to_owned(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

pub fn render(report: &Report, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Machine if report.is_empty() => out.push_str("{}\n"),
        Format::Machine => machine_map(&mut out, report, 0),
        Format::Human => human_map(&mut out, report, 0),
    }
    out
}

fn pad(n: usize) -> String {
    " ".repeat(n)
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        match c {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            '\n' => q.push_str("\\n"),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(sep)
}

/// Inline machine form, or `None` for values that need a block.
fn machine_inline(v: &Value) -> Option<String> {
    Some(match v {
        Value::Null => "null".into(),
        Value::Bool(b) => b.to_string(),
        Value::Int(i) => i.to_string(),
        Value::Text(s) => quote(s),
        Value::Set(s) | Value::Carrier { members: s, .. } | Value::Row(s) => format!("[{}]", join(s, ", ")),
        Value::Edges(e) => format!("[{}]", e.iter().map(|(a, b)| format!("[{a}, {b}]")).collect::<Vec<_>>().join(", ")),
        Value::Map(r) if r.is_empty() => "{}".into(),
        Value::List(l) if l.is_empty() => "[]".into(),
        Value::Table(t) if t.rows.is_empty() => "[]".into(),
        _ => return None,
    })
}

fn machine_map(out: &mut String, r: &Report, indent: usize) {
    for (k, v) in &r.entries {
        match machine_inline(v) {
            Some(s) => writeln!(out, "{}{k}: {s}", pad(indent)).unwrap(),
            None => {
                writeln!(out, "{}{k}:", pad(indent)).unwrap();
                machine_block(out, v, indent + 2);
            }
        }
    }
}

fn machine_block(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Map(r) => machine_map(out, r, indent),
        Value::List(items) => {
            for item in items {
                machine_item(out, item, indent);
            }
        }
        Value::Table(t) => {
            for row in &t.rows {
                let r = Report {
                    entries: t.columns.iter().map(|(k, _)| k.clone()).zip(row.iter().cloned()).collect(),
                };
                machine_item(out, &Value::Map(r), indent);
            }
        }
        _ => unreachable!("inline values are handled by the caller"),
    }
}

fn machine_item(out: &mut String, item: &Value, indent: usize) {
    if let Some(s) = machine_inline(item) {
        writeln!(out, "{}- {s}", pad(indent)).unwrap();
        return;
    }
    let mut inner = String::new();
    machine_block(&mut inner, item, indent + 2);
    let mut lines = inner.lines();
    if let Some(first) = lines.next() {
        writeln!(out, "{}- {}", pad(indent), &first[indent + 2..]).unwrap();
    }
    for line in lines {
        writeln!(out, "{line}").unwrap();
    }
}

fn human_inline(v: &Value) -> Option<String> {
    Some(match v {
        Value::Null => "-".into(),
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::Int(i) => i.to_string(),
        Value::Text(s) => s.clone(),
        Value::Set(s) => format!("{{{}}}", join(s, ",")),
        Value::Carrier { name, .. } => name.clone(),
        Value::Row(r) => join(r, " "),
        Value::Edges(e) if e.is_empty() => "(none)".into(),
        Value::Edges(e) => e.iter().map(|(a, b)| format!("{a}→{b}")).collect::<Vec<_>>().join(", "),
        Value::Map(r) if r.is_empty() => "(empty)".into(),
        Value::List(l) if l.is_empty() => "(none)".into(),
        Value::List(l) if l.iter().all(|i| matches!(i, Value::Int(_))) => {
            l.iter().map(|i| human_inline(i).unwrap()).collect::<Vec<_>>().join(" ")
        }
        _ => return None,
    })
}

fn human_map(out: &mut String, r: &Report, indent: usize) {
    for (k, v) in &r.entries {
        match human_inline(v) {
            Some(s) => writeln!(out, "{}{k}: {s}", pad(indent)).unwrap(),
            None => {
                writeln!(out, "{}{k}:", pad(indent)).unwrap();
                human_block(out, v, indent + 2);
            }
        }
    }
}

fn human_block(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Map(r) => human_map(out, r, indent),
        Value::List(items) => {
            for item in items {
                match human_inline(item) {
                    Some(s) => writeln!(out, "{}- {s}", pad(indent)).unwrap(),
                    None => {
                        writeln!(out, "{}-", pad(indent)).unwrap();
                        human_block(out, item, indent + 2);
                    }
                }
            }
        }
        Value::Table(t) => human_table(out, t, indent),
        _ => unreachable!("inline values are handled by the caller"),
    }
}

fn human_table(out: &mut String, t: &Table, indent: usize) {
    let cells: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| r.iter().map(|v| human_inline(v).unwrap_or_else(|| "…".into())).collect())
        .collect();
    let widths: Vec<usize> = t
        .columns
        .iter()
        .enumerate()
        .map(|(i, (_, h))| cells.iter().map(|r| r[i].chars().count()).chain([h.chars().count()]).max().unwrap())
        .collect();
    let line = |items: Vec<&str>| -> String {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        format!("{}{}", pad(indent), padded.join(" | ").trim_end())
    };
    writeln!(out, "{}", line(t.columns.iter().map(|(_, h)| h.as_str()).collect())).unwrap();
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    writeln!(out, "{}{}", pad(indent), rule.join("-+-")).unwrap();
    for r in &cells {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).unwrap();
    }
}

fn quad(w: QuadWitness) -> Report {
    Report::new().with("a", w.0).with("b", w.1).with("c", w.2).with("d", w.3)
}

fn normality(w: NormalityWitness) -> Report {
    Report::new().with("a", w.a).with("element", w.element)
}

/// The full carrier renders as `carrier` in human output.
pub fn subset_value(m: &FiniteMonoid, members: Vec<usize>, carrier: &str) -> Value {
    if members.len() == m.size() {
        Value::Carrier { name: carrier.to_owned(), members }
    } else {
        Value::Set(members)
    }
}

pub fn edges(r: &Preorder) -> Value {
    Value::Edges(r.strict_pairs())
}

pub fn classify_report(order: &Preorder, m: &FiniteMonoid, c: &ClassificationReport) -> Report {
    let mut r = Report::new()
        .with("size", m.size())
        .with("commutative", c.commutative)
        .with("compatible", c.compatible)
        .with("cone", Value::Set(c.cone.clone()))
        .with("order", edges(order))
        .with("induced_right", edges(&c.induced_right))
        .with("induced_left", edges(&c.induced_left))
        .with("in_ordmon_star", c.in_ordmon_star)
        .with("cone_right_normal", c.cone_right_normal)
        .with("cone_left_normal", c.cone_left_normal)
        .with("induced_right_compatible", c.induced_right_compatible)
        .with("induced_left_compatible", c.induced_left_compatible);
    let mut w = Report::new();
    if let Some(q) = c.compatible_witness {
        w.push("compatible", quad(q));
    }
    if let Some((a, b)) = c.ordmon_star_witness {
        let lost = Report::new().with("a", a).with("b", b);
        w.push("in_ordmon_star", lost);
    }
    if let Some(n) = c.right_normal_witness {
        w.push("cone_right_normal", normality(n));
    }
    if let Some(n) = c.left_normal_witness {
        w.push("cone_left_normal", normality(n));
    }
    for (key, wit) in [
        ("induced_right_compatible", c.induced_right_witness),
        ("induced_left_compatible", c.induced_left_witness),
    ] {
        if let Some(q) = wit {
            let (a, _, c2, d) = q;
            w.push(key, quad(q).with("lhs", m.op(a, c2)).with("rhs", m.op(q.1, d)));
        }
    }
    r.push("witnesses", w);
    r
}

pub fn cosets_report(m: &FiniteMonoid, s: &Submonoid) -> Report {
    let name = if s.is_full() { "A" } else { "S" };
    let rows = coset_table(m, s)
        .into_iter()
        .map(|row| {
            vec![
                Value::Int(row.element as i64),
                subset_value(m, row.left, "A"),
                subset_value(m, row.right, "A"),
            ]
        })
        .collect();
    let table = Table {
        columns: vec![
            ("a".into(), "a".into()),
            ("left".into(), format!("a+{name}")),
            ("right".into(), format!("{name}+a")),
        ],
        rows,
    };
    Report::new()
        .with("submonoid", subset_value(m, s.members().to_vec(), "A"))
        .with("cosets", Value::Table(table))
}

pub fn normality_report(m: &FiniteMonoid, s: &Submonoid) -> Report {
    let rn = crate::pom::right_normality_witness(m, s);
    let ln = crate::pom::left_normality_witness(m, s);
    Report::new()
        .with("submonoid", Value::Set(s.members().to_vec()))
        .with("right_normal", rn.is_none())
        .with("left_normal", ln.is_none())
        .with("normal", rn.is_none() && ln.is_none())
        .with("right_normal_witness", rn.map(normality))
        .with("left_normal_witness", ln.map(normality))
}

pub fn schreier_report(r: &SchreierReport, q: Option<&[usize]>) -> Report {
    Report::new()
        .with("schreier", r.holds())
        .with("retraction", q.map(|q| Value::Row(q.to_vec())))
        .with("s1_witness", r.s1)
        .with("s2_witness", r.s2.map(|(x, b)| Report::new().with("x", x).with("b", b)))
}

pub fn consequences_report(c: &ConsequencesReport) -> Report {
    let pair = |w: Option<(usize, usize)>, names: [&str; 2]| w.map(|(a, b)| Report::new().with(names[0], a).with(names[1], b));
    Report::new()
        .with("holds", c.holds())
        .with("c1", c.c1.is_none())
        .with("c2", c.c2.is_none())
        .with("c3_alpha_hom", c.c3_alpha_hom)
        .with("c3_beta_hom", c.c3_beta_hom)
        .with("c3_inverse", c.c3_inverse)
        .with("c4", c.c4)
        .with("c1_witness", pair(c.c1, ["b", "x"]))
        .with("c2_witness", pair(c.c2, ["a1", "a2"]))
}

pub fn action_report(r: &ActionReport) -> Report {
    let quad4 = |w: Option<(usize, usize, usize, usize)>, names: [&str; 4]| {
        w.map(|(a, b, c, d)| {
            Report::new().with(names[0], a).with(names[1], b).with(names[2], c).with(names[3], d)
        })
    };
    Report::new()
        .with("valid", r.holds())
        .with("a1", r.a1.is_none())
        .with("a2", r.a2.is_none())
        .with("a3", r.a3.is_none())
        .with("a4", r.a4.is_none())
        .with("a1_witness", r.a1.map(|v| Report::new().with("v", v)))
        .with("a2_witness", r.a2.map(|x| Report::new().with("x", x)))
        .with("a3_witness", quad4(r.a3, ["x", "b", "x2", "b2"]))
        .with("a4_witness", quad4(r.a4, ["u", "v", "x", "b"]))
}

pub fn hg_report(r: &HgReport) -> Report {
    Report::new()
        .with("holds", r.holds())
        .with("beta", Value::Row(r.beta.clone()))
        .with("beta_hom", r.beta_hom)
        .with("beta_bijective", r.beta_bijective)
        .with("commutes_k", r.commutes_k)
        .with("commutes_p", r.commutes_p)
        .with("commutes_s", r.commutes_s)
        .with("cone_bijection", r.cone_bijection)
}

pub fn gh_report(r: &GhReport) -> Report {
    Report::new()
        .with("holds", r.holds())
        .with("same_monoids", r.same_monoids)
        .with("same_cones", r.same_cones)
        .with("same_phi", r.same_phi)
        .with("same_fixed_points", r.same_fixed_points)
        .with("same_xi", r.same_xi)
}

pub fn zz_report(r: &ZzReport) -> Report {
    let mut checks = Report::new();
    for (name, value) in [
        ("membership", &r.membership),
        ("xi_agrees_with_g", &r.xi_agrees_with_g),
        ("homs", &r.homs),
        ("split", &r.split),
        ("s1", &r.s1),
        ("s2", &r.s2),
        ("a1", &r.a1),
        ("a2", &r.a2),
        ("a3", &r.a3),
        ("a4", &r.a4),
        ("beta", &r.beta),
    ] {
        checks.push(name, value.is_none());
    }
    let failures: Vec<Value> = r
        .failures()
        .into_iter()
        .map(|(name, msg)| Value::Text(format!("{name}: {msg}")))
        .collect();
    Report::new()
        .with("window", r.window)
        .with("fixed_points", "0 <= u <= v")
        .with("positive_pairs", r.positive_pairs)
        .with("negative_pairs", r.negative_pairs)
        .with("holds", r.holds())
        .with("checks", checks)
        .with("failures", Value::List(failures))
}
