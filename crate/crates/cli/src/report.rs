//! Reports: an ordered list of named entries, emitted either as JSON
//! (`command`, `verdicts`, `witnesses`, `results`, `error`) or as
//! `key: value` lines with 1-based basis labels.

use hjl_core::linalg::format_rational;
use hjl_core::{HjlAlgebra, Matrix, Rational, Subspace, Tensor3, Verdict, Witness};
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::formats::{algebra_value, cochain_value, matrix_value, subspace_value, vector_value};

#[derive(Clone, Debug)]
pub enum Item {
    /// A checked identity; failures carry a witness and make the exit code 1.
    Verdict(Verdict),
    /// A checked condition without a witness; `false` makes the exit code 1.
    Check(bool),
    /// An informational boolean that does not affect the exit code.
    Flag(bool),
    Number(usize),
    OptionalNumber(Option<usize>),
    Text(String),
    Algebra(String, HjlAlgebra),
    Matrix(Matrix),
    Matrices(Vec<Matrix>),
    /// A 2-cochain; the string is its file kind.
    Tensor(&'static str, Tensor3),
    Tensors(&'static str, Vec<Tensor3>),
    Subspace(Subspace),
    Subspaces(Vec<Subspace>),
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    command: Option<String>,
    entries: Vec<(String, Item)>,
    error: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: Some(command.into()),
            ..Report::default()
        }
    }

    pub fn push(&mut self, key: impl Into<String>, item: Item) -> &mut Self {
        self.entries.push((key.into(), item));
        self
    }

    pub fn verdict(&mut self, key: impl Into<String>, v: Verdict) -> &mut Self {
        self.push(key, Item::Verdict(v))
    }

    pub fn check(&mut self, key: impl Into<String>, b: bool) -> &mut Self {
        self.push(key, Item::Check(b))
    }

    /// A failed check that cannot be expressed as a verdict.
    pub fn fail(&mut self, message: impl Into<String>) -> &mut Self {
        self.error = Some(message.into());
        self
    }

    pub fn entries(&self) -> &[(String, Item)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Item> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn all_hold(&self) -> bool {
        self.error.is_none()
            && self.entries.iter().all(|(_, item)| match item {
                Item::Verdict(v) => v.holds(),
                Item::Check(b) => *b,
                _ => true,
            })
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_hold() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        if let Some(c) = &self.command {
            out.insert("command".into(), json!(c));
        }
        let mut verdicts = Map::new();
        let mut witnesses = Map::new();
        let mut results = Map::new();
        for (key, item) in &self.entries {
            match item {
                Item::Verdict(v) => {
                    verdicts.insert(key.clone(), json!(v.holds()));
                    if let Some(w) = v.witness() {
                        witnesses.insert(key.clone(), witness_value(w));
                    }
                }
                Item::Check(b) => {
                    verdicts.insert(key.clone(), json!(b));
                }
                other => {
                    results.insert(key.clone(), item_value(other));
                }
            }
        }
        for (name, section) in [("verdicts", verdicts), ("witnesses", witnesses), ("results", results)] {
            if !section.is_empty() {
                out.insert(name.into(), Value::Object(section));
            }
        }
        if let Some(e) = &self.error {
            out.insert("error".into(), json!(e));
        }
        Value::Object(out)
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        if let Some(c) = &self.command {
            out.push_str(&format!("command: {c}\n"));
        }
        for (key, item) in &self.entries {
            render_item(&mut out, key, item);
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        out
    }
}

fn witness_value(w: &Witness) -> Value {
    json!({
        "indices": w.indices,
        "lhs": vector_value(&w.lhs),
        "rhs": vector_value(&w.rhs),
    })
}

fn item_value(item: &Item) -> Value {
    match item {
        Item::Verdict(v) => json!(v.holds()),
        Item::Check(b) | Item::Flag(b) => json!(b),
        Item::Number(n) => json!(n),
        Item::OptionalNumber(n) => json!(n),
        Item::Text(t) => json!(t),
        Item::Algebra(name, l) => algebra_value(name, l),
        Item::Matrix(m) => matrix_value(m),
        Item::Matrices(ms) => Value::Array(ms.iter().map(matrix_value).collect()),
        Item::Tensor(kind, t) => cochain_value(kind, t),
        Item::Tensors(kind, ts) => Value::Array(ts.iter().map(|t| cochain_value(kind, t)).collect()),
        Item::Subspace(s) => subspace_value(s),
        Item::Subspaces(ss) => Value::Array(ss.iter().map(subspace_value).collect()),
    }
}

/// `e1 - 1/2 e3`, or `0`.
pub fn combination(v: &[Rational], prefix: &str) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let abs = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format_rational(&abs));
            out.push(' ');
        }
        out.push_str(&format!("{prefix}{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn row_text(r: &[Rational]) -> String {
    let parts: Vec<String> = r.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn push_matrix(out: &mut String, m: &Matrix, indent: &str) {
    if m.rows() == 0 {
        out.push_str(&format!("{indent}[]\n"));
    }
    for r in 0..m.rows() {
        out.push_str(&format!("{indent}{}\n", row_text(m.row(r))));
    }
}

fn push_tensor(out: &mut String, t: &Tensor3, indent: &str) {
    let (a, b, _) = t.dims();
    let mut any = false;
    for i in 0..a {
        for j in 0..b {
            let f = t.fiber(i, j);
            if f.iter().any(|x| !x.is_zero()) {
                any = true;
                out.push_str(&format!(
                    "{indent}(e{}, e{}) -> {}\n",
                    i + 1,
                    j + 1,
                    combination(&f, "e")
                ));
            }
        }
    }
    if !any {
        out.push_str(&format!("{indent}0\n"));
    }
}

fn push_subspace(out: &mut String, s: &Subspace, indent: &str) {
    if s.is_zero() {
        out.push_str(&format!("{indent}0\n"));
    }
    for v in s.basis() {
        out.push_str(&format!("{indent}{}\n", combination(v, "e")));
    }
}

fn render_item(out: &mut String, key: &str, item: &Item) {
    match item {
        Item::Verdict(Verdict::Holds) => out.push_str(&format!("{key}: true\n")),
        Item::Verdict(Verdict::Fails(w)) => out.push_str(&format!("{key}: false at {w}\n")),
        Item::Check(b) | Item::Flag(b) => out.push_str(&format!("{key}: {b}\n")),
        Item::Number(n) => out.push_str(&format!("{key}: {n}\n")),
        Item::OptionalNumber(Some(n)) => out.push_str(&format!("{key}: {n}\n")),
        Item::OptionalNumber(None) => out.push_str(&format!("{key}: none\n")),
        Item::Text(t) => out.push_str(&format!("{key}: {t}\n")),
        Item::Algebra(name, l) => {
            out.push_str(&format!("{key}: {name} (dim {}, delta {})\n", l.dim(), l.delta()));
            for i in 0..l.dim() {
                for j in 0..l.dim() {
                    let v = l.br_basis(i, j);
                    if v.iter().any(|x| !x.is_zero()) {
                        out.push_str(&format!("  [e{}, e{}] = {}\n", i + 1, j + 1, combination(&v, "e")));
                    }
                }
            }
            out.push_str("  alpha:\n");
            push_matrix(out, l.alpha(), "    ");
        }
        Item::Matrix(m) => {
            out.push_str(&format!("{key}:\n"));
            push_matrix(out, m, "  ");
        }
        Item::Matrices(ms) => {
            out.push_str(&format!("{key} ({}):\n", ms.len()));
            for (i, m) in ms.iter().enumerate() {
                out.push_str(&format!("  {}:\n", i + 1));
                push_matrix(out, m, "    ");
            }
        }
        Item::Tensor(_, t) => {
            out.push_str(&format!("{key}:\n"));
            push_tensor(out, t, "  ");
        }
        Item::Tensors(_, ts) => {
            out.push_str(&format!("{key} ({}):\n", ts.len()));
            for (i, t) in ts.iter().enumerate() {
                out.push_str(&format!("  {}:\n", i + 1));
                push_tensor(out, t, "    ");
            }
        }
        Item::Subspace(s) => {
            out.push_str(&format!("{key} (dim {}):\n", s.dim()));
            push_subspace(out, s, "  ");
        }
        Item::Subspaces(ss) => {
            out.push_str(&format!("{key} ({}):\n", ss.len()));
            for (i, s) in ss.iter().enumerate() {
                out.push_str(&format!("  {} (dim {}):\n", i, s.dim()));
                push_subspace(out, s, "    ");
            }
        }
    }
}
