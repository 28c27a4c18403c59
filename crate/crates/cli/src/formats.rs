//! JSON file formats. Rationals are always strings (`"3"`, `"-1/2"`);
//! indices are 0-based integers.
//!
//! ```json
//! {"name": "aff2", "dim": 2, "delta": 1,
//!  "bracket": [[0, 1, 0, "1"]],
//!  "alpha": [["1", "0"], ["0", "1"]]}
//! ```
//!
//! Bracket and cochain entries may be given for one ordering of each pair;
//! the other is completed by the sign rule.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use hjl_core::linalg::{format_rational, parse_rational};
use hjl_core::{Error as CoreError, HjlAlgebra, Matrix, Rational, Sign, Subspace, Tensor3};
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: invalid JSON at line {line}, column {column}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Field(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if !e.is_input_error() => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn field(msg: impl Into<String>) -> CliError {
    CliError::Field(msg.into())
}

pub fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Json {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e
            .to_string()
            .replace(&format!(" at line {} column {}", e.line(), e.column()), ""),
    })
}

fn get<'a>(v: &'a Value, key: &str, ctx: &str) -> CliResult<&'a Value> {
    v.get(key).ok_or_else(|| field(format!("{ctx}: missing field `{key}`")))
}

fn as_index(v: &Value, ctx: &str) -> CliResult<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| field(format!("{ctx}: expected a nonnegative integer")))
}

fn as_array<'a>(v: &'a Value, ctx: &str) -> CliResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| field(format!("{ctx}: expected an array")))
}

pub fn parse_rational_value(v: &Value, ctx: &str) -> CliResult<Rational> {
    v.as_str()
        .and_then(parse_rational)
        .ok_or_else(|| field(format!("{ctx}: expected a rational string like \"-3/4\"")))
}

pub fn rational_value(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn check_kind(v: &Value, expected: &str, optional: bool) -> CliResult<()> {
    match v.get("kind").and_then(Value::as_str) {
        Some(k) if k == expected => Ok(()),
        None if optional => Ok(()),
        Some(k) => Err(field(format!("expected a `{expected}` file, found kind `{k}`"))),
        None => Err(field(format!("expected a `{expected}` file, missing field `kind`"))),
    }
}

pub fn parse_matrix_value(v: &Value, ctx: &str) -> CliResult<Matrix> {
    let rows = as_array(v, ctx)?;
    let mut data = Vec::new();
    let mut cols = None;
    for (r, row) in rows.iter().enumerate() {
        let row = as_array(row, &format!("{ctx}[{r}]"))?;
        if *cols.get_or_insert(row.len()) != row.len() {
            return Err(field(format!("{ctx}[{r}]: rows have different lengths")));
        }
        for (c, x) in row.iter().enumerate() {
            data.push(parse_rational_value(x, &format!("{ctx}[{r}][{c}]"))?);
        }
    }
    Ok(Matrix::from_data(rows.len(), cols.unwrap_or(0), data))
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(rational_value).collect()))
            .collect(),
    )
}

pub fn vector_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_value).collect())
}

fn parse_sign(v: &Value, ctx: &str) -> CliResult<Sign> {
    v.as_i64()
        .and_then(Sign::from_i64)
        .ok_or_else(|| field(format!("{ctx}: delta must be 1 or -1")))
}

type Entries = Vec<(usize, usize, usize, Rational)>;

fn parse_entries(v: &Value, dims: (usize, usize, usize), ctx: &str) -> CliResult<Entries> {
    let mut out = Vec::new();
    for (e, entry) in as_array(v, ctx)?.iter().enumerate() {
        let ectx = format!("{ctx}[{e}]");
        let parts = as_array(entry, &ectx)?;
        if parts.len() != 4 {
            return Err(field(format!("{ectx}: expected [i, j, k, \"value\"]")));
        }
        let i = as_index(&parts[0], &ectx)?;
        let j = as_index(&parts[1], &ectx)?;
        let k = as_index(&parts[2], &ectx)?;
        if i >= dims.0 || j >= dims.1 || k >= dims.2 {
            return Err(field(format!("{ectx}: index ({i}, {j}, {k}) out of range {dims:?}")));
        }
        out.push((i, j, k, parse_rational_value(&parts[3], &ectx)?));
    }
    Ok(out)
}

/// Fills in `(j, i, k)` from `(i, j, k)` by `c(j,i,k) = −δ c(i,j,k)`,
/// rejecting duplicate or mirrored entries that disagree.
pub fn complete_by_sign_rule(delta: Sign, dims: (usize, usize, usize), entries: &Entries) -> CliResult<Tensor3> {
    let d = delta.rational();
    let mut given: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
    for (i, j, k, c) in entries {
        if let Some(prev) = given.insert((*i, *j, *k), c.clone()) {
            if &prev != c {
                return Err(CoreError::SignRule { i: *i, j: *j, k: *k }.into());
            }
        }
    }
    let mut t = Tensor3::zeros(dims);
    for ((i, j, k), c) in &given {
        let mirrored = -&d * c;
        if let Some(other) = given.get(&(*j, *i, *k)) {
            if other != &mirrored {
                return Err(CoreError::SignRule { i: *i, j: *j, k: *k }.into());
            }
        }
        t.set(*i, *j, *k, c.clone());
        t.set(*j, *i, *k, mirrored);
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedAlgebra {
    pub name: String,
    pub algebra: HjlAlgebra,
}

pub fn parse_algebra_value(v: &Value) -> CliResult<NamedAlgebra> {
    check_kind(v, "algebra", true)?;
    let name = v.get("name").and_then(Value::as_str).unwrap_or("").to_string();
    let dim = as_index(get(v, "dim", "algebra")?, "dim")?;
    let delta = parse_sign(get(v, "delta", "algebra")?, "delta")?;
    let alpha = parse_matrix_value(get(v, "alpha", "algebra")?, "alpha")?;
    if alpha.rows() != dim || alpha.cols() != dim {
        return Err(CoreError::Shape(format!(
            "alpha is {}x{}, expected {dim}x{dim}",
            alpha.rows(),
            alpha.cols()
        ))
        .into());
    }
    let entries = parse_entries(get(v, "bracket", "algebra")?, (dim, dim, dim), "bracket")?;
    let bracket = complete_by_sign_rule(delta, (dim, dim, dim), &entries)?;
    Ok(NamedAlgebra {
        name,
        algebra: HjlAlgebra::new(delta, bracket, alpha)?,
    })
}

pub fn parse_algebra(path: &Path) -> CliResult<NamedAlgebra> {
    parse_algebra_value(&read_json(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: CliError) -> CliError {
    match e {
        CliError::Field(msg) => CliError::Field(format!("{}: {msg}", path.display())),
        other => other,
    }
}

fn entries_value(entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>) -> Value {
    Value::Array(
        entries
            .into_iter()
            .map(|(i, j, k, c)| json!([i, j, k, format_rational(&c)]))
            .collect(),
    )
}

pub fn algebra_value(name: &str, l: &HjlAlgebra) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!("algebra"));
    m.insert("name".into(), json!(name));
    m.insert("dim".into(), json!(l.dim()));
    m.insert("delta".into(), json!(l.delta().value()));
    m.insert("bracket".into(), entries_value(l.canonical_entries()));
    m.insert("alpha".into(), matrix_value(l.alpha()));
    Value::Object(m)
}

pub fn parse_map(path: &Path, kind: &str) -> CliResult<Matrix> {
    let v = read_json(path)?;
    (|| {
        check_kind(&v, kind, false)?;
        parse_matrix_value(get(&v, "matrix", kind)?, "matrix")
    })()
    .map_err(|e| in_file(path, e))
}

pub fn map_value(kind: &str, m: &Matrix) -> Value {
    json!({"kind": kind, "matrix": matrix_value(m)})
}

/// A 2-cochain of the given kind, completed by the sign rule of `delta`.
pub fn parse_cochain(path: &Path, kind: &str, delta: Sign, dims: (usize, usize, usize)) -> CliResult<Tensor3> {
    let v = read_json(path)?;
    (|| {
        check_kind(&v, kind, false)?;
        if let Some(d) = v.get("dims") {
            let d = as_array(d, "dims")?;
            let got: Vec<usize> = d.iter().map(|x| as_index(x, "dims")).collect::<CliResult<_>>()?;
            if got != [dims.0, dims.1, dims.2] {
                return Err(CoreError::Shape(format!("cochain dims {got:?}, expected {dims:?}")).into());
            }
        }
        let entries = parse_entries(get(&v, "entries", kind)?, dims, "entries")?;
        complete_by_sign_rule(delta, dims, &entries)
    })()
    .map_err(|e| in_file(path, e))
}

pub fn cochain_value(kind: &str, t: &Tensor3) -> Value {
    let (a, b, c) = t.dims();
    json!({
        "kind": kind,
        "dims": [a, b, c],
        "entries": entries_value(t.iter().map(|((i, j, k), x)| (i, j, k, x.clone()))),
    })
}

pub fn parse_representation(path: &Path, l: &HjlAlgebra) -> CliResult<hjl_core::representations::Representation> {
    let v = read_json(path)?;
    (|| {
        check_kind(&v, "representation", false)?;
        let a = parse_matrix_value(get(&v, "a", "representation")?, "a")?;
        let rho = as_array(get(&v, "rho", "representation")?, "rho")?
            .iter()
            .enumerate()
            .map(|(i, m)| parse_matrix_value(m, &format!("rho[{i}]")))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(hjl_core::representations::Representation::new(l.clone(), a, rho)?)
    })()
    .map_err(|e| in_file(path, e))
}

pub fn representation_value(r: &hjl_core::representations::Representation) -> Value {
    json!({
        "kind": "representation",
        "a": matrix_value(r.a()),
        "rho": r.rho().iter().map(matrix_value).collect::<Vec<_>>(),
    })
}

pub fn parse_subspace(path: &Path, ambient: usize) -> CliResult<Subspace> {
    let v = read_json(path)?;
    (|| {
        check_kind(&v, "subspace", false)?;
        let vs = parse_matrix_value(get(&v, "basis", "subspace")?, "basis")?;
        if vs.rows() > 0 && vs.cols() != ambient {
            return Err(
                CoreError::Shape(format!("basis vectors have length {}, expected {ambient}", vs.cols())).into(),
            );
        }
        Ok(Subspace::span(ambient, &vs.row_vectors()))
    })()
    .map_err(|e| in_file(path, e))
}

pub fn subspace_value(s: &Subspace) -> Value {
    json!({
        "kind": "subspace",
        "ambient": s.ambient(),
        "basis": s.basis().iter().map(|v| vector_value(v)).collect::<Vec<_>>(),
    })
}
