//! The JSON structure-file format.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "kind": "comodule",
//!   "field": {"type": "Q"},
//!   "dim": 2,
//!   "over": {"kind": "coalgebra", "dim": 2, "delta": [...], "eps": [...]},
//!   "rho": [["1", "0"], ["0", "0"], ["0", "0"], ["0", "1"]]
//! }
//! ```
//!
//! Matrices are arrays of rows. Rational entries are strings `"p/q"` or
//! `"p"` (bare integers are accepted too); GF(p) entries are integers in
//! `[0, p)` (numeric strings are accepted). `"over"` is either an inline
//! object or a path to another structure file, relative to the file that
//! references it. Inline bases inherit the field of their parent.
//!
//! Per kind: `coalgebra` (`delta`, `eps`), `algebra` (`mult`, `unit`),
//! `comodule` (`over`, `rho`), `right_comodule` (`over`, `mu`),
//! `contramodule` (`over`, `theta`), `left_module` and `right_module`
//! (`over` an algebra, `action`), `bicomodule` (`over`, `over_right`,
//! `lambda`, `mu`) and `tower` (`over`, `levels` of `{dim, theta}`,
//! `transitions`).
//!
//! [`emit`] is canonical: keys sorted, rationals in lowest terms, bases
//! inlined.

use std::fmt;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::cert::CertReport;
use crate::coalgebra::{Algebra, Coalgebra};
use crate::comodule::{Comodule, Contramodule};
use crate::cotensor::{Bicomodule, RightComodule};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::module::{LeftModule, RightModule};
use crate::tower::FiniteTower;

pub const FORMAT_VERSION: u64 = 1;

const MAX_REFERENCE_DEPTH: usize = 8;

/// Every way a structure file can be rejected. Each variant carries the
/// JSON pointer of the offending value.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },

    #[error("{pointer}: missing key `{key}`")]
    MissingKey { pointer: String, key: String },

    #[error("{pointer}: expected {expected}")]
    WrongType { pointer: String, expected: String },

    #[error("{pointer}: unsupported format_version {found} (expected {FORMAT_VERSION})")]
    Version { pointer: String, found: String },

    #[error("{pointer}: unknown kind `{kind}`")]
    UnknownKind { pointer: String, kind: String },

    #[error("{pointer}: bad field: {reason}")]
    BadField { pointer: String, reason: String },

    #[error("{pointer}: shape mismatch: expected {expected}, found {found}")]
    Shape { pointer: String, expected: String, found: String },

    #[error("{pointer}: bad field element `{text}`: {reason}")]
    BadElement { pointer: String, text: String, reason: String },

    #[error("{pointer}: {message}")]
    Reference { pointer: String, message: String },

    #[error("{pointer}: {message}")]
    Invalid { pointer: String, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl FormatError {
    /// A short stable name for the diagnostic class.
    pub fn class(&self) -> &'static str {
        match self {
            FormatError::Json { .. } => "malformed-json",
            FormatError::MissingKey { .. } => "missing-key",
            FormatError::WrongType { .. } => "wrong-type",
            FormatError::Version { .. } => "unsupported-version",
            FormatError::UnknownKind { .. } => "unknown-kind",
            FormatError::BadField { .. } => "bad-field",
            FormatError::Shape { .. } => "shape-mismatch",
            FormatError::BadElement { .. } => "bad-element",
            FormatError::Reference { .. } => "bad-reference",
            FormatError::Invalid { .. } => "invalid-structure",
            FormatError::Io { .. } => "io",
        }
    }
}

type Parsed<T> = std::result::Result<T, FormatError>;

/// Any structure the format can carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Coalgebra(Coalgebra),
    Algebra(Algebra),
    Comodule(Comodule),
    RightComodule(RightComodule),
    Contramodule(Contramodule),
    LeftModule(LeftModule),
    RightModule(RightModule),
    Bicomodule(Bicomodule),
    Tower(FiniteTower),
}

pub const KINDS: [&str; 9] = [
    "coalgebra",
    "algebra",
    "comodule",
    "right_comodule",
    "contramodule",
    "left_module",
    "right_module",
    "bicomodule",
    "tower",
];

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Coalgebra(_) => "coalgebra",
            Structure::Algebra(_) => "algebra",
            Structure::Comodule(_) => "comodule",
            Structure::RightComodule(_) => "right_comodule",
            Structure::Contramodule(_) => "contramodule",
            Structure::LeftModule(_) => "left_module",
            Structure::RightModule(_) => "right_module",
            Structure::Bicomodule(_) => "bicomodule",
            Structure::Tower(_) => "tower",
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Structure::Coalgebra(c) => c.field(),
            Structure::Algebra(a) => a.field(),
            Structure::Comodule(x) => x.field(),
            Structure::RightComodule(x) => x.field(),
            Structure::Contramodule(x) => x.field(),
            Structure::LeftModule(x) => x.field(),
            Structure::RightModule(x) => x.field(),
            Structure::Bicomodule(x) => x.field(),
            Structure::Tower(t) => t.top().field(),
        }
    }

    /// Runs the certifier for this kind. Module and comodule kinds also
    /// certify their base with a `base` scope.
    pub fn check(&self) -> CertReport {
        let mut report = CertReport::default();
        match self {
            Structure::Coalgebra(c) => report.absorb("", c.check()),
            Structure::Algebra(a) => report.absorb("", a.check()),
            Structure::Comodule(x) => {
                report.absorb("base", x.over().check());
                report.absorb("", x.check());
            }
            Structure::RightComodule(x) => {
                report.absorb("base", x.over().check());
                report.absorb("", x.check());
            }
            Structure::Contramodule(x) => {
                report.absorb("base", x.over().check());
                report.absorb("", x.check());
            }
            Structure::LeftModule(x) => {
                report.absorb("base", x.over().check());
                report.absorb("", x.check());
            }
            Structure::RightModule(x) => {
                report.absorb("base", x.over().check());
                report.absorb("", x.check());
            }
            Structure::Bicomodule(x) => {
                report.absorb("left base", x.over_left().check());
                report.absorb("right base", x.over_right().check());
                report.absorb("", x.check());
            }
            Structure::Tower(t) => {
                report.absorb("base", t.top().over().check());
                report.absorb("", t.check());
            }
        }
        report
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit(self))
    }
}

// ---------------------------------------------------------------- parsing

struct Ctx<'a> {
    base_dir: Option<&'a Path>,
    depth: usize,
}

fn at(pointer: &str, key: &str) -> String {
    format!("{pointer}/{key}")
}

fn display_pointer(p: &str) -> String {
    if p.is_empty() {
        "/".to_string()
    } else {
        p.to_string()
    }
}

fn get<'v>(obj: &'v Map<String, Value>, pointer: &str, key: &str) -> Parsed<&'v Value> {
    obj.get(key).ok_or_else(|| FormatError::MissingKey {
        pointer: display_pointer(pointer),
        key: key.to_string(),
    })
}

fn as_object<'v>(v: &'v Value, pointer: &str) -> Parsed<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| FormatError::WrongType {
        pointer: display_pointer(pointer),
        expected: "an object".into(),
    })
}

fn as_usize(v: &Value, pointer: &str) -> Parsed<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| FormatError::WrongType {
            pointer: display_pointer(pointer),
            expected: "a nonnegative integer".into(),
        })
}

fn parse_field(v: &Value, pointer: &str) -> Parsed<FieldSpec> {
    let obj = as_object(v, pointer)?;
    let ty = get(obj, pointer, "type")?;
    match ty.as_str() {
        Some("Q") => Ok(FieldSpec::Rationals),
        Some("GF") => {
            let p_ptr = at(pointer, "p");
            let p = get(obj, pointer, "p")?.as_u64().ok_or_else(|| FormatError::WrongType {
                pointer: p_ptr.clone(),
                expected: "a prime integer".into(),
            })?;
            FieldSpec::prime(p).map_err(|_| FormatError::BadField {
                pointer: p_ptr,
                reason: format!("{p} is not prime"),
            })
        }
        Some(other) => Err(FormatError::BadField {
            pointer: at(pointer, "type"),
            reason: format!("unknown field type `{other}` (expected \"Q\" or \"GF\")"),
        }),
        None => Err(FormatError::WrongType {
            pointer: at(pointer, "type"),
            expected: "a string".into(),
        }),
    }
}

fn parse_entry(v: &Value, field: FieldSpec, pointer: &str) -> Parsed<Scalar> {
    let bad = |text: String, reason: String| FormatError::BadElement {
        pointer: pointer.to_string(),
        text,
        reason,
    };
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::Number(n) => return Err(bad(n.to_string(), "floating-point entries are not exact".into())),
        _ => {
            return Err(FormatError::WrongType {
                pointer: pointer.to_string(),
                expected: "a string or integer entry".into(),
            })
        }
    };
    if let FieldSpec::Prime(p) = field {
        if let Some(n) = v.as_i64() {
            if n < 0 || n as u64 >= p {
                return Err(bad(text, format!("residues lie in [0, {p})")));
            }
        }
    }
    Scalar::parse(field, &text).map_err(|e| match e {
        crate::Error::ResidueOutOfRange { modulus, .. } => bad(text.clone(), format!("residues lie in [0, {modulus})")),
        _ => bad(text.clone(), format!("not an element of {field}")),
    })
}

fn parse_matrix(v: &Value, field: FieldSpec, rows: usize, cols: usize, pointer: &str) -> Parsed<Matrix> {
    let arr = v.as_array().ok_or_else(|| FormatError::WrongType {
        pointer: pointer.to_string(),
        expected: "a matrix (array of rows)".into(),
    })?;
    if arr.len() != rows {
        return Err(FormatError::Shape {
            pointer: pointer.to_string(),
            expected: format!("{rows} rows"),
            found: format!("{} rows", arr.len()),
        });
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (r, row) in arr.iter().enumerate() {
        let rp = format!("{pointer}/{r}");
        let row = row.as_array().ok_or_else(|| FormatError::WrongType {
            pointer: rp.clone(),
            expected: "a row (array of entries)".into(),
        })?;
        if row.len() != cols {
            return Err(FormatError::Shape {
                pointer: rp,
                expected: format!("{cols} columns"),
                found: format!("{} columns", row.len()),
            });
        }
        for (c, e) in row.iter().enumerate() {
            data.push(parse_entry(e, field, &format!("{rp}/{c}"))?);
        }
    }
    Ok(Matrix::new(field, rows, cols, data).expect("entries parsed in this field"))
}

fn invalid(pointer: &str, e: crate::Error) -> FormatError {
    FormatError::Invalid {
        pointer: display_pointer(pointer),
        message: e.to_string(),
    }
}

fn matrix_key(obj: &Map<String, Value>, field: FieldSpec, pointer: &str, key: &str, shape: (usize, usize)) -> Parsed<Matrix> {
    parse_matrix(get(obj, pointer, key)?, field, shape.0, shape.1, &at(pointer, key))
}

fn dim_key(obj: &Map<String, Value>, pointer: &str) -> Parsed<usize> {
    as_usize(get(obj, pointer, "dim")?, &at(pointer, "dim"))
}

/// Checks an optional `"field"` against the inherited one.
fn inherited_field(obj: &Map<String, Value>, pointer: &str, parent: FieldSpec) -> Parsed<FieldSpec> {
    match obj.get("field") {
        None => Ok(parent),
        Some(v) => {
            let f = parse_field(v, &at(pointer, "field"))?;
            if f != parent {
                return Err(FormatError::BadField {
                    pointer: at(pointer, "field"),
                    reason: format!("base is over {f} but the structure is over {parent}"),
                });
            }
            Ok(f)
        }
    }
}

fn parse_coalgebra_body(obj: &Map<String, Value>, field: FieldSpec, pointer: &str) -> Parsed<Coalgebra> {
    let n = dim_key(obj, pointer)?;
    let delta = matrix_key(obj, field, pointer, "delta", (n * n, n))?;
    let eps = matrix_key(obj, field, pointer, "eps", (1, n))?;
    Coalgebra::new(n, delta, eps).map_err(|e| invalid(pointer, e))
}

fn parse_algebra_body(obj: &Map<String, Value>, field: FieldSpec, pointer: &str) -> Parsed<Algebra> {
    let n = dim_key(obj, pointer)?;
    let mult = matrix_key(obj, field, pointer, "mult", (n, n * n))?;
    let unit = matrix_key(obj, field, pointer, "unit", (n, 1))?;
    Algebra::new(n, mult, unit).map_err(|e| invalid(pointer, e))
}

/// Resolves a base at `obj[key]`: inline object or file reference.
fn parse_base(obj: &Map<String, Value>, field: FieldSpec, pointer: &str, key: &str, want: &str, ctx: &Ctx) -> Parsed<Structure> {
    let p = at(pointer, key);
    let v = get(obj, pointer, key)?;
    let base = match v {
        Value::String(path) => {
            if ctx.depth >= MAX_REFERENCE_DEPTH {
                return Err(FormatError::Reference {
                    pointer: p,
                    message: "file references nested too deeply".into(),
                });
            }
            let full: PathBuf = match ctx.base_dir {
                Some(dir) => dir.join(path),
                None => PathBuf::from(path),
            };
            let text = std::fs::read_to_string(&full).map_err(|e| FormatError::Reference {
                pointer: p.clone(),
                message: format!("cannot read {}: {e}", full.display()),
            })?;
            let dir = full.parent().map(Path::to_path_buf);
            let inner = Ctx {
                base_dir: dir.as_deref(),
                depth: ctx.depth + 1,
            };
            let s = parse_with(&text, &inner).map_err(|e| FormatError::Reference {
                pointer: p.clone(),
                message: format!("in {}: {e}", full.display()),
            })?;
            if s.field() != field {
                return Err(FormatError::BadField {
                    pointer: p,
                    reason: format!("base is over {} but the structure is over {field}", s.field()),
                });
            }
            s
        }
        Value::Object(inner) => {
            let f = inherited_field(inner, &p, field)?;
            let kind = match inner.get("kind") {
                None => want.to_string(),
                Some(k) => k
                    .as_str()
                    .ok_or_else(|| FormatError::WrongType {
                        pointer: at(&p, "kind"),
                        expected: "a string".into(),
                    })?
                    .to_string(),
            };
            match kind.as_str() {
                "coalgebra" => Structure::Coalgebra(parse_coalgebra_body(inner, f, &p)?),
                "algebra" => Structure::Algebra(parse_algebra_body(inner, f, &p)?),
                other if KINDS.contains(&other) => {
                    return Err(FormatError::WrongType {
                        pointer: p,
                        expected: format!("{}, found {}", article(want), article(other)),
                    })
                }
                other => {
                    return Err(FormatError::UnknownKind {
                        pointer: at(&p, "kind"),
                        kind: other.to_string(),
                    })
                }
            }
        }
        _ => {
            return Err(FormatError::WrongType {
                pointer: p,
                expected: format!("an inline {want} object or a file path"),
            })
        }
    };
    if base.kind() != want {
        return Err(FormatError::WrongType {
            pointer: p,
            expected: format!("{}, found {}", article(want), article(base.kind())),
        });
    }
    Ok(base)
}

pub(crate) fn article(kind: &str) -> String {
    if kind.starts_with('a') {
        format!("an {kind}")
    } else {
        format!("a {kind}")
    }
}

fn coalgebra_base(obj: &Map<String, Value>, field: FieldSpec, pointer: &str, key: &str, ctx: &Ctx) -> Parsed<Coalgebra> {
    match parse_base(obj, field, pointer, key, "coalgebra", ctx)? {
        Structure::Coalgebra(c) => Ok(c),
        _ => unreachable!("parse_base checks the kind"),
    }
}

fn algebra_base(obj: &Map<String, Value>, field: FieldSpec, pointer: &str, ctx: &Ctx) -> Parsed<Algebra> {
    match parse_base(obj, field, pointer, "over", "algebra", ctx)? {
        Structure::Algebra(a) => Ok(a),
        _ => unreachable!("parse_base checks the kind"),
    }
}

fn parse_with(text: &str, ctx: &Ctx) -> Parsed<Structure> {
    let doc: Value = serde_json::from_str(text).map_err(|e| FormatError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = as_object(&doc, "")?;
    let version = get(obj, "", "format_version")?;
    if version.as_u64() != Some(FORMAT_VERSION) {
        return Err(FormatError::Version {
            pointer: "/format_version".into(),
            found: version.to_string(),
        });
    }
    let kind_v = get(obj, "", "kind")?;
    let kind = kind_v.as_str().ok_or_else(|| FormatError::WrongType {
        pointer: "/kind".into(),
        expected: "a string".into(),
    })?;
    if !KINDS.contains(&kind) {
        return Err(FormatError::UnknownKind {
            pointer: "/kind".into(),
            kind: kind.to_string(),
        });
    }
    let field = parse_field(get(obj, "", "field")?, "/field")?;
    let p = "";
    Ok(match kind {
        "coalgebra" => Structure::Coalgebra(parse_coalgebra_body(obj, field, p)?),
        "algebra" => Structure::Algebra(parse_algebra_body(obj, field, p)?),
        "comodule" => {
            let c = coalgebra_base(obj, field, p, "over", ctx)?;
            let x = dim_key(obj, p)?;
            let rho = matrix_key(obj, field, p, "rho", (c.dim() * x, x))?;
            Structure::Comodule(Comodule::new(c, x, rho).map_err(|e| invalid(p, e))?)
        }
        "right_comodule" => {
            let c = coalgebra_base(obj, field, p, "over", ctx)?;
            let x = dim_key(obj, p)?;
            let mu = matrix_key(obj, field, p, "mu", (x * c.dim(), x))?;
            Structure::RightComodule(RightComodule::new(c, x, mu).map_err(|e| invalid(p, e))?)
        }
        "contramodule" => {
            let c = coalgebra_base(obj, field, p, "over", ctx)?;
            let z = dim_key(obj, p)?;
            let theta = matrix_key(obj, field, p, "theta", (z, c.dim() * z))?;
            Structure::Contramodule(Contramodule::new(c, z, theta).map_err(|e| invalid(p, e))?)
        }
        "left_module" => {
            let a = algebra_base(obj, field, p, ctx)?;
            let x = dim_key(obj, p)?;
            let action = matrix_key(obj, field, p, "action", (x, a.dim() * x))?;
            Structure::LeftModule(LeftModule::new(a, x, action).map_err(|e| invalid(p, e))?)
        }
        "right_module" => {
            let a = algebra_base(obj, field, p, ctx)?;
            let x = dim_key(obj, p)?;
            let action = matrix_key(obj, field, p, "action", (x, x * a.dim()))?;
            Structure::RightModule(RightModule::new(a, x, action).map_err(|e| invalid(p, e))?)
        }
        "bicomodule" => {
            let c = coalgebra_base(obj, field, p, "over", ctx)?;
            let d = coalgebra_base(obj, field, p, "over_right", ctx)?;
            let m = dim_key(obj, p)?;
            let lambda = matrix_key(obj, field, p, "lambda", (c.dim() * m, m))?;
            let mu = matrix_key(obj, field, p, "mu", (m * d.dim(), m))?;
            Structure::Bicomodule(Bicomodule::new(c, d, m, lambda, mu).map_err(|e| invalid(p, e))?)
        }
        "tower" => {
            let c = coalgebra_base(obj, field, p, "over", ctx)?;
            let levels_v = get(obj, p, "levels")?.as_array().ok_or_else(|| FormatError::WrongType {
                pointer: "/levels".into(),
                expected: "an array of levels".into(),
            })?;
            if levels_v.is_empty() {
                return Err(FormatError::Shape {
                    pointer: "/levels".into(),
                    expected: "at least one level".into(),
                    found: "none".into(),
                });
            }
            let mut levels = Vec::new();
            for (i, lv) in levels_v.iter().enumerate() {
                let lp = format!("/levels/{i}");
                let lo = as_object(lv, &lp)?;
                let z = dim_key(lo, &lp)?;
                let theta = matrix_key(lo, field, &lp, "theta", (z, c.dim() * z))?;
                levels.push(Contramodule::new(c.clone(), z, theta).map_err(|e| invalid(&lp, e))?);
            }
            let tv = get(obj, p, "transitions")?.as_array().ok_or_else(|| FormatError::WrongType {
                pointer: "/transitions".into(),
                expected: "an array of matrices".into(),
            })?;
            if tv.len() + 1 != levels.len() {
                return Err(FormatError::Shape {
                    pointer: "/transitions".into(),
                    expected: format!("{} transitions", levels.len() - 1),
                    found: format!("{} transitions", tv.len()),
                });
            }
            let mut transitions = Vec::new();
            for (i, m) in tv.iter().enumerate() {
                let shape = (levels[i].dim(), levels[i + 1].dim());
                transitions.push(parse_matrix(m, field, shape.0, shape.1, &format!("/transitions/{i}"))?);
            }
            Structure::Tower(FiniteTower::new(levels, transitions).map_err(|e| invalid(p, e))?)
        }
        _ => unreachable!("kind checked above"),
    })
}

/// Parses a document; file references resolve relative to `base_dir`
/// (or the working directory).
pub fn parse_str(text: &str, base_dir: Option<&Path>) -> Parsed<Structure> {
    parse_with(text, &Ctx { base_dir, depth: 0 })
}

pub fn parse_file(path: &Path) -> Parsed<Structure> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_str(&text, path.parent())
}

// --------------------------------------------------------------- emitting

fn entry_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(_) => Value::String(s.to_string()),
        Scalar::Residue { value, .. } => json!(value),
    }
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(entry_json).collect()))
            .collect(),
    )
}

pub fn field_json(f: FieldSpec) -> Value {
    match f {
        FieldSpec::Rationals => json!({"type": "Q"}),
        FieldSpec::Prime(p) => json!({"type": "GF", "p": p}),
    }
}

fn coalgebra_json(c: &Coalgebra) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("kind".into(), json!("coalgebra"));
    m.insert("dim".into(), json!(c.dim()));
    m.insert("delta".into(), matrix_json(c.delta()));
    m.insert("eps".into(), matrix_json(c.eps()));
    m
}

fn algebra_json(a: &Algebra) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("kind".into(), json!("algebra"));
    m.insert("dim".into(), json!(a.dim()));
    m.insert("mult".into(), matrix_json(a.mult()));
    m.insert("unit".into(), matrix_json(a.unit()));
    m
}

/// The JSON value of a structure (canonical key order).
pub fn to_json(s: &Structure) -> Value {
    let mut m = match s {
        Structure::Coalgebra(c) => coalgebra_json(c),
        Structure::Algebra(a) => algebra_json(a),
        Structure::Comodule(x) => {
            let mut m = Map::new();
            m.insert("over".into(), Value::Object(coalgebra_json(x.over())));
            m.insert("dim".into(), json!(x.dim()));
            m.insert("rho".into(), matrix_json(x.rho()));
            m
        }
        Structure::RightComodule(x) => {
            let mut m = Map::new();
            m.insert("over".into(), Value::Object(coalgebra_json(x.over())));
            m.insert("dim".into(), json!(x.dim()));
            m.insert("mu".into(), matrix_json(x.mu()));
            m
        }
        Structure::Contramodule(x) => {
            let mut m = Map::new();
            m.insert("over".into(), Value::Object(coalgebra_json(x.over())));
            m.insert("dim".into(), json!(x.dim()));
            m.insert("theta".into(), matrix_json(x.theta()));
            m
        }
        Structure::LeftModule(x) => {
            let mut m = Map::new();
            m.insert("over".into(), Value::Object(algebra_json(x.over())));
            m.insert("dim".into(), json!(x.dim()));
            m.insert("action".into(), matrix_json(x.action()));
            m
        }
        Structure::RightModule(x) => {
            let mut m = Map::new();
            m.insert("over".into(), Value::Object(algebra_json(x.over())));
            m.insert("dim".into(), json!(x.dim()));
            m.insert("action".into(), matrix_json(x.action()));
            m
        }
        Structure::Bicomodule(x) => {
            let mut m = Map::new();
            m.insert("over".into(), Value::Object(coalgebra_json(x.over_left())));
            m.insert("over_right".into(), Value::Object(coalgebra_json(x.over_right())));
            m.insert("dim".into(), json!(x.dim()));
            m.insert("lambda".into(), matrix_json(x.lambda()));
            m.insert("mu".into(), matrix_json(x.mu()));
            m
        }
        Structure::Tower(t) => {
            let mut m = Map::new();
            m.insert("over".into(), Value::Object(coalgebra_json(t.top().over())));
            let levels = t
                .levels()
                .iter()
                .map(|z| json!({"dim": z.dim(), "theta": matrix_json(z.theta())}))
                .collect();
            m.insert("levels".into(), Value::Array(levels));
            m.insert("transitions".into(), Value::Array(t.transitions().iter().map(matrix_json).collect()));
            m
        }
    };
    m.insert("format_version".into(), json!(FORMAT_VERSION));
    m.insert("kind".into(), json!(s.kind()));
    m.insert("field".into(), field_json(s.field()));
    Value::Object(m)
}

/// Canonical text: sorted keys, two-space indent, one matrix row per
/// line, trailing newline.
pub fn emit(s: &Structure) -> String {
    let mut text = String::new();
    write_value(&mut text, &to_json(s), 0);
    text.push('\n');
    text
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(a) if !a.is_empty() && !is_flat(v) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{dual_algebra, grouplike, matrix_coalgebra};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn roundtrip(s: Structure) {
        let text = emit(&s);
        assert_eq!(parse_str(&text, None).unwrap(), s);
        assert_eq!(emit(&parse_str(&text, None).unwrap()), text);
    }

    #[test]
    fn roundtrips() {
        roundtrip(Structure::Coalgebra(grouplike(Q, 2)));
        let c = matrix_coalgebra(FieldSpec::Prime(5), 2);
        roundtrip(Structure::Comodule(Comodule::regular(&c)));
        roundtrip(Structure::Algebra(dual_algebra(&c).unwrap()));
        roundtrip(Structure::Bicomodule(Bicomodule::regular(&grouplike(Q, 2))));
        let z = crate::duality::comodule_to_contramodule(&Comodule::regular(&c));
        roundtrip(Structure::Tower(FiniteTower::constant(&z, 2)));
    }

    #[test]
    fn lowest_terms_on_emit() {
        let doc = r#"{"format_version":1,"kind":"coalgebra","field":{"type":"Q"},"dim":1,
            "delta":[["3/3"]],"eps":[["3/6"]]}"#;
        let s = parse_str(doc, None).unwrap();
        let text = emit(&s);
        assert!(text.contains("\"1/2\""));
        assert!(!text.contains("3/6"));
    }

    #[test]
    fn diagnostics_are_distinct() {
        let cases = [
            ("{", "malformed-json"),
            (r#"{"format_version":1,"kind":"cat","field":{"type":"Q"}}"#, "unknown-kind"),
            (r#"{"format_version":2,"kind":"coalgebra","field":{"type":"Q"}}"#, "unsupported-version"),
            (r#"{"format_version":1,"kind":"coalgebra","field":{"type":"GF","p":4}}"#, "bad-field"),
            (r#"{"format_version":1,"kind":"coalgebra","field":{"type":"Q"},"dim":1,"delta":[["1","0"]],"eps":[["1"]]}"#, "shape-mismatch"),
            (r#"{"format_version":1,"kind":"coalgebra","field":{"type":"GF","p":3},"dim":1,"delta":[[5]],"eps":[[1]]}"#, "bad-element"),
            (r#"{"format_version":1,"kind":"coalgebra","field":{"type":"Q"},"dim":1,"eps":[["1"]]}"#, "missing-key"),
        ];
        for (doc, class) in cases {
            assert_eq!(parse_str(doc, None).unwrap_err().class(), class, "{doc}");
        }
    }

    #[test]
    fn gf_out_of_range_has_location() {
        let doc = r#"{"format_version":1,"kind":"coalgebra","field":{"type":"GF","p":3},"dim":1,"delta":[["5"]],"eps":[[1]]}"#;
        let e = parse_str(doc, None).unwrap_err();
        assert!(e.to_string().starts_with("/delta/0/0"), "{e}");
    }
}
