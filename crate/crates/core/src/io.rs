//! JSON structure files.
//!
//! A file is `{"field": "Q" | {"Fp": p}, "kind": …, "dim": n, "payload": …}`.
//! Rationals are written as strings (`"3"`, `"-1/2"`), prime-field scalars
//! as integers in `0..p`. Serialization is canonical: keys sorted, scalars
//! reduced, so `serialize(parse(serialize(x)))` is byte-identical.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::affine::{AffineMap, BiAffineMap};
use crate::constructions::AffgebraData;
use crate::derivations::SolutionSpace;
use crate::fiber::FiberResult;
use crate::kernel::{Field, Matrix, Scalar, Vector};
use crate::morphisms::DataHom;
use crate::structures::{HomAssocAffgebra, HomLieAffgebra, HomLieAlgebra, HomPreLieAffgebra, Side};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("schema error at {path}: {reason}")]
    Schema { path: String, reason: String },
    #[error("field error: {0}")]
    Field(String),
}

type Res<T> = std::result::Result<T, FormatError>;

fn schema<T>(path: &str, reason: impl Into<String>) -> Res<T> {
    Err(FormatError::Schema {
        path: path.to_string(),
        reason: reason.into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    HomAssocAffgebra,
    HomLieAffgebra,
    HomPreLieAffgebra,
    HomLieAlgebra,
    AffgebraData,
    DataHom,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::HomAssocAffgebra,
        Kind::HomLieAffgebra,
        Kind::HomPreLieAffgebra,
        Kind::HomLieAlgebra,
        Kind::AffgebraData,
        Kind::DataHom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::HomAssocAffgebra => "hom_assoc_affgebra",
            Kind::HomLieAffgebra => "hom_lie_affgebra",
            Kind::HomPreLieAffgebra => "hom_prelie_affgebra",
            Kind::HomLieAlgebra => "hom_lie_algebra",
            Kind::AffgebraData => "affgebra_data",
            Kind::DataHom => "data_hom",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    HomAssocAffgebra(HomAssocAffgebra),
    HomLieAffgebra(HomLieAffgebra),
    HomPreLieAffgebra(HomPreLieAffgebra),
    HomLieAlgebra(HomLieAlgebra),
    AffgebraData(AffgebraData),
    DataHom(DataHom),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::HomAssocAffgebra(_) => Kind::HomAssocAffgebra,
            Structure::HomLieAffgebra(_) => Kind::HomLieAffgebra,
            Structure::HomPreLieAffgebra(_) => Kind::HomPreLieAffgebra,
            Structure::HomLieAlgebra(_) => Kind::HomLieAlgebra,
            Structure::AffgebraData(_) => Kind::AffgebraData,
            Structure::DataHom(_) => Kind::DataHom,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Structure::HomAssocAffgebra(s) => s.dim(),
            Structure::HomLieAffgebra(s) => s.dim(),
            Structure::HomPreLieAffgebra(s) => s.dim(),
            Structure::HomLieAlgebra(s) => s.dim(),
            Structure::AffgebraData(s) => s.dim(),
            Structure::DataHom(s) => s.source.dim(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFile {
    pub field: Field,
    pub structure: Structure,
}

impl StructureFile {
    pub fn new(field: Field, structure: Structure) -> Self {
        StructureFile { field, structure }
    }

    pub fn kind(&self) -> Kind {
        self.structure.kind()
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }
}

// ---------- scalars, vectors, matrices ----------

pub fn field_to_json(field: Field) -> Value {
    match field {
        Field::Rationals => json!("Q"),
        Field::Prime(p) => json!({ "Fp": p }),
    }
}

pub fn field_from_json(v: &Value) -> Res<Field> {
    match v {
        Value::String(s) if s == "Q" => Ok(Field::Rationals),
        Value::Object(m) if m.len() == 1 && m.contains_key("Fp") => {
            let p = m["Fp"]
                .as_u64()
                .ok_or_else(|| FormatError::Field("Fp must be a positive integer".into()))?;
            Field::prime(p).map_err(|e| FormatError::Field(e.to_string()))
        }
        _ => Err(FormatError::Field(format!("unknown field descriptor {v}"))),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s.as_residue() {
        Some(v) => json!(v),
        None => json!(s.to_string()),
    }
}

fn scalar_from_json(v: &Value, field: Field, path: &str) -> Res<Scalar> {
    match field {
        Field::Rationals => {
            let text = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                _ => return schema(path, "expected a rational string such as \"-1/2\""),
            };
            field
                .parse(&text)
                .or_else(|e| schema(path, e.to_string()))
        }
        Field::Prime(p) => match v.as_u64() {
            Some(x) if x < p => Ok(field.int(x as i64)),
            Some(x) => Err(FormatError::Field(format!("{path}: {x} is not in 0..{p}"))),
            None => schema(path, format!("expected an integer in 0..{p}")),
        },
    }
}

pub fn vector_to_json(v: &Vector) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

fn array<'a>(v: &'a Value, path: &str) -> Res<&'a Vec<Value>> {
    v.as_array().map_or_else(|| schema(path, "expected an array"), Ok)
}

fn vector_from_json(v: &Value, field: Field, n: usize, path: &str) -> Res<Vector> {
    let xs = array(v, path)?;
    if xs.len() != n {
        return schema(path, format!("expected length {n}, found {}", xs.len()));
    }
    let entries = xs
        .iter()
        .enumerate()
        .map(|(i, x)| scalar_from_json(x, field, &format!("{path}[{i}]")))
        .collect::<Res<Vec<_>>>()?;
    Ok(Vector::new(field, entries).expect("entries share the field"))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(&m.row(i))).collect())
}

fn matrix_from_json(v: &Value, field: Field, rows: usize, cols: usize, path: &str) -> Res<Matrix> {
    let xs = array(v, path)?;
    if xs.len() != rows {
        return schema(path, format!("expected {rows} rows, found {}", xs.len()));
    }
    let rows = xs
        .iter()
        .enumerate()
        .map(|(i, r)| Ok(vector_from_json(r, field, cols, &format!("{path}[{i}]"))?.into_entries()))
        .collect::<Res<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(field, 0, cols));
    }
    Ok(Matrix::from_rows(field, rows).expect("rows checked"))
}

fn tensor_to_json(t: &[Matrix]) -> Value {
    Value::Array(t.iter().map(matrix_to_json).collect())
}

fn tensor_from_json(v: &Value, field: Field, n: usize, path: &str) -> Res<Vec<Matrix>> {
    let xs = array(v, path)?;
    if xs.len() != n {
        return schema(path, format!("expected {n} slices, found {}", xs.len()));
    }
    xs.iter()
        .enumerate()
        .map(|(k, m)| matrix_from_json(m, field, n, n, &format!("{path}[{k}]")))
        .collect()
}

fn get<'a>(v: &'a Value, key: &str, path: &str) -> Res<&'a Value> {
    let obj = v.as_object().map_or_else(|| schema(path, "expected an object"), Ok)?;
    obj.get(key)
        .map_or_else(|| schema(&format!("{path}.{key}"), "missing"), Ok)
}

fn sub(path: &str, key: &str) -> String {
    format!("{path}.{key}")
}

// ---------- maps and structures ----------

pub fn affine_map_to_json(f: &AffineMap) -> Value {
    json!({ "M": matrix_to_json(f.matrix()), "t": vector_to_json(f.translation_part()) })
}

pub fn affine_map_from_json(v: &Value, field: Field, n: usize, path: &str) -> Res<AffineMap> {
    let m = matrix_from_json(get(v, "M", path)?, field, n, n, &sub(path, "M"))?;
    let t = vector_from_json(get(v, "t", path)?, field, n, &sub(path, "t"))?;
    AffineMap::new(m, t).or_else(|e| schema(path, e.to_string()))
}

pub fn biaffine_to_json(b: &BiAffineMap) -> Value {
    json!({
        "B": tensor_to_json(b.tensor()),
        "L1": matrix_to_json(b.left()),
        "L2": matrix_to_json(b.right()),
        "c": vector_to_json(b.constant()),
    })
}

pub fn biaffine_from_json(v: &Value, field: Field, n: usize, path: &str) -> Res<BiAffineMap> {
    let b = tensor_from_json(get(v, "B", path)?, field, n, &sub(path, "B"))?;
    let l1 = matrix_from_json(get(v, "L1", path)?, field, n, n, &sub(path, "L1"))?;
    let l2 = matrix_from_json(get(v, "L2", path)?, field, n, n, &sub(path, "L2"))?;
    let c = vector_from_json(get(v, "c", path)?, field, n, &sub(path, "c"))?;
    BiAffineMap::new(b, l1, l2, c).or_else(|e| schema(path, e.to_string()))
}

pub fn homlie_to_json(l: &HomLieAlgebra) -> Value {
    json!({ "sc": tensor_to_json(l.sc()), "alpha": matrix_to_json(l.alpha()) })
}

pub fn homlie_from_json(v: &Value, field: Field, n: usize, path: &str) -> Res<HomLieAlgebra> {
    let sc = tensor_from_json(get(v, "sc", path)?, field, n, &sub(path, "sc"))?;
    let alpha = matrix_from_json(get(v, "alpha", path)?, field, n, n, &sub(path, "alpha"))?;
    HomLieAlgebra::new(sc, alpha).or_else(|e| schema(path, e.to_string()))
}

pub fn data_to_json(d: &AffgebraData) -> Value {
    json!({
        "L": homlie_to_json(&d.algebra),
        "kappa": matrix_to_json(&d.kappa),
        "lambda": matrix_to_json(&d.lambda),
        "r": vector_to_json(&d.r),
    })
}

pub fn data_from_json(v: &Value, field: Field, n: usize, path: &str) -> Res<AffgebraData> {
    let l = homlie_from_json(get(v, "L", path)?, field, n, &sub(path, "L"))?;
    let kappa = matrix_from_json(get(v, "kappa", path)?, field, n, n, &sub(path, "kappa"))?;
    let lambda = matrix_from_json(get(v, "lambda", path)?, field, n, n, &sub(path, "lambda"))?;
    let r = vector_from_json(get(v, "r", path)?, field, n, &sub(path, "r"))?;
    AffgebraData::new(l, kappa, lambda, r).or_else(|e| schema(path, e.to_string()))
}

pub fn fiber_to_json(f: &FiberResult) -> Value {
    json!({
        "field": field_to_json(f.algebra.field()),
        "base": vector_to_json(&f.base.0),
        "algebra": homlie_to_json(&f.algebra),
    })
}

/// A solution space as its list of basis elements, each an `n × n` matrix
/// (or a list of such matrices for spaces with several unknown maps).
pub fn solution_space_to_json(s: &SolutionSpace) -> Value {
    let basis: Vec<Value> = s
        .basis_maps()
        .iter()
        .map(|maps| match maps.as_slice() {
            [one] => matrix_to_json(one),
            many => Value::Array(many.iter().map(matrix_to_json).collect()),
        })
        .collect();
    json!({ "space": s.kind.name(), "dim": s.dim(), "basis": basis })
}

fn payload_to_json(s: &Structure) -> Value {
    match s {
        Structure::HomAssocAffgebra(a) => json!({ "mul": biaffine_to_json(&a.mul), "alpha": affine_map_to_json(&a.alpha) }),
        Structure::HomLieAffgebra(a) => {
            json!({ "bracket": biaffine_to_json(&a.bracket), "alpha": affine_map_to_json(&a.alpha) })
        }
        Structure::HomPreLieAffgebra(a) => json!({
            "prod": biaffine_to_json(&a.prod),
            "alpha": affine_map_to_json(&a.alpha),
            "side": match a.side { Side::Left => "left", Side::Right => "right" },
        }),
        Structure::HomLieAlgebra(l) => homlie_to_json(l),
        Structure::AffgebraData(d) => data_to_json(d),
        Structure::DataHom(h) => json!({
            "psi": matrix_to_json(&h.psi),
            "qprime": vector_to_json(&h.qprime),
            "source": data_to_json(&h.source),
            "target": data_to_json(&h.target),
        }),
    }
}

fn payload_from_json(kind: Kind, v: &Value, field: Field, n: usize) -> Res<Structure> {
    let p = "payload";
    Ok(match kind {
        Kind::HomAssocAffgebra => {
            let mul = biaffine_from_json(get(v, "mul", p)?, field, n, "payload.mul")?;
            let alpha = affine_map_from_json(get(v, "alpha", p)?, field, n, "payload.alpha")?;
            Structure::HomAssocAffgebra(HomAssocAffgebra::new(mul, alpha).or_else(|e| schema(p, e.to_string()))?)
        }
        Kind::HomLieAffgebra => {
            let br = biaffine_from_json(get(v, "bracket", p)?, field, n, "payload.bracket")?;
            let alpha = affine_map_from_json(get(v, "alpha", p)?, field, n, "payload.alpha")?;
            Structure::HomLieAffgebra(HomLieAffgebra::new(br, alpha).or_else(|e| schema(p, e.to_string()))?)
        }
        Kind::HomPreLieAffgebra => {
            let prod = biaffine_from_json(get(v, "prod", p)?, field, n, "payload.prod")?;
            let alpha = affine_map_from_json(get(v, "alpha", p)?, field, n, "payload.alpha")?;
            let side = match get(v, "side", p)?.as_str() {
                Some("left") => Side::Left,
                Some("right") => Side::Right,
                _ => return schema("payload.side", "expected \"left\" or \"right\""),
            };
            Structure::HomPreLieAffgebra(
                HomPreLieAffgebra::new(prod, alpha, side).or_else(|e| schema(p, e.to_string()))?,
            )
        }
        Kind::HomLieAlgebra => Structure::HomLieAlgebra(homlie_from_json(v, field, n, p)?),
        Kind::AffgebraData => Structure::AffgebraData(data_from_json(v, field, n, p)?),
        Kind::DataHom => {
            let psi = matrix_from_json(get(v, "psi", p)?, field, n, n, "payload.psi")?;
            let qprime = vector_from_json(get(v, "qprime", p)?, field, n, "payload.qprime")?;
            let source = data_from_json(get(v, "source", p)?, field, n, "payload.source")?;
            let target = data_from_json(get(v, "target", p)?, field, n, "payload.target")?;
            Structure::DataHom(DataHom {
                psi,
                qprime,
                source,
                target,
            })
        }
    })
}

/// Parse JSON text, reporting the location of syntax errors.
pub fn parse_json(bytes: &[u8]) -> Res<Value> {
    serde_json::from_slice(bytes).map_err(|e| FormatError::Syntax {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })
}

pub fn from_value(v: &Value) -> Res<StructureFile> {
    if !v.is_object() {
        return schema("$", "expected an object");
    }
    let field = field_from_json(get(v, "field", "$")?)?;
    let kind_name = get(v, "kind", "$")?.as_str().unwrap_or_default();
    let kind = Kind::ALL
        .into_iter()
        .find(|k| k.name() == kind_name)
        .map_or_else(|| schema("$.kind", format!("unknown kind {kind_name:?}")), Ok)?;
    let dim = get(v, "dim", "$")?
        .as_u64()
        .map_or_else(|| schema("$.dim", "expected a non-negative integer"), Ok)? as usize;
    let structure = payload_from_json(kind, get(v, "payload", "$")?, field, dim)?;
    Ok(StructureFile { field, structure })
}

pub fn parse(bytes: &[u8]) -> Res<StructureFile> {
    from_value(&parse_json(bytes)?)
}

pub fn to_value(f: &StructureFile) -> Value {
    let mut m = Map::new();
    m.insert("field".into(), field_to_json(f.field));
    m.insert("kind".into(), json!(f.kind().name()));
    m.insert("dim".into(), json!(f.dim()));
    m.insert("payload".into(), payload_to_json(&f.structure));
    Value::Object(m)
}

/// Canonical pretty-printed form with a trailing newline.
pub fn serialize(f: &StructureFile) -> String {
    to_pretty(&to_value(f))
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// An affine map file: `{"M": …, "t": …}`, optionally with a `"field"`
/// that must agree with `field`.
pub fn parse_affine_map_file(bytes: &[u8], field: Field, n: usize) -> Res<AffineMap> {
    let v = parse_json(bytes)?;
    if let Some(f) = v.get("field") {
        let declared = field_from_json(f)?;
        if declared != field {
            return Err(FormatError::Field(format!("map over {declared}, structure over {field}")));
        }
    }
    affine_map_from_json(&v, field, n, "$")
}
