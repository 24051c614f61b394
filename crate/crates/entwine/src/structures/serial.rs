//! Text (JSON) serialization of structure bundles, modules, morphisms, and
//! certificates.
//!
//! All matrices serialize as nested row arrays of exact scalar strings
//! ("p/q" over Q, decimal residues over F_p); loading validates shapes and
//! re-runs the axiom checkers, so only valid structures round-trip.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;
use crate::structures::{
    AlgebraData, CoalgebraData, EntwiningData, StructureBundle,
};
use crate::tensor::{ShapedMap, TensorShape};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

pub fn matrix_to_json(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows)
        .map(|i| {
            Value::Array((0..m.cols).map(|j| Value::String(m[(i, j)].to_string())).collect())
        })
        .collect();
    Value::Array(rows)
}

pub fn matrix_from_json(v: &Value, rows: usize, cols: usize, field: FieldSpec, path: &str) -> Result<Matrix> {
    let arr = v.as_array().ok_or_else(|| Error::parse(path, "expected an array of rows"))?;
    if arr.len() != rows {
        return Err(Error::parse(path, format!("expected {rows} rows, got {}", arr.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in arr.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::parse(format!("{path}[{i}]"), "expected an array of scalars"))?;
        if row.len() != cols {
            return Err(Error::parse(
                format!("{path}[{i}]"),
                format!("expected {cols} entries, got {}", row.len()),
            ));
        }
        for (j, cell) in row.iter().enumerate() {
            let s = cell
                .as_str()
                .ok_or_else(|| Error::parse(format!("{path}[{i}][{j}]"), "expected a scalar string"))?;
            entries.push(
                field
                    .parse_scalar(s)
                    .map_err(|e| Error::parse(format!("{path}[{i}][{j}]"), e.to_string()))?,
            );
        }
    }
    Matrix::from_entries(rows, cols, field, entries)
}

pub fn field_to_json(f: &FieldSpec) -> Value {
    match f {
        FieldSpec::Rationals => json!({"kind": "Q"}),
        FieldSpec::PrimeField(p) => json!({"kind": "Fp", "p": p}),
    }
}

pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse("field.kind", "expected \"Q\" or \"Fp\""))?;
    let field = match kind {
        "Q" => FieldSpec::Rationals,
        "Fp" => {
            let p = v
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::parse("field.p", "expected a prime integer"))?;
            FieldSpec::PrimeField(p)
        }
        other => return Err(Error::parse("field.kind", format!("unknown field kind {other:?}"))),
    };
    field.validate().map_err(|e| Error::parse("field", e.to_string()))?;
    Ok(field)
}

fn pair_key(c: &CoalgebraData, x: usize, y: usize) -> String {
    format!("{}->{}", c.objects[x], c.objects[y])
}

fn triple_key(c: &CoalgebraData, x: usize, y: usize, z: usize) -> String {
    format!("{}->{}->{}", c.objects[x], c.objects[y], c.objects[z])
}

fn parse_pair_key(c: &CoalgebraData, key: &str, path: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = key.split("->").collect();
    if parts.len() != 2 {
        return Err(Error::parse(path, format!("key {key:?} is not of the form \"X->Y\"")));
    }
    Ok((
        c.object_index(parts[0]).map_err(|e| Error::parse(path, e.to_string()))?,
        c.object_index(parts[1]).map_err(|e| Error::parse(path, e.to_string()))?,
    ))
}

fn parse_triple_key(c: &CoalgebraData, key: &str, path: &str) -> Result<(usize, usize, usize)> {
    let parts: Vec<&str> = key.split("->").collect();
    if parts.len() != 3 {
        return Err(Error::parse(path, format!("key {key:?} is not of the form \"X->Y->Z\"")));
    }
    Ok((
        c.object_index(parts[0]).map_err(|e| Error::parse(path, e.to_string()))?,
        c.object_index(parts[1]).map_err(|e| Error::parse(path, e.to_string()))?,
        c.object_index(parts[2]).map_err(|e| Error::parse(path, e.to_string()))?,
    ))
}

/// Serializes a bundle to its canonical text form (stable key order).
pub fn save_bundle(b: &StructureBundle) -> String {
    let c = &b.coalgebra;
    let mut root = Map::new();
    root.insert("field".into(), field_to_json(&b.field));
    root.insert(
        "objects".into(),
        Value::Array(c.objects.iter().map(|o| Value::String(o.clone())).collect()),
    );
    let mut hom_dims = Map::new();
    for x in 0..c.n_objects() {
        for y in 0..c.n_objects() {
            hom_dims.insert(pair_key(c, x, y), json!(c.dim(x, y)));
        }
    }
    root.insert("hom_dims".into(), Value::Object(hom_dims));
    let mut delta = Map::new();
    for (&(x, y, z), d) in &c.delta {
        delta.insert(triple_key(c, x, y, z), matrix_to_json(&d.matrix));
    }
    root.insert("delta".into(), Value::Object(delta));
    let mut counit = Map::new();
    for x in 0..c.n_objects() {
        counit.insert(c.objects[x].clone(), matrix_to_json(&c.counit[x].matrix));
    }
    root.insert("counit".into(), Value::Object(counit));
    root.insert(
        "algebra".into(),
        json!({
            "dim": b.algebra.dim,
            "mul": matrix_to_json(&b.algebra.mul.matrix),
            "unit": matrix_to_json(&b.algebra.unit.matrix),
        }),
    );
    let mut psi = Map::new();
    for (&(x, y), p) in &b.entwining.psi {
        psi.insert(pair_key(c, x, y), matrix_to_json(&p.matrix));
    }
    root.insert("entwining".into(), Value::Object(psi));
    serde_json::to_string_pretty(&Value::Object(root)).expect("serialization cannot fail")
}

/// Parses and fully validates a bundle: shape checks first, then all axiom
/// checkers. Invalid bundles are rejected with the violated axiom's name.
pub fn load_bundle(text: &str) -> Result<StructureBundle> {
    let bundle = parse_bundle(text)?;
    let report = bundle.check_all();
    if !report.is_empty() {
        let summary = report.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
        return Err(Error::Validation(summary));
    }
    Ok(bundle)
}

/// Parses a bundle and checks shapes only, without running the axiom
/// checkers; callers that want to *report* violations (rather than reject)
/// use this and run [`StructureBundle::check_all`] themselves.
pub fn parse_bundle(text: &str) -> Result<StructureBundle> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse("<root>", format!("invalid JSON: {e}")))?;
    let field = field_from_json(root.get("field").ok_or_else(|| Error::parse("field", "missing"))?)?;
    let objects: Vec<String> = root
        .get("objects")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("objects", "expected an array of names"))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::parse("objects", "expected strings"))
        })
        .collect::<Result<_>>()?;
    let n = objects.len();
    if n == 0 {
        return Err(Error::parse("objects", "at least one object is required"));
    }

    // A provisional coalgebra for key parsing; dims filled next.
    let mut c = CoalgebraData {
        field,
        objects,
        hom_dim: vec![vec![0; n]; n],
        delta: BTreeMap::new(),
        counit: Vec::new(),
    };

    let hom_dims = root
        .get("hom_dims")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse("hom_dims", "expected an object"))?;
    for (key, v) in hom_dims {
        let (x, y) = parse_pair_key(&c, key, "hom_dims")?;
        let d = v
            .as_u64()
            .ok_or_else(|| Error::parse(format!("hom_dims[{key}]"), "expected a nonnegative integer"))?;
        c.hom_dim[x][y] = d as usize;
    }

    let delta_obj = root
        .get("delta")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse("delta", "expected an object"))?;
    for (key, v) in delta_obj {
        let (x, y, z) = parse_triple_key(&c, key, "delta")?;
        let rows = c.dim(y, z) * c.dim(x, y);
        let cols = c.dim(x, z);
        let m = matrix_from_json(v, rows, cols, field, &format!("delta[{key}]"))?;
        let sm = ShapedMap::new(
            m,
            TensorShape::new(vec![cols]),
            TensorShape::new(vec![c.dim(y, z), c.dim(x, y)]),
        )?;
        c.delta.insert((x, y, z), sm);
    }

    let counit_obj = root
        .get("counit")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse("counit", "expected an object"))?;
    for x in 0..n {
        let name = c.objects[x].clone();
        let v = counit_obj
            .get(&name)
            .ok_or_else(|| Error::parse("counit", format!("missing counit for object {name:?}")))?;
        let m = matrix_from_json(v, 1, c.dim(x, x), field, &format!("counit[{name}]"))?;
        c.counit.push(ShapedMap::new(
            m,
            TensorShape::new(vec![c.dim(x, x)]),
            TensorShape::scalar(),
        )?);
    }

    let alg = root
        .get("algebra")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse("algebra", "expected an object"))?;
    let dim = alg
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse("algebra.dim", "expected a positive integer"))? as usize;
    if dim == 0 {
        return Err(Error::parse("algebra.dim", "algebra must be nonzero (it has a unit)"));
    }
    let mul = matrix_from_json(alg.get("mul").unwrap_or(&Value::Null), dim, dim * dim, field, "algebra.mul")?;
    let unit = matrix_from_json(alg.get("unit").unwrap_or(&Value::Null), dim, 1, field, "algebra.unit")?;
    let algebra = AlgebraData::new(
        dim,
        ShapedMap::new(mul, TensorShape::new(vec![dim, dim]), TensorShape::new(vec![dim]))?,
        ShapedMap::new(unit, TensorShape::scalar(), TensorShape::new(vec![dim]))?,
        field,
    )?;

    let psi_obj = root
        .get("entwining")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse("entwining", "expected an object"))?;
    let mut psi = BTreeMap::new();
    for (key, v) in psi_obj {
        let (x, y) = parse_pair_key(&c, key, "entwining")?;
        let d = c.dim(x, y) * dim;
        let m = matrix_from_json(v, d, d, field, &format!("entwining[{key}]"))?;
        psi.insert(
            (x, y),
            ShapedMap::new(
                m,
                TensorShape::new(vec![c.dim(x, y), dim]),
                TensorShape::new(vec![dim, c.dim(x, y)]),
            )?,
        );
    }

    let bundle = StructureBundle { field, coalgebra: c, algebra, entwining: EntwiningData { psi } };
    bundle.validate_shapes()?;
    Ok(bundle)
}
