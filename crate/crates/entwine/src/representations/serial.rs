//! Text (JSON) serialization of modules and morphisms, mirroring the bundle
//! file format: `carrier` maps object names to dimensions, `coaction` /
//! `contraaction` entries are keyed "X->Y", `action` entries and morphism
//! `components` are keyed by object. A `kind` tag names the category; when
//! absent, the category is inferred from which structure keys are present.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::structures::serial::{matrix_from_json, matrix_to_json};
use crate::structures::StructureBundle;
use crate::tensor::{ShapedMap, TensorShape};
use serde_json::{Map, Value};

use super::hom::HomCategory;
use super::{
    ComoduleData, ContramoduleData, EntwinedComoduleData, EntwinedContramoduleData, ModuleData,
    MorphismData,
};

fn pair_key(b: &StructureBundle, x: usize, y: usize) -> String {
    format!("{}->{}", b.coalgebra.objects[x], b.coalgebra.objects[y])
}

fn parse_pair_key(b: &StructureBundle, key: &str, path: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = key.split("->").collect();
    if parts.len() != 2 {
        return Err(Error::parse(path, format!("key {key:?} is not of the form \"X->Y\"")));
    }
    Ok((
        b.coalgebra.object_index(parts[0]).map_err(|e| Error::parse(path, e.to_string()))?,
        b.coalgebra.object_index(parts[1]).map_err(|e| Error::parse(path, e.to_string()))?,
    ))
}

/// Serializes a module to its canonical text form.
pub fn save_module(b: &StructureBundle, m: &ModuleData) -> String {
    let c = &b.coalgebra;
    let mut root = Map::new();
    root.insert("kind".into(), Value::String(m.category().name().into()));
    let mut carrier = Map::new();
    for (x, &d) in m.carrier().iter().enumerate() {
        carrier.insert(c.objects[x].clone(), Value::from(d as u64));
    }
    root.insert("carrier".into(), Value::Object(carrier));
    let structure_entries = |table: &BTreeMap<(usize, usize), ShapedMap>| -> Value {
        let mut out = Map::new();
        for (&(x, y), s) in table {
            out.insert(pair_key(b, x, y), matrix_to_json(&s.matrix));
        }
        Value::Object(out)
    };
    let action_entries = |action: &[ShapedMap]| -> Value {
        let mut out = Map::new();
        for (x, s) in action.iter().enumerate() {
            out.insert(c.objects[x].clone(), matrix_to_json(&s.matrix));
        }
        Value::Object(out)
    };
    match m {
        ModuleData::Comod(m) => {
            root.insert("coaction".into(), structure_entries(&m.coaction));
        }
        ModuleData::EntwinedComod(m) => {
            root.insert("coaction".into(), structure_entries(&m.base.coaction));
            root.insert("action".into(), action_entries(&m.action));
        }
        ModuleData::Contra(m) => {
            root.insert("contraaction".into(), structure_entries(&m.contraaction));
        }
        ModuleData::EntwinedContra(m) => {
            root.insert("contraaction".into(), structure_entries(&m.base.contraaction));
            root.insert("action".into(), action_entries(&m.action));
        }
    }
    serde_json::to_string_pretty(&Value::Object(root)).expect("serialization cannot fail")
}

/// Parses a module against a bundle, checking shapes only (the caller runs
/// the category's axiom checker to report violations).
pub fn parse_module(b: &StructureBundle, text: &str) -> Result<ModuleData> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse("<root>", format!("invalid JSON: {e}")))?;
    let c = &b.coalgebra;
    let n = c.n_objects();
    let has_coaction = root.get("coaction").is_some();
    let has_contra = root.get("contraaction").is_some();
    let has_action = root.get("action").is_some();
    let category = match root.get("kind").and_then(Value::as_str) {
        Some(k) => HomCategory::parse(k).map_err(|e| Error::parse("kind", e.to_string()))?,
        None => match (has_coaction, has_contra, has_action) {
            (true, false, false) => HomCategory::Comod,
            (true, false, true) => HomCategory::EntwinedComod,
            (false, true, false) => HomCategory::Contra,
            (false, true, true) => HomCategory::EntwinedContra,
            _ => {
                return Err(Error::parse(
                    "<root>",
                    "cannot infer module kind: need exactly one of coaction/contraaction",
                ))
            }
        },
    };
    if category.is_comodule_side() && !has_coaction {
        return Err(Error::parse("coaction", "missing for a comodule-side module"));
    }
    if !category.is_comodule_side() && !has_contra {
        return Err(Error::parse("contraaction", "missing for a contramodule-side module"));
    }
    if category.is_entwined() && !has_action {
        return Err(Error::parse("action", "missing for an entwined module"));
    }

    let carrier_obj = root
        .get("carrier")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse("carrier", "expected an object of dimensions"))?;
    let mut carrier = vec![0usize; n];
    for (name, v) in carrier_obj {
        let x = c.object_index(name).map_err(|e| Error::parse("carrier", e.to_string()))?;
        carrier[x] = v
            .as_u64()
            .ok_or_else(|| Error::parse(format!("carrier[{name}]"), "expected a dimension"))?
            as usize;
    }

    let load_table = |key: &str, comodule_side: bool| -> Result<BTreeMap<(usize, usize), ShapedMap>> {
        let mut out = BTreeMap::new();
        let obj = root
            .get(key)
            .and_then(Value::as_object)
            .ok_or_else(|| Error::parse(key, "expected an object"))?;
        for (k, v) in obj {
            let (x, y) = parse_pair_key(b, k, key)?;
            let dc = c.dim(x, y);
            let (rows, cols, dom, cod) = if comodule_side {
                (
                    carrier[y] * dc,
                    carrier[x],
                    TensorShape::new(vec![carrier[x]]),
                    TensorShape::new(vec![carrier[y], dc]),
                )
            } else {
                (
                    carrier[x],
                    dc * carrier[y],
                    TensorShape::new(vec![dc, carrier[y]]),
                    TensorShape::new(vec![carrier[x]]),
                )
            };
            let m = matrix_from_json(v, rows, cols, b.field, &format!("{key}[{k}]"))?;
            out.insert((x, y), ShapedMap::new(m, dom, cod)?);
        }
        Ok(out)
    };
    let load_actions = |comodule_side: bool| -> Result<Vec<ShapedMap>> {
        let da = b.dim_a();
        let obj = root
            .get("action")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::parse("action", "expected an object"))?;
        let mut out = Vec::with_capacity(n);
        for x in 0..n {
            let name = &c.objects[x];
            let v = obj
                .get(name)
                .ok_or_else(|| Error::parse("action", format!("missing action at {name:?}")))?;
            let (rows, cols, dom, cod) = if comodule_side {
                (
                    carrier[x],
                    carrier[x] * da,
                    TensorShape::new(vec![carrier[x], da]),
                    TensorShape::new(vec![carrier[x]]),
                )
            } else {
                (
                    da * carrier[x],
                    carrier[x],
                    TensorShape::new(vec![carrier[x]]),
                    TensorShape::new(vec![da, carrier[x]]),
                )
            };
            let m = matrix_from_json(v, rows, cols, b.field, &format!("action[{name}]"))?;
            out.push(ShapedMap::new(m, dom, cod)?);
        }
        Ok(out)
    };

    let module = match category {
        HomCategory::Comod => {
            ModuleData::Comod(ComoduleData { carrier: carrier.clone(), coaction: load_table("coaction", true)? })
        }
        HomCategory::EntwinedComod => ModuleData::EntwinedComod(EntwinedComoduleData {
            base: ComoduleData { carrier: carrier.clone(), coaction: load_table("coaction", true)? },
            action: load_actions(true)?,
        }),
        HomCategory::Contra => ModuleData::Contra(ContramoduleData {
            carrier: carrier.clone(),
            contraaction: load_table("contraaction", false)?,
        }),
        HomCategory::EntwinedContra => ModuleData::EntwinedContra(EntwinedContramoduleData {
            base: ContramoduleData {
                carrier: carrier.clone(),
                contraaction: load_table("contraaction", false)?,
            },
            action: load_actions(false)?,
        }),
    };
    Ok(module)
}

/// Parses a module and rejects it unless it satisfies its category's
/// axioms.
pub fn load_module(b: &StructureBundle, text: &str) -> Result<ModuleData> {
    let module = parse_module(b, text)?;
    let report = check_module(b, &module);
    if !report.is_empty() {
        let summary = report.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
        return Err(Error::Validation(summary));
    }
    Ok(module)
}

/// Runs the axiom checker matching the module's category.
pub fn check_module(b: &StructureBundle, m: &ModuleData) -> crate::structures::Report {
    match m {
        ModuleData::Comod(m) => super::check_comodule(&b.coalgebra, m),
        ModuleData::EntwinedComod(m) => super::check_entwined_comodule(b, m),
        ModuleData::Contra(m) => super::check_contramodule(&b.coalgebra, m),
        ModuleData::EntwinedContra(m) => super::check_entwined_contramodule(b, m),
    }
}

/// Serializes a morphism's components keyed by object.
pub fn save_morphism(b: &StructureBundle, phi: &MorphismData) -> String {
    let mut comps = Map::new();
    for (x, m) in phi.components.iter().enumerate() {
        comps.insert(b.coalgebra.objects[x].clone(), matrix_to_json(m));
    }
    let mut root = Map::new();
    root.insert("components".into(), Value::Object(comps));
    serde_json::to_string_pretty(&Value::Object(root)).expect("serialization cannot fail")
}

/// Parses a morphism with components `target_dims[x] × source_dims[x]`.
pub fn load_morphism(
    b: &StructureBundle,
    text: &str,
    source_dims: &[usize],
    target_dims: &[usize],
) -> Result<MorphismData> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse("<root>", format!("invalid JSON: {e}")))?;
    let obj = root
        .get("components")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse("components", "expected an object keyed by object name"))?;
    let mut components: Vec<Matrix> = Vec::with_capacity(b.n_objects());
    for x in 0..b.n_objects() {
        let name = &b.coalgebra.objects[x];
        let v = obj
            .get(name)
            .ok_or_else(|| Error::parse("components", format!("missing component at {name:?}")))?;
        components.push(matrix_from_json(
            v,
            target_dims[x],
            source_dims[x],
            b.field,
            &format!("components[{name}]"),
        )?);
    }
    Ok(MorphismData { components })
}
