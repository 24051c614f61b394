//! Text (JSON) serialization of certificates and decision reports, using
//! the same exact-scalar matrix conventions as the bundle format.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::structures::serial::{matrix_from_json, matrix_to_json};
use crate::structures::StructureBundle;
use serde_json::{Map, Value};

use super::{Certificate, CointegralData, Decision, LambdaElement, Outcome, SigmaElement};

fn components_to_json(b: &StructureBundle, mats: &[Matrix]) -> Value {
    let mut out = Map::new();
    for (x, m) in mats.iter().enumerate() {
        out.insert(b.coalgebra.objects[x].clone(), matrix_to_json(m));
    }
    Value::Object(out)
}

fn components_from_json(
    b: &StructureBundle,
    v: &Value,
    dims: &[(usize, usize)],
    path: &str,
) -> Result<Vec<Matrix>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse(path, "expected an object keyed by object name"))?;
    let mut out = Vec::with_capacity(b.n_objects());
    for (x, &(rows, cols)) in dims.iter().enumerate() {
        let name = &b.coalgebra.objects[x];
        let m = obj
            .get(name)
            .ok_or_else(|| Error::parse(path, format!("missing component at {name:?}")))?;
        out.push(matrix_from_json(m, rows, cols, b.field, &format!("{path}[{name}]"))?);
    }
    Ok(out)
}

/// Serializes a certificate as a tagged JSON value.
pub fn certificate_to_json(b: &StructureBundle, cert: &Certificate) -> Value {
    let mut root = Map::new();
    match cert {
        Certificate::Sigma(s) => {
            root.insert("kind".into(), Value::String("sigma".into()));
            root.insert("sigma".into(), components_to_json(b, &s.matrices()));
        }
        Certificate::Lambda(l) => {
            root.insert("kind".into(), Value::String("lambda".into()));
            root.insert("lambda".into(), components_to_json(b, &l.matrices()));
        }
        Certificate::Pair { sigma, lambda } => {
            root.insert("kind".into(), Value::String("frobenius-pair".into()));
            root.insert("sigma".into(), components_to_json(b, &sigma.matrices()));
            root.insert("lambda".into(), components_to_json(b, &lambda.matrices()));
        }
        Certificate::Cointegral(g) => {
            root.insert("kind".into(), Value::String("cointegral".into()));
            root.insert("gamma".into(), components_to_json(b, &g.matrices()));
        }
    }
    Value::Object(root)
}

/// Parses a certificate (shape-checked against the bundle). The caller is
/// expected to re-verify it against the defining equations.
pub fn certificate_from_json(b: &StructureBundle, v: &Value) -> Result<Certificate> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse("kind", "expected a certificate kind tag"))?;
    let get = |key: &str| {
        v.get(key).ok_or_else(|| Error::parse(key, format!("missing for kind {kind:?}")))
    };
    match kind {
        "sigma" => Ok(Certificate::Sigma(SigmaElement::from_matrices(
            b,
            components_from_json(b, get("sigma")?, &SigmaElement::unknown_dims(b), "sigma")?,
        )?)),
        "lambda" => Ok(Certificate::Lambda(LambdaElement::from_matrices(
            b,
            components_from_json(b, get("lambda")?, &LambdaElement::unknown_dims(b), "lambda")?,
        )?)),
        "frobenius-pair" => Ok(Certificate::Pair {
            sigma: SigmaElement::from_matrices(
                b,
                components_from_json(b, get("sigma")?, &SigmaElement::unknown_dims(b), "sigma")?,
            )?,
            lambda: LambdaElement::from_matrices(
                b,
                components_from_json(b, get("lambda")?, &LambdaElement::unknown_dims(b), "lambda")?,
            )?,
        }),
        "cointegral" => Ok(Certificate::Cointegral(CointegralData::from_matrices(
            b,
            components_from_json(b, get("gamma")?, &CointegralData::unknown_dims(b), "gamma")?,
        )?)),
        other => Err(Error::parse("kind", format!("unknown certificate kind {other:?}"))),
    }
}

/// Renders a decision as structured JSON: outcome, certificate (if any),
/// witness ranks, and the enumeration/solve detail string.
pub fn decision_to_json(b: &StructureBundle, d: &Decision) -> Value {
    let mut root = Map::new();
    root.insert("outcome".into(), Value::String(d.outcome.to_string()));
    root.insert(
        "certificate".into(),
        match &d.certificate {
            Some(c) => certificate_to_json(b, c),
            None => Value::Null,
        },
    );
    root.insert(
        "witness".into(),
        match &d.witness {
            Some(w) => {
                let mut o = Map::new();
                o.insert("rank_coefficient".into(), Value::from(w.rank_coefficient as u64));
                o.insert("rank_augmented".into(), Value::from(w.rank_augmented as u64));
                Value::Object(o)
            }
            None => Value::Null,
        },
    );
    root.insert("detail".into(), Value::String(d.detail.clone()));
    Value::Object(root)
}

/// Human-readable rendering of a decision (free-form, exact scalars).
pub fn decision_to_human(b: &StructureBundle, d: &Decision) -> String {
    let mut out = format!("outcome: {}\ndetail: {}\n", d.outcome, d.detail);
    if let Some(w) = &d.witness {
        out.push_str(&format!(
            "witness: rank(coefficient) = {}, rank(augmented) = {}\n",
            w.rank_coefficient, w.rank_augmented
        ));
    }
    if let Some(c) = &d.certificate {
        out.push_str("certificate:\n");
        out.push_str(
            &serde_json::to_string_pretty(&certificate_to_json(b, c))
                .expect("serialization cannot fail"),
        );
        out.push('\n');
    }
    out
}

impl Outcome {
    /// The CLI exit code contract: 0 Yes, 1 No, 3 Unknown.
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Yes => 0,
            Outcome::No => 1,
            Outcome::Unknown => 3,
        }
    }
}
