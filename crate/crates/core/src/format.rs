//! JSON documents for rings, matrices, vectors, module maps and
//! certificates.
//!
//! Every document has a top-level `"ring"` (`"Z"`, `"Q"` or
//! `{"mod": n}`) plus one or more payload keys. Integers may be JSON
//! numbers or decimal strings; rationals are strings `"p/q"`. On output,
//! values that fit in an `i64` are written as numbers and everything else
//! as strings, so nothing is lost to a parser's integer width.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::engine::{InjectivityCertificate, Reduction};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::module::{Hom, ModulePresentation, SubmoduleGens};
use crate::ring::{Ring, RingElement};

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn ring_to_json(ring: Ring) -> Value {
    match ring {
        Ring::Integers => json!("Z"),
        Ring::Rationals => json!("Q"),
        Ring::ModN(n) => json!({ "mod": n }),
    }
}

pub fn ring_from_json(v: &Value) -> Result<Ring> {
    match v {
        Value::String(s) if s == "Z" => Ok(Ring::Integers),
        Value::String(s) if s == "Q" => Ok(Ring::Rationals),
        Value::Object(o) if o.len() == 1 => {
            let n = o
                .get("mod")
                .and_then(Value::as_u64)
                .ok_or_else(|| err("ring object must be {\"mod\": n} with a positive integer n"))?;
            Ring::modn(n)
        }
        other => Err(err(format!("unknown ring {other}"))),
    }
}

fn bigint_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn element_to_json(e: &RingElement) -> Value {
    match e {
        RingElement::Int(a) => bigint_to_json(a),
        RingElement::Rat(a) if a.is_integer() => bigint_to_json(a.numer()),
        RingElement::Rat(_) => json!(e.to_string()),
        RingElement::Mod { value, .. } => json!(value),
    }
}

pub fn element_from_json(ring: Ring, v: &Value) -> Result<RingElement> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(ring.from_i64(i))
            } else if let Some(u) = n.as_u64() {
                Ok(ring.from_bigint(&BigInt::from(u)))
            } else {
                Err(err(format!("non-integer number {n}; write rationals as \"p/q\"")))
            }
        }
        Value::String(s) => ring.parse_element(s),
        other => Err(err(format!("expected a number or string, got {other}"))),
    }
}

pub fn vector_to_json(v: &[RingElement]) -> Value {
    Value::Array(v.iter().map(element_to_json).collect())
}

pub fn vector_from_json(ring: Ring, v: &Value) -> Result<Vector> {
    v.as_array()
        .ok_or_else(|| err(format!("expected an array, got {v}")))?
        .iter()
        .map(|e| element_from_json(ring, e))
        .collect()
}

fn vectors_to_json(vs: &[Vector]) -> Value {
    Value::Array(vs.iter().map(|v| vector_to_json(v)).collect())
}

fn vectors_from_json(ring: Ring, v: &Value) -> Result<Vec<Vector>> {
    v.as_array()
        .ok_or_else(|| err(format!("expected an array of arrays, got {v}")))?
        .iter()
        .map(|x| vector_from_json(ring, x))
        .collect()
}

/// `{"rows": r, "cols": c, "entries": [[row], ...]}`.
pub fn matrix_to_json(m: &Matrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": vectors_to_json(&m.to_rows()),
    })
}

pub fn matrix_from_json(ring: Ring, v: &Value) -> Result<Matrix> {
    let obj = v.as_object().ok_or_else(|| err("matrix must be an object"))?;
    let rows = vectors_from_json(ring, obj.get("entries").ok_or_else(|| err("matrix needs \"entries\""))?)?;
    let dim = |key: &str| -> Result<Option<usize>> {
        obj.get(key)
            .map(|x| {
                x.as_u64().map(|d| d as usize).ok_or_else(|| err(format!("\"{key}\" must be a non-negative integer")))
            })
            .transpose()
    };
    let nrows = dim("rows")?.unwrap_or(rows.len());
    let ncols = dim("cols")?.unwrap_or_else(|| rows.first().map_or(0, Vec::len));
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::DimensionMismatch(format!("entries do not form a {nrows}x{ncols} matrix")));
    }
    Matrix::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
}

fn columns_from_json(ring: Ring, rows: usize, v: Option<&Value>) -> Result<Option<Matrix>> {
    v.map(|v| Matrix::from_columns(ring, rows, &vectors_from_json(ring, v)?)).transpose()
}

/// Module map as `{"ambient_rank", "relations", "submodule_gens", "images"}`
/// with every matrix given as a list of columns. Omitting
/// `submodule_gens` means the whole module.
pub fn hom_to_json(f: &Hom) -> Value {
    json!({
        "ambient_rank": f.codomain().ambient_rank(),
        "relations": vectors_to_json(&f.relations().columns()),
        "submodule_gens": vectors_to_json(&f.gens().columns()),
        "images": vectors_to_json(&f.images().columns()),
    })
}

pub fn hom_from_json(ring: Ring, v: &Value) -> Result<Hom> {
    let obj = v.as_object().ok_or_else(|| err("module must be an object"))?;
    let m = obj
        .get("ambient_rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| err("module needs a non-negative integer \"ambient_rank\""))? as usize;
    let relations = columns_from_json(ring, m, obj.get("relations"))?.unwrap_or_else(|| Matrix::zeros(ring, m, 0));
    let presentation = ModulePresentation::new(relations);
    let domain = match columns_from_json(ring, m, obj.get("submodule_gens"))? {
        Some(g) => SubmoduleGens::new(presentation, g)?,
        None => SubmoduleGens::whole(presentation),
    };
    let images = columns_from_json(ring, m, obj.get("images"))?.ok_or_else(|| err("module needs \"images\""))?;
    Hom::new(domain, images)
}

fn cert_fields(cert: &InjectivityCertificate) -> Map<String, Value> {
    let mut o = Map::new();
    o.insert("ch_coeffs".into(), vector_to_json(&cert.ch_coeffs));
    o.insert("lift_matrix".into(), matrix_to_json(&cert.lift_matrix));
    o.insert("pullback_witnesses".into(), vectors_to_json(&cert.pullback_witnesses));
    o.insert("kernel_gens".into(), matrix_to_json(&cert.kernel_gens));
    o.insert("kernel_witnesses".into(), vectors_to_json(&cert.kernel_witnesses));
    o.insert(
        "invariance_witnesses".into(),
        Value::Array(cert.invariance_witnesses.iter().map(|row| vectors_to_json(row)).collect()),
    );
    o.insert("zero_witnesses".into(), vectors_to_json(&cert.zero_witnesses));
    o
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(format!("certificate needs \"{key}\"")))
}

fn cert_from_fields(ring: Ring, obj: &Map<String, Value>) -> Result<InjectivityCertificate> {
    let invariance = field(obj, "invariance_witnesses")?
        .as_array()
        .ok_or_else(|| err("\"invariance_witnesses\" must be an array"))?
        .iter()
        .map(|row| vectors_from_json(ring, row))
        .collect::<Result<_>>()?;
    Ok(InjectivityCertificate {
        ch_coeffs: vector_from_json(ring, field(obj, "ch_coeffs")?)?,
        lift_matrix: matrix_from_json(ring, field(obj, "lift_matrix")?)?,
        pullback_witnesses: vectors_from_json(ring, field(obj, "pullback_witnesses")?)?,
        kernel_gens: matrix_from_json(ring, field(obj, "kernel_gens")?)?,
        kernel_witnesses: vectors_from_json(ring, field(obj, "kernel_witnesses")?)?,
        invariance_witnesses: invariance,
        zero_witnesses: vectors_from_json(ring, field(obj, "zero_witnesses")?)?,
    })
}

/// Certificate together with the map it certifies.
pub fn certificate_to_json(f: &Hom, cert: &InjectivityCertificate) -> Value {
    let mut o = cert_fields(cert);
    o.insert("module".into(), hom_to_json(f));
    Value::Object(o)
}

pub fn certificate_from_json(ring: Ring, v: &Value) -> Result<(Hom, InjectivityCertificate)> {
    let obj = v.as_object().ok_or_else(|| err("certificate must be an object"))?;
    let f = hom_from_json(ring, field(obj, "module")?)?;
    Ok((f, cert_from_fields(ring, obj)?))
}

pub fn reduction_to_json(r: &Reduction) -> Value {
    json!({
        "certificate": certificate_to_json(&r.restricted, &r.certificate),
        "kernel_coords": vector_to_json(&r.kernel_coords),
        "zero_witness": vector_to_json(&r.zero_witness),
    })
}

pub fn reduction_from_json(ring: Ring, v: &Value) -> Result<Reduction> {
    let obj = v.as_object().ok_or_else(|| err("reduction must be an object"))?;
    let (restricted, certificate) = certificate_from_json(ring, field(obj, "certificate")?)?;
    Ok(Reduction {
        restricted,
        certificate,
        kernel_coords: vector_from_json(ring, field(obj, "kernel_coords")?)?,
        zero_witness: vector_from_json(ring, field(obj, "zero_witness")?)?,
    })
}

/// A parsed input or output document. Payloads not present are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub ring: Option<Ring>,
    pub matrix: Option<Matrix>,
    pub vector: Option<Vector>,
    pub module: Option<Hom>,
    pub certificate: Option<(Hom, InjectivityCertificate)>,
    pub reduction: Option<Reduction>,
}

const FLAT_MODULE_KEYS: [&str; 4] = ["ambient_rank", "relations", "submodule_gens", "images"];
const FLAT_MATRIX_KEYS: [&str; 3] = ["rows", "cols", "entries"];

impl Document {
    pub fn new(ring: Ring) -> Document {
        Document { ring: Some(ring), ..Document::default() }
    }

    /// Accepts payloads nested under `"matrix"` / `"module"` or written
    /// flat at the top level.
    pub fn parse(text: &str) -> Result<Document> {
        let root: Value = serde_json::from_str(text).map_err(|e| err(format!("invalid JSON: {e}")))?;
        let obj = root.as_object().ok_or_else(|| err("document must be a JSON object"))?;
        let ring = ring_from_json(obj.get("ring").ok_or_else(|| err("document needs a \"ring\""))?)?;
        let known = ["ring", "matrix", "vector", "module", "certificate", "reduction"];
        if let Some(k) = obj.keys().find(|k| {
            !known.contains(&k.as_str())
                && !FLAT_MODULE_KEYS.contains(&k.as_str())
                && !FLAT_MATRIX_KEYS.contains(&k.as_str())
        }) {
            return Err(err(format!("unknown key \"{k}\"")));
        }

        let flat = |keys: &[&str]| -> Option<Value> {
            keys.iter().any(|k| obj.contains_key(*k)).then(|| {
                Value::Object(keys.iter().filter_map(|k| obj.get(*k).map(|v| (k.to_string(), v.clone()))).collect())
            })
        };
        let matrix = obj.get("matrix").cloned().or_else(|| flat(&FLAT_MATRIX_KEYS));
        let module = obj.get("module").cloned().or_else(|| flat(&FLAT_MODULE_KEYS));

        Ok(Document {
            ring: Some(ring),
            matrix: matrix.map(|m| matrix_from_json(ring, &m)).transpose()?,
            vector: obj.get("vector").map(|v| vector_from_json(ring, v)).transpose()?,
            module: module.map(|m| hom_from_json(ring, &m)).transpose()?,
            certificate: obj.get("certificate").map(|c| certificate_from_json(ring, c)).transpose()?,
            reduction: obj.get("reduction").map(|r| reduction_from_json(ring, r)).transpose()?,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut o = Map::new();
        if let Some(r) = self.ring {
            o.insert("ring".into(), ring_to_json(r));
        }
        if let Some(m) = &self.matrix {
            o.insert("matrix".into(), matrix_to_json(m));
        }
        if let Some(v) = &self.vector {
            o.insert("vector".into(), vector_to_json(v));
        }
        if let Some(f) = &self.module {
            o.insert("module".into(), hom_to_json(f));
        }
        if let Some((f, c)) = &self.certificate {
            o.insert("certificate".into(), certificate_to_json(f, c));
        }
        if let Some(r) = &self.reduction {
            o.insert("reduction".into(), reduction_to_json(r));
        }
        Value::Object(o)
    }

    pub fn to_json_string(&self) -> String {
        to_pretty(&self.to_json())
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_forms() {
        for r in [Ring::Integers, Ring::Rationals, Ring::ModN(6)] {
            assert_eq!(ring_from_json(&ring_to_json(r)).unwrap(), r);
        }
        assert!(ring_from_json(&json!({"mod": 1})).is_err());
        assert!(ring_from_json(&json!("R")).is_err());
    }

    #[test]
    fn flat_and_nested_matrices_agree() {
        let flat = Document::parse(r#"{"ring":"Z","rows":2,"cols":2,"entries":[[1,2],[3,4]]}"#).unwrap();
        let nested = Document::parse(r#"{"ring":"Z","matrix":{"rows":2,"cols":2,"entries":[[1,"2"],[3,4]]}}"#).unwrap();
        assert_eq!(flat, nested);
        assert_eq!(flat.matrix.unwrap(), Matrix::from_i64_rows(Ring::Integers, &[&[1, 2], &[3, 4]]));
    }

    #[test]
    fn rationals_and_big_integers() {
        let d = Document::parse(r#"{"ring":"Q","vector":["1/2", -3, "6/4"]}"#).unwrap();
        assert_eq!(d.vector.as_ref().unwrap()[2], Ring::Rationals.parse_element("3/2").unwrap());
        let text = d.to_json_string();
        assert!(text.contains("\"1/2\"") && text.contains("-3") && text.ends_with('\n'));

        let big = "-98765432109876543210987654321";
        let d = Document::parse(&format!(r#"{{"ring":"Z","vector":["{big}"]}}"#)).unwrap();
        assert_eq!(Document::parse(&d.to_json_string()).unwrap(), d);
        assert!(d.to_json_string().contains(big));
    }

    #[test]
    fn module_defaults_to_whole_module() {
        let d = Document::parse(r#"{"ring":"Z","ambient_rank":1,"relations":[[4]],"images":[[3]]}"#).unwrap();
        let f = d.module.unwrap();
        assert_eq!(f.gens(), &Matrix::identity(Ring::Integers, 1));
        assert_eq!(f.relations(), &Matrix::from_i64_rows(Ring::Integers, &[&[4]]));
    }

    #[test]
    fn malformed_documents() {
        for bad in [
            "not json",
            "[]",
            r#"{"matrix":{"entries":[]}}"#,
            r#"{"ring":"Z","rows":2,"cols":2,"entries":[[1,2]]}"#,
            r#"{"ring":"Z","vector":[1.5]}"#,
            r#"{"ring":"Z","vector":["1/2"]}"#,
            r#"{"ring":"Z","ambient_rank":2,"images":[[1]]}"#,
            r#"{"ring":"Z","frobnicate":1}"#,
        ] {
            assert!(Document::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn empty_matrices_keep_their_shape() {
        let m = Matrix::zeros(Ring::Integers, 3, 0);
        let back = matrix_from_json(Ring::Integers, &matrix_to_json(&m)).unwrap();
        assert_eq!((back.rows(), back.cols()), (3, 0));
    }
}
