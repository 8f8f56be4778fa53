//! Work documents: named collections of rings, polynomials, cdgas, matrix
//! factorizations, and spans, loaded from JSON. All cross-references must
//! resolve, and every object is validated on load.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use lgcat::crw::{AffineSymplecticStack, LagSpan, SymplecticForm};
use lgcat::error::{LgError, Result};
use lgcat::graded::{AlgebraShape, CDGAMap, GradedElement, SemifreeCDGA};
use lgcat::mf::{MatrixFactorization, PolyMatrix};
use lgcat::ring::{parse_poly, Polynomial, VarTable};

#[derive(Default)]
pub struct WorkDocument {
    pub rings: BTreeMap<String, Arc<VarTable>>,
    pub polys: BTreeMap<String, Polynomial>,
    pub cdgas: BTreeMap<String, SemifreeCDGA>,
    pub mfs: BTreeMap<String, MatrixFactorization>,
    pub spans: BTreeMap<String, LagSpan>,
}

fn bad(msg: impl Into<String>) -> LgError {
    LgError::Invalid(msg.into())
}

fn as_object<'v>(v: &'v Value, what: &str) -> Result<&'v serde_json::Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(format!("{what} must be a JSON object")))
}

fn as_string<'v>(v: &'v Value, what: &str) -> Result<&'v str> {
    v.as_str().ok_or_else(|| bad(format!("{what} must be a string")))
}

pub fn parse_document(src: &str) -> Result<WorkDocument> {
    let root: Value = serde_json::from_str(src).map_err(|e| LgError::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    let root = as_object(&root, "document")?;
    let mut doc = WorkDocument::default();

    if let Some(rings) = root.get("rings") {
        for (name, spec) in as_object(rings, "rings")? {
            let spec = as_object(spec, "ring")?;
            let vars: Vec<String> = spec
                .get("vars")
                .and_then(|v| v.as_array())
                .ok_or_else(|| bad(format!("ring `{name}` needs a vars array")))?
                .iter()
                .map(|v| as_string(v, "variable name").map(String::from))
                .collect::<Result<_>>()?;
            let weights: Vec<u32> = match spec.get("weights") {
                None => vec![1; vars.len()],
                Some(w) => w
                    .as_array()
                    .ok_or_else(|| bad("weights must be an array"))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|n| n as u32)
                            .ok_or_else(|| bad("weights must be positive integers"))
                    })
                    .collect::<Result<_>>()?,
            };
            let table = VarTable::with_weights(vars, weights)?;
            doc.rings.insert(name.clone(), table);
        }
    }

    if let Some(polys) = root.get("polys") {
        for (name, spec) in as_object(polys, "polys")? {
            let spec = as_object(spec, "poly")?;
            let ring = as_string(
                spec.get("ring").ok_or_else(|| bad(format!("poly `{name}` needs a ring")))?,
                "ring reference",
            )?;
            let table = doc
                .rings
                .get(ring)
                .ok_or_else(|| LgError::UndefinedReference(ring.to_string()))?;
            let expr = as_string(
                spec.get("expr").ok_or_else(|| bad(format!("poly `{name}` needs an expr")))?,
                "expr",
            )?;
            doc.polys.insert(name.clone(), parse_poly(table, expr)?);
        }
    }

    if let Some(cdgas) = root.get("cdgas") {
        for (name, spec) in as_object(cdgas, "cdgas")? {
            doc.cdgas.insert(name.clone(), parse_cdga(spec)?);
        }
    }

    if let Some(mfs) = root.get("mfs") {
        for (name, spec) in as_object(mfs, "mfs")? {
            let spec = as_object(spec, "mf")?;
            let ring = as_string(
                spec.get("ring").ok_or_else(|| bad(format!("mf `{name}` needs a ring")))?,
                "ring reference",
            )?;
            let table = doc
                .rings
                .get(ring)
                .ok_or_else(|| LgError::UndefinedReference(ring.to_string()))?
                .clone();
            let potential = parse_poly(
                &table,
                as_string(
                    spec.get("potential")
                        .ok_or_else(|| bad(format!("mf `{name}` needs a potential")))?,
                    "potential",
                )?,
            )?;
            let matrix = |key: &str| -> Result<PolyMatrix> {
                let rows = spec
                    .get(key)
                    .and_then(|v| v.as_array())
                    .ok_or_else(|| bad(format!("mf `{name}` needs block {key}")))?;
                let mut out = Vec::new();
                for row in rows {
                    let row = row.as_array().ok_or_else(|| bad("matrix rows are arrays"))?;
                    let mut entries = Vec::new();
                    for e in row {
                        entries.push(parse_poly(&table, as_string(e, "matrix entry")?)?);
                    }
                    out.push(entries);
                }
                PolyMatrix::from_rows(&table, out)
            };
            let mf = MatrixFactorization::new(table, potential, matrix("d0")?, matrix("d1")?)?;
            doc.mfs.insert(name.clone(), mf);
        }
    }

    if let Some(spans) = root.get("spans") {
        for (name, spec) in as_object(spans, "spans")? {
            let spec = as_object(spec, "span")?;
            let fetch = |key: &str| -> Result<&SemifreeCDGA> {
                let r = as_string(
                    spec.get(key).ok_or_else(|| bad(format!("span `{name}` needs `{key}`")))?,
                    key,
                )?;
                doc.cdgas
                    .get(r)
                    .ok_or_else(|| LgError::UndefinedReference(r.to_string()))
            };
            let left = fetch("left")?.clone();
            let right = fetch("right")?.clone();
            let apex = fetch("apex")?.clone();
            let leg = |key: &str, source: &SemifreeCDGA| -> Result<CDGAMap> {
                let images = spec
                    .get(key)
                    .and_then(|v| v.as_object())
                    .ok_or_else(|| bad(format!("span `{name}` needs `{key}` images")))?;
                let mut map: BTreeMap<String, GradedElement> = BTreeMap::new();
                for (gen, expr) in images {
                    map.insert(gen.clone(), apex.parse_element(as_string(expr, "leg image")?)?);
                }
                CDGAMap::from_images(source, &apex, &map)
            };
            let left_leg = leg("left_leg", &left)?;
            let right_leg = leg("right_leg", &right)?;
            let span = LagSpan::new(
                AffineSymplecticStack::new(left, SymplecticForm::zero()),
                AffineSymplecticStack::new(right, SymplecticForm::zero()),
                apex,
                left_leg,
                right_leg,
            )?;
            doc.spans.insert(name.clone(), span);
        }
    }

    Ok(doc)
}

/// Parse a cdga specification
/// `{"even": [{"name","weight"}...], "odd": [...], "d": {"gen": "<expr>"}}`.
pub fn parse_cdga(v: &Value) -> Result<SemifreeCDGA> {
    let spec = as_object(v, "cdga")?;
    let gen_list = |key: &str| -> Result<Vec<(String, u32)>> {
        match spec.get(key) {
            None => Ok(Vec::new()),
            Some(arr) => arr
                .as_array()
                .ok_or_else(|| bad(format!("`{key}` must be an array")))?
                .iter()
                .map(|g| {
                    let g = as_object(g, "generator")?;
                    let name = as_string(
                        g.get("name").ok_or_else(|| bad("generator needs a name"))?,
                        "name",
                    )?;
                    let weight = g
                        .get("weight")
                        .and_then(|w| w.as_u64())
                        .unwrap_or(1) as u32;
                    Ok((name.to_string(), weight))
                })
                .collect(),
        }
    };
    let even = gen_list("even")?;
    let odd = gen_list("odd")?;
    let (names, weights): (Vec<String>, Vec<u32>) = even.into_iter().unzip();
    let table = VarTable::with_weights(names, weights)?;
    let shape = AlgebraShape::new(table, odd)?;
    let free = SemifreeCDGA::with_zero_differential(&shape);
    let mut d_even = vec![GradedElement::zero(&shape); shape.even.len()];
    let mut d_odd = vec![GradedElement::zero(&shape); shape.odd_len()];
    if let Some(d) = spec.get("d") {
        for (gen, expr) in as_object(d, "d")? {
            let img = free.parse_element(as_string(expr, "differential image")?)?;
            if let Some(i) = shape.even.position(gen) {
                d_even[i] = img;
            } else if let Some(i) = shape.odd_position(gen) {
                d_odd[i] = img;
            } else {
                return Err(LgError::UnknownVariable(gen.clone()));
            }
        }
    }
    SemifreeCDGA::new(shape, d_even, d_odd)
}
