//! JSON file formats for algebras, doubles, link diagrams and Heegaard
//! diagrams. Exact scalars are written as strings, never floats.

use hopfknot_core::chromatic::{FlatHeegaardDiagram, HeegaardEvent, Travel};
use hopfknot_core::double::DrinfeldDouble;
use hopfknot_core::hkr::{Basepoint, CrossingKind, LinkEvent, MorseLinkDiagram, Rotation};
use hopfknot_core::{Element, Field, Functional, HopfAlgebra, HopfData, Rational, Scalar, Tensor};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] hopfknot_core::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

fn schema<T>(msg: impl Into<String>) -> Result<T> {
    Err(FormatError::Schema(msg.into()))
}

pub fn scalar_to_json(x: &Scalar) -> Value {
    match x {
        Scalar::Cyclotomic { .. } => Value::from(x.to_strings()),
        _ => Value::from(x.to_strings().remove(0)),
    }
}

fn rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse().map_err(|_| FormatError::Schema(format!("bad rational {s:?}"))),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_int(n.as_i64().expect("checked"))),
        other => schema(format!("expected a rational string, found {other}")),
    }
}

pub fn scalar_from_json(v: &Value, field: &Field) -> Result<Scalar> {
    match (field, v) {
        (Field::Cyclotomic(_), Value::Array(items)) => {
            Ok(field.from_coeffs(items.iter().map(rational).collect::<Result<_>>()?)?)
        }
        _ => Ok(field.from_rational(&rational(v)?)?),
    }
}

fn scalars(xs: &[Scalar]) -> Vec<Value> {
    xs.iter().map(scalar_to_json).collect()
}

fn parse_scalars(vs: &[Value], field: &Field) -> Result<Vec<Scalar>> {
    vs.iter().map(|v| scalar_from_json(v, field)).collect()
}

#[derive(Serialize, Deserialize)]
struct FieldJson {
    field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
}

fn field_to_json(f: &Field) -> FieldJson {
    match f {
        Field::Rational => FieldJson { field: "Q".into(), p: None, m: None },
        Field::Prime(p) => FieldJson { field: "Fp".into(), p: Some(*p), m: None },
        Field::Cyclotomic(c) => FieldJson { field: "cyclotomic".into(), p: None, m: Some(c.order()) },
    }
}

fn field_from_json(f: &FieldJson) -> Result<Field> {
    match (f.field.as_str(), f.p, f.m) {
        ("Q", _, _) => Ok(Field::Rational),
        ("Fp", Some(p), _) => Ok(Field::prime(p)?),
        ("cyclotomic", _, Some(m)) if m >= 1 => Ok(Field::cyclotomic(m)),
        _ => schema(format!("unknown field descriptor {:?}", f.field)),
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    #[serde(flatten)]
    field: FieldJson,
    dim: usize,
    labels: Vec<String>,
    mult: Vec<(usize, usize, usize, Value)>,
    unit: Vec<Value>,
    comult: Vec<(usize, usize, usize, Value)>,
    counit: Vec<Value>,
    antipode: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pivot: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    double: Option<DoubleJson>,
}

#[derive(Serialize, Deserialize)]
struct DoubleJson {
    #[serde(rename = "R")]
    r: Vec<(usize, usize, Value)>,
    theta: Vec<Value>,
    #[serde(rename = "gD")]
    g_d: Vec<Value>,
    #[serde(rename = "muD")]
    mu_d: Vec<Value>,
}

/// Ribbon data read back from a double block.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleBlock {
    pub r: Tensor,
    pub theta: Element,
    pub g: Element,
    pub mu: Functional,
}

/// An algebra file: the algebra plus the optional double block.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraFile {
    pub algebra: HopfAlgebra,
    pub double: Option<DoubleBlock>,
}

fn algebra_json(h: &HopfAlgebra) -> AlgebraJson {
    let d = h.data();
    let quad =
        |v: &[(usize, usize, usize, Scalar)]| v.iter().map(|(i, j, k, c)| (*i, *j, *k, scalar_to_json(c))).collect();
    AlgebraJson {
        field: field_to_json(&d.field),
        dim: h.dim(),
        labels: d.labels,
        mult: quad(&d.mult),
        unit: scalars(&d.unit),
        comult: quad(&d.comult),
        counit: scalars(&d.counit),
        antipode: d.antipode.iter().map(|r| scalars(r)).collect(),
        pivot: d.pivot.as_deref().map(scalars),
        double: None,
    }
}

pub fn algebra_to_json(h: &HopfAlgebra) -> Value {
    serde_json::to_value(algebra_json(h)).expect("serializable")
}

/// The double's algebra with its R-matrix, ribbon element, pivot and
/// symmetrized integral attached.
pub fn double_to_json(d: &DrinfeldDouble) -> Value {
    let mut a = algebra_json(&d.algebra);
    a.double = Some(DoubleJson {
        r: d.r.terms().map(|(idx, c)| (idx[0], idx[1], scalar_to_json(c))).collect(),
        theta: scalars(d.theta.coeffs()),
        g_d: scalars(d.g_d.coeffs()),
        mu_d: scalars(d.mu_d.coeffs()),
    });
    serde_json::to_value(a).expect("serializable")
}

pub fn algebra_from_json(text: &str) -> Result<AlgebraFile> {
    let a: AlgebraJson = serde_json::from_str(text)?;
    let field = field_from_json(&a.field)?;
    let n = a.dim;
    let quad = |v: &[(usize, usize, usize, Value)]| -> Result<Vec<(usize, usize, usize, Scalar)>> {
        v.iter()
            .map(|(i, j, k, c)| {
                if *i >= n || *j >= n || *k >= n {
                    return schema(format!("structure constant index ({i}, {j}, {k}) out of range for dim {n}"));
                }
                Ok((*i, *j, *k, scalar_from_json(c, &field)?))
            })
            .collect()
    };
    if a.labels.len() != n || a.unit.len() != n || a.counit.len() != n || a.antipode.len() != n {
        return schema(format!("labels, unit, counit and antipode must all have length dim = {n}"));
    }
    let data = HopfData {
        field: field.clone(),
        labels: a.labels,
        mult: quad(&a.mult)?,
        unit: parse_scalars(&a.unit, &field)?,
        comult: quad(&a.comult)?,
        counit: parse_scalars(&a.counit, &field)?,
        antipode: a.antipode.iter().map(|r| parse_scalars(r, &field)).collect::<Result<_>>()?,
        pivot: a.pivot.as_deref().map(|p| parse_scalars(p, &field)).transpose()?,
    };
    let algebra = HopfAlgebra::new(data)?;
    let double = match a.double {
        None => None,
        Some(d) => {
            let mut r = algebra.tensor(2);
            for (i, j, c) in &d.r {
                if *i >= n || *j >= n {
                    return schema(format!("R index ({i}, {j}) out of range"));
                }
                r.add_term(vec![*i, *j], scalar_from_json(c, &field)?);
            }
            Some(DoubleBlock {
                r,
                theta: algebra.element(parse_scalars(&d.theta, &field)?)?,
                g: algebra.element(parse_scalars(&d.g_d, &field)?)?,
                mu: algebra.functional(parse_scalars(&d.mu_d, &field)?)?,
            })
        }
    };
    Ok(AlgebraFile { algebra, double })
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "t", rename_all = "lowercase")]
enum LinkEventJson {
    Cup { at: usize, orient: String },
    Cap { at: usize, orient: String },
    Cross { at: usize, kind: String },
    Virtual { at: usize },
}

#[derive(Serialize, Deserialize)]
struct BasepointJson {
    component: usize,
    event: usize,
    slot: usize,
}

#[derive(Serialize, Deserialize)]
struct LinkJson {
    events: Vec<LinkEventJson>,
    #[serde(default)]
    basepoints: Vec<BasepointJson>,
}

fn rotation(s: &str) -> Result<Rotation> {
    match s {
        "ccw" => Ok(Rotation::Ccw),
        "cw" => Ok(Rotation::Cw),
        _ => schema(format!("orientation must be \"ccw\" or \"cw\", found {s:?}")),
    }
}

fn rotation_name(r: Rotation) -> String {
    match r {
        Rotation::Ccw => "ccw".into(),
        Rotation::Cw => "cw".into(),
    }
}

pub fn link_to_json(d: &MorseLinkDiagram) -> Value {
    let events = d
        .events()
        .iter()
        .map(|e| match *e {
            LinkEvent::Cup { at, orient } => LinkEventJson::Cup { at, orient: rotation_name(orient) },
            LinkEvent::Cap { at, orient } => LinkEventJson::Cap { at, orient: rotation_name(orient) },
            LinkEvent::Cross { at, kind } => LinkEventJson::Cross { at, kind: kind.code().into() },
            LinkEvent::Virtual { at } => LinkEventJson::Virtual { at },
        })
        .collect();
    let basepoints =
        d.basepoints().iter().map(|b| BasepointJson { component: b.component, event: b.event, slot: b.slot }).collect();
    serde_json::to_value(LinkJson { events, basepoints }).expect("serializable")
}

pub fn link_from_json(text: &str) -> Result<MorseLinkDiagram> {
    let l: LinkJson = serde_json::from_str(text)?;
    let mut events = Vec::with_capacity(l.events.len());
    for (i, e) in l.events.iter().enumerate() {
        events.push(match e {
            LinkEventJson::Cup { at, orient } => LinkEvent::Cup { at: *at, orient: rotation(orient)? },
            LinkEventJson::Cap { at, orient } => LinkEvent::Cap { at: *at, orient: rotation(orient)? },
            LinkEventJson::Cross { at, kind } => LinkEvent::Cross {
                at: *at,
                kind: CrossingKind::parse(kind)
                    .ok_or_else(|| FormatError::Schema(format!("event {i}: unknown crossing kind {kind:?}")))?,
            },
            LinkEventJson::Virtual { at } => LinkEvent::Virtual { at: *at },
        });
    }
    let bps = l.basepoints.iter().map(|b| Basepoint { component: b.component, event: b.event, slot: b.slot }).collect();
    Ok(MorseLinkDiagram::new(events, bps)?)
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "t", rename_all = "lowercase")]
enum HeegaardEventJson {
    Cross { alpha: usize, slot: usize, d: u8 },
    Max { orient: String },
    Min { orient: String },
    Gamma { gamma: usize, order: usize, dir: String },
}

#[derive(Serialize, Deserialize)]
struct HeegaardJson {
    genus: usize,
    beta: Vec<Vec<HeegaardEventJson>>,
    basepoints: Vec<usize>,
}

fn travel(s: &str) -> Result<Travel> {
    match s {
        "r" => Ok(Travel::Right),
        "l" => Ok(Travel::Left),
        _ => schema(format!("orientation must be \"r\" or \"l\", found {s:?}")),
    }
}

fn travel_name(t: Travel) -> String {
    match t {
        Travel::Right => "r".into(),
        Travel::Left => "l".into(),
    }
}

pub fn heegaard_to_json(d: &FlatHeegaardDiagram) -> Value {
    let beta = d
        .beta()
        .iter()
        .map(|w| {
            w.iter()
                .map(|e| match *e {
                    HeegaardEvent::Cross { alpha, slot, d } => HeegaardEventJson::Cross { alpha, slot, d },
                    HeegaardEvent::Max(t) => HeegaardEventJson::Max { orient: travel_name(t) },
                    HeegaardEvent::Min(t) => HeegaardEventJson::Min { orient: travel_name(t) },
                    HeegaardEvent::Gamma { gamma, order, dir } => {
                        HeegaardEventJson::Gamma { gamma, order, dir: travel_name(dir) }
                    }
                })
                .collect()
        })
        .collect();
    serde_json::to_value(HeegaardJson { genus: d.genus(), beta, basepoints: d.basepoints().to_vec() })
        .expect("serializable")
}

pub fn heegaard_from_json(text: &str) -> Result<FlatHeegaardDiagram> {
    let h: HeegaardJson = serde_json::from_str(text)?;
    let beta = h
        .beta
        .iter()
        .map(|w| {
            w.iter()
                .map(|e| {
                    Ok(match e {
                        HeegaardEventJson::Cross { alpha, slot, d } => {
                            HeegaardEvent::Cross { alpha: *alpha, slot: *slot, d: *d }
                        }
                        HeegaardEventJson::Max { orient } => HeegaardEvent::Max(travel(orient)?),
                        HeegaardEventJson::Min { orient } => HeegaardEvent::Min(travel(orient)?),
                        HeegaardEventJson::Gamma { gamma, order, dir } => {
                            HeegaardEvent::Gamma { gamma: *gamma, order: *order, dir: travel(dir)? }
                        }
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FlatHeegaardDiagram::new(h.genus, beta, h.basepoints)?)
}

/// Functional or element coordinates as a JSON array.
pub fn coords(xs: &[Scalar]) -> Value {
    json!(scalars(xs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfknot_core::chromatic;
    use hopfknot_core::zoo;

    #[test]
    fn scalars_roundtrip() {
        let q = Field::Rational;
        let x = q.from_rational(&Rational::new(-3, 7)).unwrap();
        assert_eq!(scalar_to_json(&x), json!("-3/7"));
        assert_eq!(scalar_from_json(&json!("-3/7"), &q).unwrap(), x);
        assert_eq!(scalar_from_json(&json!(2), &q).unwrap(), q.from_int(2));
        let c = Field::cyclotomic(4);
        let z = c.zeta_pow(1).unwrap();
        assert_eq!(scalar_from_json(&scalar_to_json(&z), &c).unwrap(), z);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(scalar_from_json(&json!("7"), &f5).unwrap(), f5.from_int(2));
        assert!(scalar_from_json(&json!("x"), &q).is_err());
    }

    #[test]
    fn algebra_roundtrip() {
        for h in [
            zoo::sweedler_algebra(&Field::Rational).unwrap(),
            zoo::small_quantum_sl2(2, &Field::cyclotomic(4).one()).unwrap().algebra,
            zoo::cyclic_group_algebra(3, &Field::prime(7).unwrap()).unwrap(),
        ] {
            let text = algebra_to_json(&h).to_string();
            let back = algebra_from_json(&text).unwrap();
            assert_eq!(back.algebra, h);
            assert!(back.double.is_none());
        }
    }

    #[test]
    fn double_roundtrip() {
        let h = zoo::cyclic_group_algebra(2, &Field::Rational).unwrap();
        let d = DrinfeldDouble::build(&h).unwrap();
        let back = algebra_from_json(&double_to_json(&d).to_string()).unwrap();
        assert_eq!(back.algebra, d.algebra);
        let block = back.double.unwrap();
        let terms = |t: &Tensor| t.terms().map(|(i, c)| (i.to_vec(), c.clone())).collect::<Vec<_>>();
        assert_eq!(terms(&block.r), terms(&d.r));
        assert_eq!(block.theta.coeffs(), d.theta.coeffs());
        assert_eq!(block.mu.coeffs(), d.mu_d.coeffs());
    }

    #[test]
    fn diagrams_roundtrip() {
        let g2 = chromatic::genus_two_example();
        assert_eq!(heegaard_from_json(&heegaard_to_json(&g2).to_string()).unwrap(), g2);
        let link = g2.to_surgery_link().unwrap();
        assert_eq!(link_from_json(&link_to_json(&link).to_string()).unwrap(), link);
        let empty = link_from_json(r#"{"events": [], "basepoints": []}"#).unwrap();
        assert_eq!(empty.n_components(), 0);
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(link_from_json("{"), Err(FormatError::Json(_))));
        let bad = r#"{"events": [{"t":"cup","at":0,"orient":"up"}]}"#;
        assert!(matches!(link_from_json(bad), Err(FormatError::Schema(_))));
        let dup = r#"{"genus":1,"beta":[[{"t":"cross","alpha":0,"slot":1,"d":0},{"t":"cross","alpha":0,"slot":1,"d":1}]],"basepoints":[0]}"#;
        assert!(matches!(heegaard_from_json(dup), Err(FormatError::Core(hopfknot_core::Error::SlotMismatch(_)))));
    }
}
