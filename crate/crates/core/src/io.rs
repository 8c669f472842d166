//! JSON presentation files.
//!
//! Every file is an object with a `kind` and a `field`, followed by the structure
//! tensors as sparse `[row, col, "coeff"]` triples. Tensor shapes follow from the
//! dimensions: `mult` is `d × d²`, `unit` is `d × 1`, `delta` is `d² × d`,
//! `counit` is `1 × d`, `antipode` is `d × d`.
//!
//! ```json
//! {
//!   "kind": "hopf",
//!   "field": "Q",
//!   "dim": 2,
//!   "labels": ["1", "g"],
//!   ...
//! }
//! ```

use std::cell::Cell;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::actions::{ActionKind, LinearAction, MatchedPair, Side};
use crate::brace::HopfBraceData;
use crate::catlim::MorphismData;
use crate::error::{Error, Result};
use crate::hopf::{default_labels, CoalgebraData, HopfAlgebraData};
use crate::linalg::SparseMatrix;
use crate::scalar::{Field, Scalar};

thread_local! {
    static FIELD: Cell<Option<Field>> = const { Cell::new(None) };
}

/// A coefficient, parsed in the field of the document being read.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Coeff(Scalar);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_canonical())
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let field = FIELD
            .with(Cell::get)
            .ok_or_else(|| de::Error::custom("coefficient outside a document"))?;
        field
            .parse(&s)
            .map(Coeff)
            .map_err(|_| de::Error::custom(format!("invalid coefficient {s:?} in {field}")))
    }
}

type Entries = Vec<(usize, usize, Coeff)>;

fn entries(m: &SparseMatrix) -> Entries {
    m.triples().into_iter().map(|(r, c, v)| (r, c, Coeff(v))).collect()
}

fn matrix(field: Field, rows: usize, cols: usize, e: &Entries, what: &str) -> Result<SparseMatrix> {
    SparseMatrix::from_triples(field, rows, cols, e.iter().map(|(r, c, v)| (*r, *c, v.0.clone())))
        .map_err(|err| match err {
            Error::IndexOutOfRange(m) => Error::IndexOutOfRange(format!("{what}: {m}")),
            other => other,
        })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraBody {
    mult: Entries,
    unit: Entries,
    antipode: Entries,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfBody {
    dim: usize,
    #[serde(default)]
    labels: Vec<String>,
    delta: Entries,
    counit: Entries,
    mult: Entries,
    unit: Entries,
    antipode: Entries,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BraceBody {
    dim: usize,
    #[serde(default)]
    labels: Vec<String>,
    delta: Entries,
    counit: Entries,
    mult: Entries,
    unit: Entries,
    antipode: Entries,
    circ: AlgebraBody,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionBody {
    #[serde(default)]
    claimed: Vec<String>,
    tensor: Entries,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfDoc {
    kind: String,
    field: String,
    dim: usize,
    #[serde(default)]
    labels: Vec<String>,
    delta: Entries,
    counit: Entries,
    mult: Entries,
    unit: Entries,
    antipode: Entries,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BraceDoc {
    kind: String,
    field: String,
    dim: usize,
    #[serde(default)]
    labels: Vec<String>,
    delta: Entries,
    counit: Entries,
    mult: Entries,
    unit: Entries,
    antipode: Entries,
    circ: AlgebraBody,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionDoc {
    kind: String,
    field: String,
    side: String,
    #[serde(default)]
    claimed: Vec<String>,
    actor: HopfBody,
    target: HopfBody,
    tensor: Entries,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatchedPairDoc {
    kind: String,
    field: String,
    a: HopfBody,
    h: HopfBody,
    left: ActionBody,
    right: ActionBody,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    kind: String,
    field: String,
    rows: usize,
    cols: usize,
    entries: Entries,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismDoc {
    kind: String,
    field: String,
    source: BraceBody,
    target: BraceBody,
    matrix: Entries,
}

#[derive(Deserialize)]
struct Probe {
    kind: String,
    field: String,
}

/// Anything a presentation file can hold. Loaded objects are shape-checked but not
/// axiom-verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Loaded {
    Hopf(HopfAlgebraData),
    Brace(HopfBraceData),
    MatchedPair(MatchedPair),
    Action(LinearAction),
    Matrix(SparseMatrix),
    Morphism(MorphismData),
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Hopf(_) => "hopf",
            Loaded::Brace(_) => "brace",
            Loaded::MatchedPair(_) => "matched-pair",
            Loaded::Action(_) => "action",
            Loaded::Matrix(_) => "matrix",
            Loaded::Morphism(_) => "morphism",
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Loaded::Hopf(h) => h.field(),
            Loaded::Brace(b) => b.field(),
            Loaded::MatchedPair(mp) => mp.a().field(),
            Loaded::Action(a) => a.target().field(),
            Loaded::Matrix(m) => m.field(),
            Loaded::Morphism(m) => m.matrix.field(),
        }
    }
}

impl From<HopfAlgebraData> for Loaded {
    fn from(h: HopfAlgebraData) -> Self {
        Loaded::Hopf(h)
    }
}

impl From<HopfBraceData> for Loaded {
    fn from(b: HopfBraceData) -> Self {
        Loaded::Brace(b)
    }
}

impl From<MatchedPair> for Loaded {
    fn from(mp: MatchedPair) -> Self {
        Loaded::MatchedPair(mp)
    }
}

impl From<LinearAction> for Loaded {
    fn from(a: LinearAction) -> Self {
        Loaded::Action(a)
    }
}

impl From<SparseMatrix> for Loaded {
    fn from(m: SparseMatrix) -> Self {
        Loaded::Matrix(m)
    }
}

impl From<MorphismData> for Loaded {
    fn from(m: MorphismData) -> Self {
        Loaded::Morphism(m)
    }
}

fn parse_err(e: serde_json::Error) -> Error {
    let message = e.to_string();
    // serde_json appends " at line L column C"; the position is reported separately.
    let message = match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message,
    };
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message,
    }
}

struct FieldGuard;

impl FieldGuard {
    fn set(f: Field) -> Self {
        FIELD.with(|c| c.set(Some(f)));
        FieldGuard
    }
}

impl Drop for FieldGuard {
    fn drop(&mut self) {
        FIELD.with(|c| c.set(None));
    }
}

fn labels_or_default(labels: Vec<String>, dim: usize) -> Result<Vec<String>> {
    if labels.is_empty() {
        return Ok(default_labels(dim));
    }
    if labels.len() != dim {
        return Err(Error::shape("labels", dim, labels.len()));
    }
    Ok(labels)
}

#[allow(clippy::too_many_arguments)]
fn hopf_from_parts(
    f: Field,
    dim: usize,
    labels: Vec<String>,
    delta: &Entries,
    counit: &Entries,
    mult: &Entries,
    unit: &Entries,
    antipode: &Entries,
) -> Result<HopfAlgebraData> {
    let c = CoalgebraData::new(
        labels_or_default(labels, dim)?,
        matrix(f, dim * dim, dim, delta, "delta")?,
        matrix(f, 1, dim, counit, "counit")?,
    )?;
    HopfAlgebraData::new(
        c,
        matrix(f, dim, dim * dim, mult, "mult")?,
        matrix(f, dim, 1, unit, "unit")?,
        matrix(f, dim, dim, antipode, "antipode")?,
    )
}

fn hopf_from_body(f: Field, b: HopfBody) -> Result<HopfAlgebraData> {
    hopf_from_parts(f, b.dim, b.labels, &b.delta, &b.counit, &b.mult, &b.unit, &b.antipode)
}

fn hopf_body(h: &HopfAlgebraData) -> HopfBody {
    HopfBody {
        dim: h.dim(),
        labels: h.labels().to_vec(),
        delta: entries(h.delta()),
        counit: entries(h.counit()),
        mult: entries(h.mult()),
        unit: entries(h.unit()),
        antipode: entries(h.antipode()),
    }
}

fn algebra_body(h: &HopfAlgebraData) -> AlgebraBody {
    AlgebraBody {
        mult: entries(h.mult()),
        unit: entries(h.unit()),
        antipode: entries(h.antipode()),
    }
}

fn brace_from_body(f: Field, b: BraceBody) -> Result<HopfBraceData> {
    let dot = hopf_from_parts(f, b.dim, b.labels, &b.delta, &b.counit, &b.mult, &b.unit, &b.antipode)?;
    let d = b.dim;
    let circ = HopfAlgebraData::new(
        dot.coalgebra().clone(),
        matrix(f, d, d * d, &b.circ.mult, "circ.mult")?,
        matrix(f, d, 1, &b.circ.unit, "circ.unit")?,
        matrix(f, d, d, &b.circ.antipode, "circ.antipode")?,
    )?;
    HopfBraceData::new(Arc::new(dot), Arc::new(circ))
}

fn brace_body(b: &HopfBraceData) -> BraceBody {
    let h = hopf_body(b.dot());
    BraceBody {
        dim: h.dim,
        labels: h.labels,
        delta: h.delta,
        counit: h.counit,
        mult: h.mult,
        unit: h.unit,
        antipode: h.antipode,
        circ: algebra_body(b.circ()),
    }
}

fn claimed(names: &[String]) -> Result<Vec<ActionKind>> {
    names.iter().map(|s| s.parse()).collect()
}

fn claimed_names(act: &LinearAction) -> Vec<String> {
    act.claimed().iter().map(|k| k.id().to_string()).collect()
}

fn action_tensor(f: Field, side: Side, actor: &HopfAlgebraData, target: &HopfAlgebraData, e: &Entries) -> Result<SparseMatrix> {
    matrix(f, target.dim(), actor.dim() * target.dim(), e, &format!("{side} action tensor"))
}

fn check_kind(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(Error::Unknown { kind: "document kind", id: found.into() });
    }
    Ok(())
}

/// Parses a presentation document.
pub fn load_str(text: &str) -> Result<Loaded> {
    let probe: Probe = serde_json::from_str(text).map_err(parse_err)?;
    let f: Field = probe.field.parse()?;
    let _guard = FieldGuard::set(f);
    let loaded = match probe.kind.as_str() {
        "hopf" => {
            let d: HopfDoc = serde_json::from_str(text).map_err(parse_err)?;
            check_kind(&d.kind, "hopf")?;
            Loaded::Hopf(hopf_from_parts(f, d.dim, d.labels, &d.delta, &d.counit, &d.mult, &d.unit, &d.antipode)?)
        }
        "brace" => {
            let d: BraceDoc = serde_json::from_str(text).map_err(parse_err)?;
            let body = BraceBody {
                dim: d.dim,
                labels: d.labels,
                delta: d.delta,
                counit: d.counit,
                mult: d.mult,
                unit: d.unit,
                antipode: d.antipode,
                circ: d.circ,
            };
            Loaded::Brace(brace_from_body(f, body)?)
        }
        "action" => {
            let d: ActionDoc = serde_json::from_str(text).map_err(parse_err)?;
            let side: Side = d.side.parse()?;
            let actor = Arc::new(hopf_from_body(f, d.actor)?);
            let target = Arc::new(hopf_from_body(f, d.target)?);
            let t = action_tensor(f, side, &actor, &target, &d.tensor)?;
            Loaded::Action(LinearAction::new(side, actor, target, t, claimed(&d.claimed)?)?)
        }
        "matched-pair" => {
            let d: MatchedPairDoc = serde_json::from_str(text).map_err(parse_err)?;
            let a = Arc::new(hopf_from_body(f, d.a)?);
            let h = Arc::new(hopf_from_body(f, d.h)?);
            let lt = action_tensor(f, Side::Left, &h, &a, &d.left.tensor)?;
            let rt = action_tensor(f, Side::Right, &a, &h, &d.right.tensor)?;
            let left = LinearAction::new(Side::Left, h.clone(), a.clone(), lt, claimed(&d.left.claimed)?)?;
            let right = LinearAction::new(Side::Right, a, h, rt, claimed(&d.right.claimed)?)?;
            Loaded::MatchedPair(MatchedPair::new(right, left)?)
        }
        "matrix" => {
            let d: MatrixDoc = serde_json::from_str(text).map_err(parse_err)?;
            Loaded::Matrix(matrix(f, d.rows, d.cols, &d.entries, "matrix")?)
        }
        "morphism" => {
            let d: MorphismDoc = serde_json::from_str(text).map_err(parse_err)?;
            let source = brace_from_body(f, d.source)?;
            let target = brace_from_body(f, d.target)?;
            let m = matrix(f, target.dim(), source.dim(), &d.matrix, "morphism matrix")?;
            Loaded::Morphism(MorphismData { source, target, matrix: m })
        }
        other => return Err(Error::Unknown { kind: "document kind", id: other.into() }),
    };
    Ok(loaded)
}

pub fn load(path: impl AsRef<Path>) -> Result<Loaded> {
    load_str(&fs::read_to_string(path)?)
}

fn document(obj: &Loaded) -> Value {
    let field = obj.field().to_string();
    let v = match obj {
        Loaded::Hopf(h) => {
            let b = hopf_body(h);
            serde_json::to_value(HopfDoc {
                kind: "hopf".into(),
                field,
                dim: b.dim,
                labels: b.labels,
                delta: b.delta,
                counit: b.counit,
                mult: b.mult,
                unit: b.unit,
                antipode: b.antipode,
            })
        }
        Loaded::Brace(br) => {
            let b = brace_body(br);
            serde_json::to_value(BraceDoc {
                kind: "brace".into(),
                field,
                dim: b.dim,
                labels: b.labels,
                delta: b.delta,
                counit: b.counit,
                mult: b.mult,
                unit: b.unit,
                antipode: b.antipode,
                circ: b.circ,
            })
        }
        Loaded::Action(a) => serde_json::to_value(ActionDoc {
            kind: "action".into(),
            field,
            side: a.side().to_string(),
            claimed: claimed_names(a),
            actor: hopf_body(a.actor()),
            target: hopf_body(a.target()),
            tensor: entries(a.tensor()),
        }),
        Loaded::MatchedPair(mp) => serde_json::to_value(MatchedPairDoc {
            kind: "matched-pair".into(),
            field,
            a: hopf_body(mp.a()),
            h: hopf_body(mp.h()),
            left: ActionBody {
                claimed: claimed_names(mp.left()),
                tensor: entries(mp.left().tensor()),
            },
            right: ActionBody {
                claimed: claimed_names(mp.right()),
                tensor: entries(mp.right().tensor()),
            },
        }),
        Loaded::Matrix(m) => serde_json::to_value(MatrixDoc {
            kind: "matrix".into(),
            field,
            rows: m.rows(),
            cols: m.cols(),
            entries: entries(m),
        }),
        Loaded::Morphism(m) => serde_json::to_value(MorphismDoc {
            kind: "morphism".into(),
            field,
            source: brace_body(&m.source),
            target: brace_body(&m.target),
            matrix: entries(&m.matrix),
        }),
    };
    v.expect("documents serialize to JSON")
}

/// Deterministic JSON text: two-space indentation, arrays of scalars on one line.
pub fn to_string(obj: &Loaded) -> String {
    let mut out = String::new();
    render(&document(obj), 0, &mut out);
    out.push('\n');
    out
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                render(x, indent + 2, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                render(x, indent + 2, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

pub fn save(obj: &Loaded, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_string(obj))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    const Q: Field = Field::Rational;

    fn round_trip(obj: Loaded) {
        let text = to_string(&obj);
        let back = load_str(&text).unwrap();
        assert_eq!(back, obj);
        assert_eq!(to_string(&back), text);
    }

    #[test]
    fn zoo_round_trips() {
        round_trip(zoo::cyclic_group_algebra(Q, 3).unwrap().into());
        round_trip(zoo::sweedler_h4(Field::Prime(5)).unwrap().into());
        round_trip(zoo::c3_c6_matched_pair(Q).unwrap().into());
        let mp = zoo::c3_c6_matched_pair(Q).unwrap();
        round_trip(mp.left().clone().into());
        round_trip(mp.right().clone().into());
        round_trip(crate::brace::make_opposite_brace(&zoo::symmetric_group_algebra(Q, 3).unwrap()).unwrap().into());
        let half = Q.fraction(-1, 2).unwrap();
        round_trip(SparseMatrix::from_triples(Q, 2, 3, [(1, 2, half)]).unwrap().into());
    }

    #[test]
    fn layout() {
        let text = to_string(&zoo::cyclic_group_algebra(Q, 2).unwrap().into());
        assert!(text.starts_with("{\n  \"kind\": \"hopf\",\n  \"field\": \"Q\",\n  \"dim\": 2,\n  \"labels\": [\"1\", \"g\"],"));
        assert!(text.contains("    [1, 1, \"1\"]"));
    }

    #[test]
    fn bad_coefficient_has_a_position() {
        let text = to_string(&zoo::cyclic_group_algebra(Q, 2).unwrap().into());
        let bad = text.replacen("[0, 0, \"1\"]", "[0, 0, \"1/0\"]", 1);
        match load_str(&bad) {
            Err(Error::Parse { line, column, message }) => {
                assert!(line > 1, "line {line}");
                assert!(column > 0);
                assert!(message.contains("1/0"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_keys_and_kinds() {
        let text = to_string(&zoo::cyclic_group_algebra(Q, 2).unwrap().into());
        let extra = text.replacen("\"dim\": 2,", "\"dim\": 2,\n  \"colour\": 1,", 1);
        assert!(matches!(load_str(&extra), Err(Error::Parse { .. })));
        let kind = text.replacen("\"hopf\"", "\"quasi\"", 1);
        assert!(matches!(load_str(&kind), Err(Error::Unknown { .. })));
        let shape = text.replacen("\"dim\": 2", "\"dim\": 3", 1);
        assert!(load_str(&shape).is_err());
        let field = text.replacen("\"Q\"", "\"Fp:4\"", 1);
        assert!(matches!(load_str(&field), Err(Error::InvalidField(_))));
    }

    #[test]
    fn prime_field_coefficients_are_reduced() {
        let m = SparseMatrix::from_triples(Field::Prime(7), 1, 1, [(0, 0, Field::Prime(7).int(3))]).unwrap();
        let text = to_string(&m.clone().into()).replace("\"3\"", "\"10\"");
        assert_eq!(load_str(&text).unwrap(), Loaded::Matrix(m));
        let zero_den = text.replace("\"10\"", "\"1/7\"");
        assert!(matches!(load_str(&zero_den), Err(Error::Parse { .. })));
    }
}
