//! JSON documents for Hopf presentations, fusion skeletons, fiber data,
//! module lists and group tables.
//!
//! Every document is an object with a `"kind"` field. Scalars are strings
//! `"p/q"` (or `"p"`) for rationals, and objects
//! `{"conductor": n, "coeffs": ["p/q", ...]}` for elements of `Q(ζ_n)` in the
//! power basis. Unknown fields are rejected. The exact layout of every kind is
//! documented in `docs/FORMAT.md`.

use std::fmt;
use std::path::Path;

use num_rational::BigRational;
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::examples::GroupTable;
use crate::fusion::{FiberData, FusionSkeleton};
use crate::hopf::{AlgebraPresentation, HopfPresentation};
use crate::matrix::Matrix;
use crate::repcat::ModuleRep;
use crate::scalar::{parse_rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Hopf {
        hopf: HopfPresentation,
        /// Optional human-readable names of the basis elements.
        labels: Option<Vec<String>>,
    },
    Fusion(FusionSkeleton),
    Fiber(FiberData),
    Modules {
        algebra_dim: usize,
        modules: Vec<ModuleRep>,
    },
    Group(GroupTable),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Hopf { .. } => "hopf",
            Document::Fusion(_) => "fusion",
            Document::Fiber(_) => "fiber",
            Document::Modules { .. } => "modules",
            Document::Group(_) => "group",
        }
    }

    fn wrong_kind(&self, want: &str) -> Error {
        Error::schema("kind", format!("expected a {want} document, found {}", self.kind()))
    }

    pub fn into_hopf(self) -> Result<HopfPresentation> {
        match self {
            Document::Hopf { hopf, .. } => Ok(hopf),
            other => Err(other.wrong_kind("hopf")),
        }
    }

    pub fn into_fusion(self) -> Result<FusionSkeleton> {
        match self {
            Document::Fusion(k) => Ok(k),
            other => Err(other.wrong_kind("fusion")),
        }
    }

    pub fn into_fiber(self) -> Result<FiberData> {
        match self {
            Document::Fiber(f) => Ok(f),
            other => Err(other.wrong_kind("fiber")),
        }
    }

    pub fn into_modules(self) -> Result<Vec<ModuleRep>> {
        match self {
            Document::Modules { modules, .. } => Ok(modules),
            other => Err(other.wrong_kind("modules")),
        }
    }

    pub fn into_group(self) -> Result<GroupTable> {
        match self {
            Document::Group(g) => Ok(g),
            other => Err(other.wrong_kind("group")),
        }
    }
}

const BAD_SCALAR: &str = "invalid scalar literal";

struct RawScalar(Scalar);

impl<'de> Deserialize<'de> for RawScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RawScalar;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string or a {conductor, coeffs} object")
            }

            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<RawScalar, E> {
                parse_rational(s)
                    .map(|q| RawScalar(Scalar::rational(q)))
                    .map_err(|m| E::custom(format!("{BAD_SCALAR} {s:?}: {m}")))
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<RawScalar, A::Error> {
                let mut conductor: Option<u32> = None;
                let mut coeffs: Option<Vec<String>> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "conductor" => conductor = Some(map.next_value()?),
                        "coeffs" => coeffs = Some(map.next_value()?),
                        other => return Err(de::Error::unknown_field(other, &["conductor", "coeffs"])),
                    }
                }
                let n = conductor.ok_or_else(|| de::Error::missing_field("conductor"))?;
                let cs = coeffs.ok_or_else(|| de::Error::missing_field("coeffs"))?;
                if n == 0 {
                    return Err(de::Error::custom("conductor must be positive"));
                }
                let degree = crate::scalar::field_degree(n);
                if cs.len() != degree {
                    return Err(de::Error::custom(format!(
                        "conductor {n} needs {degree} coefficients, got {}",
                        cs.len()
                    )));
                }
                let qs = cs
                    .iter()
                    .map(|s| parse_rational(s).map_err(|m| de::Error::custom(format!("{BAD_SCALAR} {s:?}: {m}"))))
                    .collect::<std::result::Result<Vec<BigRational>, _>>()?;
                Ok(RawScalar(Scalar::from_coeffs(n, qs)))
            }
        }
        d.deserialize_any(V)
    }
}

type Row = Vec<RawScalar>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAssoc {
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    matrix: Vec<Row>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTensorator {
    a: usize,
    b: usize,
    matrix: Vec<Row>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    #[serde(default)]
    label: Option<String>,
    dim: usize,
    action: Vec<Vec<Row>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHopf {
    #[allow(dead_code)]
    kind: String,
    dim: usize,
    #[serde(default)]
    labels: Option<Vec<String>>,
    mult: Vec<Vec<Row>>,
    unit: Row,
    comult: Vec<Vec<Row>>,
    counit: Row,
    antipode: Vec<Row>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFusion {
    #[allow(dead_code)]
    kind: String,
    simples: Vec<String>,
    unit: usize,
    fusion: Vec<Vec<Vec<u32>>>,
    assoc: Vec<RawAssoc>,
    dual: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFiber {
    #[allow(dead_code)]
    kind: String,
    dims: Vec<usize>,
    tensorator: Vec<RawTensorator>,
    iota: RawScalar,
    ev: Vec<Row>,
    coev: Vec<Row>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModules {
    #[allow(dead_code)]
    kind: String,
    algebra_dim: usize,
    modules: Vec<RawModule>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    #[allow(dead_code)]
    kind: String,
    order: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

enum RawDoc {
    Hopf(RawHopf),
    Fusion(RawFusion),
    Fiber(RawFiber),
    Modules(RawModules),
    Group(RawGroup),
}

fn scalars(row: Row) -> Vec<Scalar> {
    row.into_iter().map(|s| s.0).collect()
}

fn vector(field: &str, row: Row, len: usize) -> Result<Vec<Scalar>> {
    if row.len() != len {
        return Err(Error::schema(
            field,
            format!("expected {len} entries, found {}", row.len()),
        ));
    }
    Ok(scalars(row))
}

fn matrix(field: &str, rows: Vec<Row>, nrows: usize, ncols: usize) -> Result<Matrix> {
    if rows.len() != nrows {
        return Err(Error::schema(
            field,
            format!("expected {nrows} rows, found {}", rows.len()),
        ));
    }
    let mut entries = Vec::with_capacity(nrows * ncols);
    for (i, r) in rows.into_iter().enumerate() {
        entries.extend(vector(&format!("{field}[{i}]"), r, ncols)?);
    }
    Matrix::new(nrows, ncols, entries).map_err(|e| Error::schema(field, e.to_string()))
}

fn cube(field: &str, t: Vec<Vec<Row>>, n: usize) -> Result<Vec<Scalar>> {
    if t.len() != n {
        return Err(Error::schema(field, format!("expected {n} slices, found {}", t.len())));
    }
    let mut out = Vec::with_capacity(n * n * n);
    for (i, slice) in t.into_iter().enumerate() {
        out.extend(matrix(&format!("{field}[{i}]"), slice, n, n)?.into_entries());
    }
    Ok(out)
}

fn index(field: &str, x: usize, bound: usize) -> Result<usize> {
    if x >= bound {
        return Err(Error::schema(field, format!("index {x} out of range 0..{bound}")));
    }
    Ok(x)
}

fn convert(raw: RawDoc) -> Result<Document> {
    Ok(match raw {
        RawDoc::Hopf(RawHopf {
            dim,
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            ..
        }) => {
            if dim == 0 {
                return Err(Error::schema("dim", "must be positive"));
            }
            if let Some(l) = &labels {
                if l.len() != dim {
                    return Err(Error::schema(
                        "labels",
                        format!("expected {dim} labels, found {}", l.len()),
                    ));
                }
            }
            let hopf = HopfPresentation {
                alg: AlgebraPresentation {
                    dim,
                    mult: cube("mult", mult, dim)?,
                    unit: vector("unit", unit, dim)?,
                },
                comult: cube("comult", comult, dim)?,
                counit: vector("counit", counit, dim)?,
                antipode: matrix("antipode", antipode, dim, dim)?,
            };
            Document::Hopf { hopf, labels }
        }
        RawDoc::Fusion(RawFusion {
            simples,
            unit,
            fusion,
            assoc,
            dual,
            ..
        }) => {
            let r = simples.len();
            if r == 0 {
                return Err(Error::schema("simples", "at least one simple is required"));
            }
            index("unit", unit, r)?;
            if fusion.len() != r {
                return Err(Error::schema("fusion", format!("expected {r} slices")));
            }
            let mut n = Vec::with_capacity(r * r * r);
            for (a, slice) in fusion.into_iter().enumerate() {
                if slice.len() != r {
                    return Err(Error::schema(format!("fusion[{a}]"), format!("expected {r} rows")));
                }
                for (b, row) in slice.into_iter().enumerate() {
                    if row.len() != r {
                        return Err(Error::schema(
                            format!("fusion[{a}][{b}]"),
                            format!("expected {r} entries"),
                        ));
                    }
                    n.extend(row);
                }
            }
            if dual.len() != r {
                return Err(Error::schema("dual", format!("expected {r} entries")));
            }
            for (i, &d) in dual.iter().enumerate() {
                index(&format!("dual[{i}]"), d, r)?;
            }
            let mut k = FusionSkeleton {
                simples,
                unit,
                fusion: n,
                assoc: Vec::new(),
                dual,
            };
            let mut slots: Vec<Option<Matrix>> = vec![None; r.pow(4)];
            for (i, entry) in assoc.into_iter().enumerate() {
                let field = format!("assoc[{i}]");
                let key = [entry.a, entry.b, entry.c, entry.d];
                for x in key {
                    index(&field, x, r)?;
                }
                let [a, b, c, d] = key;
                let (rows, cols) = (k.right_dim(a, b, c, d), k.left_dim(a, b, c, d));
                let pos = ((a * r + b) * r + c) * r + d;
                if slots[pos].is_some() {
                    return Err(Error::schema(field, format!("duplicate F-symbol for {key:?}")));
                }
                if rows == 0 {
                    return Err(Error::schema(
                        field,
                        format!("F-symbol for {key:?} must be empty and is omitted"),
                    ));
                }
                slots[pos] = Some(matrix(&format!("{field}.matrix"), entry.matrix, rows, cols)?);
            }
            let mut out = Vec::with_capacity(r.pow(4));
            for (pos, slot) in slots.into_iter().enumerate() {
                let (a, b, c, d) = (pos / (r * r * r), pos / (r * r) % r, pos / r % r, pos % r);
                let (rows, cols) = (k.right_dim(a, b, c, d), k.left_dim(a, b, c, d));
                out.push(match slot {
                    Some(m) => m,
                    None if rows == 0 && cols == 0 => Matrix::zeros(0, 0),
                    None => {
                        return Err(Error::schema(
                            "assoc",
                            format!("missing F-symbol for {:?}", [a, b, c, d]),
                        ));
                    }
                });
            }
            k.assoc = out;
            Document::Fusion(k)
        }
        RawDoc::Fiber(RawFiber {
            dims,
            tensorator,
            iota,
            ev,
            coev,
            ..
        }) => {
            let r = dims.len();
            let mut slots: Vec<Option<Matrix>> = vec![None; r * r];
            for (i, entry) in tensorator.into_iter().enumerate() {
                let field = format!("tensorator[{i}]");
                let (a, b) = (index(&field, entry.a, r)?, index(&field, entry.b, r)?);
                if slots[a * r + b].is_some() {
                    return Err(Error::schema(field, format!("duplicate tensorator for ({a}, {b})")));
                }
                let n = dims[a] * dims[b];
                slots[a * r + b] = Some(matrix(&format!("{field}.matrix"), entry.matrix, n, n)?);
            }
            let tensorator = slots
                .into_iter()
                .enumerate()
                .map(|(x, s)| {
                    s.ok_or_else(|| Error::schema("tensorator", format!("missing entry for ({}, {})", x / r, x % r)))
                })
                .collect::<Result<_>>()?;
            if ev.len() != r || coev.len() != r {
                return Err(Error::schema(
                    if ev.len() != r { "ev" } else { "coev" },
                    format!("expected {r} entries"),
                ));
            }
            Document::Fiber(FiberData {
                dims,
                tensorator,
                iota: iota.0,
                ev: ev.into_iter().map(scalars).collect(),
                coev: coev.into_iter().map(scalars).collect(),
            })
        }
        RawDoc::Modules(RawModules {
            algebra_dim, modules, ..
        }) => {
            let modules = modules
                .into_iter()
                .enumerate()
                .map(|(m, raw)| {
                    let field = format!("modules[{m}].action");
                    if raw.action.len() != algebra_dim {
                        return Err(Error::schema(field, format!("expected {algebra_dim} matrices")));
                    }
                    let action = raw
                        .action
                        .into_iter()
                        .enumerate()
                        .map(|(i, rows)| matrix(&format!("{field}[{i}]"), rows, raw.dim, raw.dim))
                        .collect::<Result<_>>()?;
                    Ok(ModuleRep {
                        label: raw.label.unwrap_or_else(|| format!("V{m}")),
                        dim: raw.dim,
                        action,
                    })
                })
                .collect::<Result<_>>()?;
            Document::Modules { algebra_dim, modules }
        }
        RawDoc::Group(RawGroup {
            order,
            identity,
            table,
            inverse,
            ..
        }) => {
            if table.len() != order || table.iter().any(|r| r.len() != order) {
                return Err(Error::schema("table", format!("expected {order}x{order}")));
            }
            let g = GroupTable::new(order, table.concat(), inverse, identity)
                .map_err(|e| Error::schema("table", e.to_string()))?;
            Document::Group(g)
        }
    })
}

fn strip_location(msg: &str) -> String {
    match msg.find(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

/// Parses a document. Malformed JSON and bad scalar literals give
/// `Error::Parse` with a position; well-formed JSON that does not match the
/// schema gives `Error::Schema` naming the offending field.
pub fn parse(text: &str) -> Result<Document> {
    // First pass: syntax, and the discriminator.
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: strip_location(&e.to_string()),
    })?;
    let kind = match value.get("kind") {
        Some(Value::String(k)) => k.clone(),
        Some(_) => return Err(Error::schema("kind", "must be a string")),
        None if value.is_object() => return Err(Error::schema("kind", "missing field `kind`")),
        None => return Err(Error::schema("kind", "a document must be a JSON object")),
    };
    // Second pass streams from the text so that errors keep their position.
    let raw = match kind.as_str() {
        "hopf" => RawDoc::Hopf(typed(text)?),
        "fusion" => RawDoc::Fusion(typed(text)?),
        "fiber" => RawDoc::Fiber(typed(text)?),
        "modules" => RawDoc::Modules(typed(text)?),
        "group" => RawDoc::Group(typed(text)?),
        other => {
            return Err(Error::schema(
                "kind",
                format!("unknown kind {other:?}, expected one of hopf, fusion, fiber, modules, group"),
            ))
        }
    };
    convert(raw)
}

fn typed<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        let message = strip_location(&inner.to_string());
        if message.contains(BAD_SCALAR) {
            return Error::Parse {
                line: inner.line(),
                column: inner.column(),
                message,
            };
        }
        // The path of a missing field stops at its parent object.
        let field = match message.split('`').nth(1) {
            Some(f) if message.starts_with("missing field") && path != "." => format!("{path}.{f}"),
            Some(f) if message.starts_with("missing field") => f.to_string(),
            _ => path,
        };
        Error::Schema { field, message }
    })
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Document> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn write_file(path: impl AsRef<Path>, doc: &Document) -> Result<()> {
    std::fs::write(path, serialize(doc))?;
    Ok(())
}

fn scalar_value(s: &Scalar) -> Value {
    match s.as_rational() {
        Some(q) => Value::String(Scalar::to_rational_literal(q)),
        None => json!({
            "conductor": s.conductor(),
            "coeffs": s.coeffs().iter().map(Scalar::to_rational_literal).collect::<Vec<_>>(),
        }),
    }
}

fn row_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_value).collect())
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| row_value(m.row(i))).collect())
}

fn cube_value(t: &[Scalar], n: usize) -> Value {
    Value::Array(
        t.chunks(n * n)
            .map(|slice| Value::Array(slice.chunks(n).map(row_value).collect()))
            .collect(),
    )
}

fn to_value(doc: &Document) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), doc.kind().into());
    match doc {
        Document::Hopf { hopf, labels } => {
            let n = hopf.dim();
            m.insert("dim".into(), n.into());
            if let Some(l) = labels {
                m.insert("labels".into(), json!(l));
            }
            m.insert("mult".into(), cube_value(&hopf.alg.mult, n));
            m.insert("unit".into(), row_value(&hopf.alg.unit));
            m.insert("comult".into(), cube_value(&hopf.comult, n));
            m.insert("counit".into(), row_value(&hopf.counit));
            m.insert("antipode".into(), matrix_value(&hopf.antipode));
        }
        Document::Fusion(k) => {
            let r = k.rank();
            m.insert("simples".into(), json!(k.simples));
            m.insert("unit".into(), k.unit.into());
            let fusion: Vec<Vec<Vec<u32>>> = k
                .fusion
                .chunks(r * r)
                .map(|s| s.chunks(r).map(<[u32]>::to_vec).collect())
                .collect();
            m.insert("fusion".into(), json!(fusion));
            let assoc: Vec<Value> = k
                .assoc
                .iter()
                .enumerate()
                .filter(|(_, f)| f.rows() > 0)
                .map(|(pos, f)| {
                    json!({
                        "a": pos / (r * r * r),
                        "b": pos / (r * r) % r,
                        "c": pos / r % r,
                        "d": pos % r,
                        "matrix": matrix_value(f),
                    })
                })
                .collect();
            m.insert("assoc".into(), Value::Array(assoc));
            m.insert("dual".into(), json!(k.dual));
        }
        Document::Fiber(phi) => {
            let r = phi.rank();
            m.insert("dims".into(), json!(phi.dims));
            let tensorator: Vec<Value> = phi
                .tensorator
                .iter()
                .enumerate()
                .map(|(x, j)| json!({ "a": x / r, "b": x % r, "matrix": matrix_value(j) }))
                .collect();
            m.insert("tensorator".into(), Value::Array(tensorator));
            m.insert("iota".into(), scalar_value(&phi.iota));
            m.insert("ev".into(), Value::Array(phi.ev.iter().map(|v| row_value(v)).collect()));
            m.insert(
                "coev".into(),
                Value::Array(phi.coev.iter().map(|v| row_value(v)).collect()),
            );
        }
        Document::Modules { algebra_dim, modules } => {
            m.insert("algebra_dim".into(), (*algebra_dim).into());
            let mods: Vec<Value> = modules
                .iter()
                .map(|md| {
                    json!({
                        "label": md.label,
                        "dim": md.dim,
                        "action": md.action.iter().map(matrix_value).collect::<Vec<_>>(),
                    })
                })
                .collect();
            m.insert("modules".into(), Value::Array(mods));
        }
        Document::Group(g) => {
            let n = g.order();
            m.insert("order".into(), n.into());
            m.insert("identity".into(), g.identity().into());
            m.insert("table".into(), json!(g.table().chunks(n).collect::<Vec<_>>()));
            m.insert("inverse".into(), json!(g.inverses()));
        }
    }
    Value::Object(m)
}

fn is_primitive(v: &Value) -> bool {
    !v.is_array() && !v.is_object()
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(is_primitive),
        _ => is_primitive(v),
    }
}

/// Arrays of scalars and scalar objects are written on one line.
fn is_inline(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| is_primitive(x) || (x.is_object() && is_inline(x))),
        Value::Object(m) => m.values().all(is_flat),
        _ => true,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    if is_inline(v) {
        out.push_str(&compact(v));
        return;
    }
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        _ => unreachable!("primitives are inline"),
    }
}

/// Single-line JSON with a space after separators.
fn compact(v: &Value) -> String {
    match v {
        Value::Array(xs) => format!("[{}]", xs.iter().map(compact).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => format!(
            "{{{}}}",
            m.iter()
                .map(|(k, x)| format!("{}: {}", Value::String(k.clone()), compact(x)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        _ => v.to_string(),
    }
}

/// Deterministic pretty JSON, ending in a newline.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    write_value(&to_value(doc), 0, &mut out);
    out.push('\n');
    out
}
