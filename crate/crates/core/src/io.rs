//! JSON documents for the core types.
//!
//! Every document is an object with a `kind` and a `format_version`; cells
//! and morphisms are referred to by identifier. Serialization sorts object
//! keys and composition tables, so equal values give identical bytes.

use crate::doublecat::{DoubleFunctor, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::examples::{CobordismCaps, Graph, PartialMonoid};
use crate::simplicial::{FiniteCategory, SimplicialMap, TruncatedSimplicialSet};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

pub const FORMAT_VERSION: u64 = 1;

/// Whether unknown fields are errors or warnings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Strict,
    Lenient,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub cells: Vec<String>,
    /// `faces[i][k]` is `d_i` of the `k`-th cell.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub faces: Vec<Vec<String>>,
    /// `degeneracies[i][k]` is `s_i` of the `k`-th cell.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degeneracies: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialDoc {
    pub dim: usize,
    pub levels: Vec<LevelDoc>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub morphisms: Vec<MorphismDoc>,
    /// Object to identity morphism.
    pub identities: BTreeMap<String, String>,
    /// Triples `[f, g, f;g]`.
    pub composition: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDoc {
    pub id: String,
    pub top: String,
    pub bottom: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleDoc {
    pub objects: Vec<String>,
    pub horizontal: CategoryDoc,
    pub vertical: CategoryDoc,
    pub squares: Vec<SquareDoc>,
    pub horizontal_composition: Vec<[String; 3]>,
    pub vertical_composition: Vec<[String; 3]>,
    /// Vertical morphism to its horizontal identity square.
    pub horizontal_identities: BTreeMap<String, String>,
    /// Horizontal morphism to its vertical identity square.
    pub vertical_identities: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialMapDoc {
    /// A path relative to the map document, or an inline document.
    pub source: Value,
    pub target: Value,
    pub components: Vec<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleFunctorDoc {
    pub source: Value,
    pub target: Value,
    pub objects: BTreeMap<String, String>,
    pub horizontal: BTreeMap<String, String>,
    pub vertical: BTreeMap<String, String>,
    pub squares: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialMonoidDoc {
    pub elements: Vec<String>,
    pub unit: String,
    /// Triples `[a, b, ab]`; products with the unit may be omitted.
    #[serde(default)]
    pub products: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CobordismDoc {
    pub max_circles: usize,
    pub max_components: usize,
    pub genus_bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
}

/// A parsed document.
#[derive(Clone, Debug)]
pub enum Document {
    Simplicial(TruncatedSimplicialSet),
    Double(FiniteDoubleCategory, Option<Vec<usize>>),
    SimplicialMap {
        map: SimplicialMap,
        source: TruncatedSimplicialSet,
        target: TruncatedSimplicialSet,
    },
    DoubleFunctor {
        functor: DoubleFunctor,
        source: (FiniteDoubleCategory, Option<Vec<usize>>),
        target: (FiniteDoubleCategory, Option<Vec<usize>>),
    },
    PartialMonoid(PartialMonoid, Option<usize>),
    Graph(Graph, Option<usize>),
    Cobordism(CobordismCaps, Option<usize>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Simplicial(_) => "simplicial_set",
            Document::Double(..) => "double_category",
            Document::SimplicialMap { .. } => "simplicial_map",
            Document::DoubleFunctor { .. } => "double_functor",
            Document::PartialMonoid(..) => "partial_monoid",
            Document::Graph(..) => "graph",
            Document::Cobordism(..) => "cobordism",
        }
    }
}

/// A parsed document with the warnings collected in lenient mode.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub document: Document,
    pub warnings: Vec<String>,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn typed<T: DeserializeOwned>(value: Value, mode: Mode, warnings: &mut Vec<String>, what: &str) -> Result<T> {
    let mut unknown = Vec::new();
    let out: T = serde_ignored::deserialize(value, |path| unknown.push(path.to_string()))
        .map_err(|e| malformed(format!("{what}: {e}")))?;
    for path in unknown {
        match mode {
            Mode::Strict => return Err(malformed(format!("{what}: unknown field {path}"))),
            Mode::Lenient => warnings.push(format!("{what}: ignored unknown field {path}")),
        }
    }
    Ok(out)
}

/// Parses a document. `base` resolves relative file references; `expected`
/// supplies the kind when the document has none and must match it otherwise.
pub fn parse_document(text: &str, base: Option<&Path>, mode: Mode, expected: Option<&str>) -> Result<Parsed> {
    let value: Value = serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let mut warnings = Vec::new();
    let document = parse_value(value, base, mode, expected, &mut warnings, 0)?;
    Ok(Parsed { document, warnings })
}

/// Reads and parses a document; `-` reads standard input.
pub fn read_document(path: &str, mode: Mode, expected: Option<&str>) -> Result<Parsed> {
    let (text, base) = if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Error::Argument(format!("cannot read standard input: {e}")))?;
        (s, None)
    } else {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Argument(format!("cannot read {path}: {e}")))?;
        (text, Path::new(path).parent().map(Path::to_path_buf))
    };
    parse_document(&text, base.as_deref(), mode, expected)
}

fn parse_value(
    value: Value,
    base: Option<&Path>,
    mode: Mode,
    expected: Option<&str>,
    warnings: &mut Vec<String>,
    depth: usize,
) -> Result<Document> {
    if depth > 8 {
        return Err(malformed("document references nest too deeply"));
    }
    let Value::Object(mut obj) = value else { return Err(malformed("a document must be a JSON object")) };
    match obj.remove("format_version") {
        None => {}
        Some(Value::Number(n)) if n.as_u64() == Some(FORMAT_VERSION) => {}
        Some(v) => return Err(malformed(format!("unsupported format_version {v} (expected {FORMAT_VERSION})"))),
    }
    let kind = match (obj.remove("kind"), expected) {
        (Some(Value::String(k)), Some(e)) if k != e => {
            return Err(malformed(format!("expected a {e} document, found {k}")));
        }
        (Some(Value::String(k)), _) => k,
        (None, Some(e)) => e.to_string(),
        (Some(_), _) => return Err(malformed("kind must be a string")),
        (None, None) => return Err(malformed("missing field kind")),
    };
    let value = Value::Object(obj);
    Ok(match kind.as_str() {
        "simplicial_set" => Document::Simplicial(simplicial_from_doc(&typed(value, mode, warnings, &kind)?)?),
        "double_category" => {
            let (d, a) = double_from_doc(&typed(value, mode, warnings, &kind)?)?;
            Document::Double(d, a)
        }
        "simplicial_map" => {
            let doc: SimplicialMapDoc = typed(value, mode, warnings, &kind)?;
            let source = resolve_simplicial(&doc.source, base, mode, warnings, depth)?;
            let target = resolve_simplicial(&doc.target, base, mode, warnings, depth)?;
            let map = simplicial_map_from_doc(&doc.components, &source, &target)?;
            Document::SimplicialMap { map, source, target }
        }
        "double_functor" => {
            let doc: DoubleFunctorDoc = typed(value, mode, warnings, &kind)?;
            let source = resolve_double(&doc.source, base, mode, warnings, depth)?;
            let target = resolve_double(&doc.target, base, mode, warnings, depth)?;
            let functor = double_functor_from_doc(&doc, &source.0, &target.0)?;
            Document::DoubleFunctor { functor, source, target }
        }
        "partial_monoid" => {
            let doc: PartialMonoidDoc = typed(value, mode, warnings, &kind)?;
            let triples: Vec<(String, String, String)> =
                doc.products.iter().map(|[a, b, c]| (a.clone(), b.clone(), c.clone())).collect();
            let m = PartialMonoid::with_units(&doc.elements, &doc.unit, &triples)?;
            Document::PartialMonoid(m, doc.truncation)
        }
        "graph" => {
            let doc: GraphDoc = typed(value, mode, warnings, &kind)?;
            let edges: Vec<(String, String)> = doc.edges.iter().map(|[a, b]| (a.clone(), b.clone())).collect();
            Document::Graph(Graph::new(&doc.vertices, &edges)?, doc.truncation)
        }
        "cobordism" => {
            let doc: CobordismDoc = typed(value, mode, warnings, &kind)?;
            let caps = CobordismCaps {
                max_circles: doc.max_circles,
                max_components: doc.max_components,
                genus: doc.genus_bound,
            };
            Document::Cobordism(caps, doc.truncation)
        }
        other => return Err(malformed(format!("unknown document kind {other:?}"))),
    })
}

fn resolve(
    r: &Value,
    base: Option<&Path>,
    mode: Mode,
    expected: &str,
    warnings: &mut Vec<String>,
    depth: usize,
) -> Result<Document> {
    match r {
        Value::String(p) => {
            let path: PathBuf = match base {
                Some(b) if Path::new(p).is_relative() => b.join(p),
                _ => PathBuf::from(p),
            };
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| malformed(format!("invalid JSON in {}: {e}", path.display())))?;
            parse_value(value, path.parent(), mode, Some(expected), warnings, depth + 1)
        }
        Value::Object(_) => parse_value(r.clone(), base, mode, Some(expected), warnings, depth + 1),
        _ => Err(malformed("a reference must be a path or an inline document")),
    }
}

fn resolve_simplicial(
    r: &Value,
    base: Option<&Path>,
    mode: Mode,
    warnings: &mut Vec<String>,
    depth: usize,
) -> Result<TruncatedSimplicialSet> {
    match resolve(r, base, mode, "simplicial_set", warnings, depth)? {
        Document::Simplicial(x) => Ok(x),
        _ => unreachable!("kind checked by resolve"),
    }
}

fn resolve_double(
    r: &Value,
    base: Option<&Path>,
    mode: Mode,
    warnings: &mut Vec<String>,
    depth: usize,
) -> Result<(FiniteDoubleCategory, Option<Vec<usize>>)> {
    match resolve(r, base, mode, "double_category", warnings, depth)? {
        Document::Double(d, a) => Ok((d, a)),
        _ => unreachable!("kind checked by resolve"),
    }
}

fn index_of<'a>(ids: &'a [String], what: &str) -> Result<HashMap<&'a str, usize>> {
    let mut m = HashMap::with_capacity(ids.len());
    for (k, id) in ids.iter().enumerate() {
        if m.insert(id.as_str(), k).is_some() {
            return Err(malformed(format!("duplicate {what} {id:?}")));
        }
    }
    Ok(m)
}

fn look(index: &HashMap<&str, usize>, id: &str, what: &str) -> Result<usize> {
    index.get(id).copied().ok_or_else(|| malformed(format!("unknown {what} {id:?}")))
}

pub fn simplicial_to_doc(x: &TruncatedSimplicialSet) -> SimplicialDoc {
    let dim = x.dim();
    let levels = (0..=dim)
        .map(|n| {
            let ids = |m: usize, f: &dyn Fn(usize) -> usize| -> Vec<String> {
                (0..x.len(n)).map(|c| x.id(m, f(c)).to_string()).collect()
            };
            LevelDoc {
                cells: x.cells(n).to_vec(),
                faces: if n == 0 { Vec::new() } else { (0..=n).map(|i| ids(n - 1, &|c| x.face(n, i, c))).collect() },
                degeneracies: if n == dim {
                    Vec::new()
                } else {
                    (0..=n).map(|i| ids(n + 1, &|c| x.degen(n, i, c))).collect()
                },
            }
        })
        .collect();
    SimplicialDoc { dim, levels }
}

pub fn simplicial_from_doc(doc: &SimplicialDoc) -> Result<TruncatedSimplicialSet> {
    let dim = doc.dim;
    if doc.levels.len() != dim + 1 {
        return Err(malformed(format!("dim {dim} needs {} levels, found {}", dim + 1, doc.levels.len())));
    }
    let indices: Vec<HashMap<&str, usize>> =
        doc.levels.iter().enumerate().map(|(n, l)| index_of(&l.cells, &format!("{n}-cell"))).collect::<Result<_>>()?;
    let table = |n: usize, rows: &[Vec<String>], to: usize, what: &str| -> Result<Vec<Vec<usize>>> {
        if rows.len() != n + 1 {
            return Err(malformed(format!("level {n} needs {} {what} lists, found {}", n + 1, rows.len())));
        }
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != doc.levels[n].cells.len() {
                    return Err(malformed(format!("{what} {i} on level {n} has {} entries", row.len())));
                }
                row.iter().map(|id| look(&indices[to], id, &format!("{to}-cell"))).collect()
            })
            .collect()
    };
    let mut face = vec![Vec::new()];
    let mut degen = Vec::new();
    for (n, level) in doc.levels.iter().enumerate() {
        if n == 0 && !level.faces.is_empty() {
            return Err(malformed("level 0 has no faces"));
        }
        if n > 0 {
            face.push(table(n, &level.faces, n - 1, "face")?);
        }
        if n < dim {
            degen.push(table(n, &level.degeneracies, n + 1, "degeneracy")?);
        } else if !level.degeneracies.is_empty() {
            return Err(malformed("the top level has no degeneracies"));
        }
    }
    let cells = doc.levels.iter().map(|l| l.cells.clone()).collect();
    TruncatedSimplicialSet::from_tables(dim, cells, face, degen)
}

fn category_to_doc(c: &FiniteCategory) -> CategoryDoc {
    let m = |k: usize| c.morphisms[k].clone();
    let mut composition: Vec<[String; 3]> = c.compose.iter().map(|(&(f, g), &h)| [m(f), m(g), m(h)]).collect();
    composition.sort();
    CategoryDoc {
        morphisms: (0..c.morphisms.len())
            .map(|k| MorphismDoc { id: m(k), src: c.objects[c.src[k]].clone(), tgt: c.objects[c.tgt[k]].clone() })
            .collect(),
        identities: c.objects.iter().zip(&c.identity).map(|(o, &k)| (o.clone(), m(k))).collect(),
        composition,
    }
}

fn category_from_doc(objects: &[String], doc: &CategoryDoc, what: &str) -> Result<FiniteCategory> {
    let oi = index_of(objects, "object")?;
    let morphisms: Vec<String> = doc.morphisms.iter().map(|m| m.id.clone()).collect();
    let mi = index_of(&morphisms, &format!("{what} morphism"))?;
    let mw = format!("{what} morphism");
    let mut identity = Vec::with_capacity(objects.len());
    for o in objects {
        let id = doc.identities.get(o).ok_or_else(|| malformed(format!("{o:?} has no {what} identity")))?;
        identity.push(look(&mi, id, &mw)?);
    }
    if doc.identities.len() != objects.len() {
        return Err(malformed(format!("{what} identities name unknown objects")));
    }
    let mut compose = HashMap::new();
    for [f, g, h] in &doc.composition {
        let key = (look(&mi, f, &mw)?, look(&mi, g, &mw)?);
        if compose.insert(key, look(&mi, h, &mw)?).is_some() {
            return Err(malformed(format!("two {what} composites of {f:?} and {g:?}")));
        }
    }
    Ok(FiniteCategory {
        objects: objects.to_vec(),
        morphisms,
        src: doc.morphisms.iter().map(|m| look(&oi, &m.src, "object")).collect::<Result<_>>()?,
        tgt: doc.morphisms.iter().map(|m| look(&oi, &m.tgt, "object")).collect::<Result<_>>()?,
        identity,
        compose,
    })
}

pub fn double_to_doc(d: &FiniteDoubleCategory, a: Option<&[usize]>) -> DoubleDoc {
    let sq = |k: usize| d.squares[k].clone();
    let table = |t: &HashMap<(usize, usize), usize>| {
        let mut v: Vec<[String; 3]> = t.iter().map(|(&(x, y), &z)| [sq(x), sq(y), sq(z)]).collect();
        v.sort();
        v
    };
    DoubleDoc {
        objects: d.objects().to_vec(),
        horizontal: category_to_doc(&d.hor),
        vertical: category_to_doc(&d.ver),
        squares: (0..d.squares.len())
            .map(|k| SquareDoc {
                id: sq(k),
                top: d.hor.morphisms[d.s_v[k]].clone(),
                bottom: d.hor.morphisms[d.t_v[k]].clone(),
                left: d.ver.morphisms[d.s_h[k]].clone(),
                right: d.ver.morphisms[d.t_h[k]].clone(),
            })
            .collect(),
        horizontal_composition: table(&d.comp_h),
        vertical_composition: table(&d.comp_v),
        horizontal_identities: d.ver.morphisms.iter().zip(&d.id_h).map(|(v, &s)| (v.clone(), sq(s))).collect(),
        vertical_identities: d.hor.morphisms.iter().zip(&d.id_v).map(|(h, &s)| (h.clone(), sq(s))).collect(),
        augmentation: a.map(|a| a.iter().map(|&o| d.objects()[o].clone()).collect()),
    }
}

pub fn double_from_doc(doc: &DoubleDoc) -> Result<(FiniteDoubleCategory, Option<Vec<usize>>)> {
    let hor = category_from_doc(&doc.objects, &doc.horizontal, "horizontal")?;
    let ver = category_from_doc(&doc.objects, &doc.vertical, "vertical")?;
    let (hi, vi) = (index_of(&hor.morphisms, "horizontal morphism")?, index_of(&ver.morphisms, "vertical morphism")?);
    let squares: Vec<String> = doc.squares.iter().map(|s| s.id.clone()).collect();
    let si = index_of(&squares, "square")?;
    let side = |f: fn(&SquareDoc) -> &String, idx: &HashMap<&str, usize>, what: &str| -> Result<Vec<usize>> {
        doc.squares.iter().map(|s| look(idx, f(s), what)).collect()
    };
    let table = |rows: &[[String; 3]], what: &str| -> Result<HashMap<(usize, usize), usize>> {
        let mut t = HashMap::new();
        for [x, y, z] in rows {
            let key = (look(&si, x, "square")?, look(&si, y, "square")?);
            if t.insert(key, look(&si, z, "square")?).is_some() {
                return Err(malformed(format!("two {what} composites of {x:?} and {y:?}")));
            }
        }
        Ok(t)
    };
    let ids = |m: &BTreeMap<String, String>, morphisms: &[String], what: &str| -> Result<Vec<usize>> {
        if m.len() != morphisms.len() {
            return Err(malformed(format!("{what} identity squares must be given for every morphism exactly once")));
        }
        morphisms
            .iter()
            .map(|f| {
                let s = m.get(f).ok_or_else(|| malformed(format!("{f:?} has no {what} identity square")))?;
                look(&si, s, "square")
            })
            .collect()
    };
    let oi = index_of(&doc.objects, "object")?;
    let aug = match &doc.augmentation {
        None => None,
        Some(a) => Some(a.iter().map(|o| look(&oi, o, "object")).collect::<Result<Vec<_>>>()?),
    };
    let d = FiniteDoubleCategory {
        s_v: side(|s| &s.top, &hi, "horizontal morphism")?,
        t_v: side(|s| &s.bottom, &hi, "horizontal morphism")?,
        s_h: side(|s| &s.left, &vi, "vertical morphism")?,
        t_h: side(|s| &s.right, &vi, "vertical morphism")?,
        comp_h: table(&doc.horizontal_composition, "horizontal")?,
        comp_v: table(&doc.vertical_composition, "vertical")?,
        id_h: ids(&doc.horizontal_identities, &ver.morphisms, "horizontal")?,
        id_v: ids(&doc.vertical_identities, &hor.morphisms, "vertical")?,
        squares,
        hor,
        ver,
    };
    Ok((d, aug))
}

pub fn simplicial_map_to_components(
    f: &SimplicialMap,
    src: &TruncatedSimplicialSet,
    tgt: &TruncatedSimplicialSet,
) -> Vec<BTreeMap<String, String>> {
    f.components
        .iter()
        .enumerate()
        .map(|(n, comp)| comp.iter().enumerate().map(|(x, &y)| (src.id(n, x).to_string(), tgt.id(n, y).to_string())).collect())
        .collect()
}

fn simplicial_map_from_doc(
    components: &[BTreeMap<String, String>],
    src: &TruncatedSimplicialSet,
    tgt: &TruncatedSimplicialSet,
) -> Result<SimplicialMap> {
    if components.is_empty() || components.len() > src.dim().min(tgt.dim()) + 1 {
        return Err(malformed(format!("a map needs between 1 and {} components", src.dim().min(tgt.dim()) + 1)));
    }
    for (n, c) in components.iter().enumerate() {
        if c.len() != src.len(n) {
            return Err(malformed(format!("component {n} maps {} of {} cells", c.len(), src.len(n))));
        }
    }
    SimplicialMap::from_ids(src, tgt, components.len() - 1, |n, id| {
        components[n].get(id).cloned().ok_or_else(|| malformed(format!("component {n} misses {id:?}")))
    })
    .map_err(|e| match e {
        Error::Incompatible(m) => malformed(m),
        other => other,
    })
}

fn double_functor_from_doc(
    doc: &DoubleFunctorDoc,
    src: &FiniteDoubleCategory,
    tgt: &FiniteDoubleCategory,
) -> Result<DoubleFunctor> {
    let part = |m: &BTreeMap<String, String>, from: &[String], to: &[String], what: &str| -> Result<Vec<usize>> {
        let ti = index_of(to, what)?;
        if m.len() != from.len() {
            return Err(malformed(format!("the {what} component maps {} of {} cells", m.len(), from.len())));
        }
        from.iter()
            .map(|x| {
                let y = m.get(x).ok_or_else(|| malformed(format!("the {what} component misses {x:?}")))?;
                look(&ti, y, what)
            })
            .collect()
    };
    Ok(DoubleFunctor {
        obj: part(&doc.objects, src.objects(), tgt.objects(), "object")?,
        hor: part(&doc.horizontal, &src.hor.morphisms, &tgt.hor.morphisms, "horizontal morphism")?,
        ver: part(&doc.vertical, &src.ver.morphisms, &tgt.ver.morphisms, "vertical morphism")?,
        sq: part(&doc.squares, &src.squares, &tgt.squares, "square")?,
    })
}

pub fn double_functor_parts(
    f: &DoubleFunctor,
    src: &FiniteDoubleCategory,
    tgt: &FiniteDoubleCategory,
) -> [BTreeMap<String, String>; 4] {
    let part = |m: &[usize], from: &[String], to: &[String]| -> BTreeMap<String, String> {
        m.iter().enumerate().map(|(x, &y)| (from[x].clone(), to[y].clone())).collect()
    };
    [
        part(&f.obj, src.objects(), tgt.objects()),
        part(&f.hor, &src.hor.morphisms, &tgt.hor.morphisms),
        part(&f.ver, &src.ver.morphisms, &tgt.ver.morphisms),
        part(&f.sq, &src.squares, &tgt.squares),
    ]
}

/// Wraps a serializable body into a document of the given kind.
pub fn envelope<T: Serialize>(kind: &str, body: &T) -> Value {
    let mut obj = match serde_json::to_value(body).expect("document bodies serialize") {
        Value::Object(m) => m,
        _ => Map::new(),
    };
    obj.insert("kind".into(), Value::String(kind.into()));
    obj.insert("format_version".into(), Value::from(FORMAT_VERSION));
    Value::Object(obj)
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

pub fn simplicial_to_string(x: &TruncatedSimplicialSet) -> String {
    render(&envelope("simplicial_set", &simplicial_to_doc(x)))
}

pub fn double_to_string(d: &FiniteDoubleCategory, a: Option<&[usize]>) -> String {
    render(&envelope("double_category", &double_to_doc(d, a)))
}

/// A simplicial map document with inline source and target.
pub fn simplicial_map_to_string(f: &SimplicialMap, src: &TruncatedSimplicialSet, tgt: &TruncatedSimplicialSet) -> String {
    let doc = SimplicialMapDoc {
        source: envelope("simplicial_set", &simplicial_to_doc(src)),
        target: envelope("simplicial_set", &simplicial_to_doc(tgt)),
        components: simplicial_map_to_components(f, src, tgt),
    };
    render(&envelope("simplicial_map", &doc))
}

/// A double functor document with inline source and target.
pub fn double_functor_to_string(
    f: &DoubleFunctor,
    src: (&FiniteDoubleCategory, Option<&[usize]>),
    tgt: (&FiniteDoubleCategory, Option<&[usize]>),
) -> String {
    let [objects, horizontal, vertical, squares] = double_functor_parts(f, src.0, tgt.0);
    let doc = DoubleFunctorDoc {
        source: envelope("double_category", &double_to_doc(src.0, src.1)),
        target: envelope("double_category", &double_to_doc(tgt.0, tgt.1)),
        objects,
        horizontal,
        vertical,
        squares,
    };
    render(&envelope("double_functor", &doc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::build_w;
    use crate::simplicial::{nerve, FiniteCategory};

    fn parse(text: &str) -> Document {
        parse_document(text, None, Mode::Strict, None).unwrap().document
    }

    #[test]
    fn simplicial_round_trip() {
        let x = nerve(&FiniteCategory::ordinal(2), 3).unwrap();
        let text = simplicial_to_string(&x);
        match parse(&text) {
            Document::Simplicial(y) => assert_eq!(x, y),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn point_round_trips() {
        let text = r#"{"kind":"simplicial_set","format_version":1,"dim":0,"levels":[{"cells":["*"]}]}"#;
        let Document::Simplicial(x) = parse(text) else { panic!() };
        assert_eq!(x.level_sizes(), vec![1]);
        let Document::Simplicial(y) = parse(&simplicial_to_string(&x)) else { panic!() };
        assert_eq!(x, y);
    }

    #[test]
    fn double_round_trip() {
        let (w, a) = build_w(2);
        let text = double_to_string(&w, Some(&a));
        let Document::Double(d, b) = parse(&text) else { panic!() };
        assert_eq!(d, w);
        assert_eq!(b, Some(a.clone()));
        assert_eq!(double_to_string(&d, b.as_deref()), text);
    }

    #[test]
    fn strict_and_lenient() {
        let text = r#"{"kind":"graph","vertices":["a"],"colour":"red"}"#;
        let err = parse_document(text, None, Mode::Strict, None).unwrap_err();
        assert!(err.to_string().contains("colour"), "{err}");
        let p = parse_document(text, None, Mode::Lenient, None).unwrap();
        assert_eq!(p.warnings.len(), 1);
        assert!(matches!(p.document, Document::Graph(..)));
    }

    #[test]
    fn version_and_syntax_errors() {
        let err = parse_document(r#"{"kind":"graph","format_version":2,"vertices":[]}"#, None, Mode::Strict, None)
            .unwrap_err();
        assert!(err.to_string().contains("format_version"));
        let err = parse_document("{\n  \"kind\": ", None, Mode::Strict, None).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn cobordism_config_uses_camel_case() {
        let text = r#"{"maxCircles":2,"maxComponents":1,"genusBound":0,"truncation":3}"#;
        let p = parse_document(text, None, Mode::Strict, Some("cobordism")).unwrap();
        let Document::Cobordism(c, t) = p.document else { panic!() };
        assert_eq!((c.max_circles, c.max_components, c.genus, t), (2, 1, 0, Some(3)));
    }
}
