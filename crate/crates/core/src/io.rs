//! JSON documents for categories, functors, transformations and modifications.
//!
//! One schema for all kinds, discriminated by `kind`. Maps are `BTreeMap`s so
//! output is canonical. Composition entries implied by the unit law are left out
//! unless explicitly requested and are filled back in on load.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cat::{Cell, NCat};
use crate::error::CatError;
use crate::morphism::{validate_functor, Morphism};
use crate::transf::{validate_transf2, validate_transf3, Transf2, Transf3};
use crate::validate::{validate, Report};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("schema: {0}")]
    Schema(String),
    #[error("{what} is invalid:\n{report}")]
    Invalid { what: String, report: Report },
    #[error(transparent)]
    Cat(#[from] CatError),
}

pub type IoRes<T> = Result<T, IoError>;

type Dims = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatDoc {
    pub kind: String,
    pub dim: usize,
    pub cells: Vec<Vec<String>>,
    #[serde(default)]
    pub src: Dims,
    #[serde(default)]
    pub tgt: Dims,
    #[serde(default)]
    pub id: Dims,
    #[serde(default)]
    pub comp: Dims,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
}

/// Either an inline document or a path relative to the referring file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Path(String),
    Inline(Box<T>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorDoc {
    pub kind: String,
    pub dom: Ref<CatDoc>,
    pub cod: Ref<CatDoc>,
    pub map: Dims,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransfDoc {
    pub kind: String,
    pub src: Ref<serde_json::Value>,
    pub tgt: Ref<serde_json::Value>,
    pub comp: Dims,
}

/// A loaded value of any kind.
#[derive(Clone, Debug)]
pub enum Value {
    Cat(Arc<NCat>),
    Mor(Morphism),
    Transf2(Transf2),
    Transf3(Transf3),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Cat(_) => "ncat",
            Value::Mor(_) => "morphism",
            Value::Transf2(_) => "transf2",
            Value::Transf3(_) => "transf3",
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub no_validate: bool,
    pub explicit_identities: bool,
}

fn schema(msg: impl Into<String>) -> IoError {
    IoError::Schema(msg.into())
}

fn dim_key(k: usize) -> String {
    k.to_string()
}

fn comp_key(m: usize, k: usize) -> String {
    format!("{m},{k}")
}

// ----- categories -----

pub fn cat_to_doc(c: &NCat, opts: Options) -> CatDoc {
    let n = c.n();
    let mut d = CatDoc {
        kind: "ncat".into(),
        dim: n,
        cells: (0..=n).map(|k| c.names(k).to_vec()).collect(),
        src: Dims::new(),
        tgt: Dims::new(),
        id: Dims::new(),
        comp: Dims::new(),
        point: c.point().map(|p| c.name(p).to_string()),
    };
    for k in 1..=n {
        let s = c.cells(k).map(|x| (c.name(x).to_string(), c.name(c.src(x)).to_string())).collect();
        let t = c.cells(k).map(|x| (c.name(x).to_string(), c.name(c.tgt(x)).to_string())).collect();
        d.src.insert(dim_key(k), s);
        d.tgt.insert(dim_key(k), t);
    }
    for k in 0..n {
        let e = c.cells(k).filter_map(|x| Some((c.name(x).to_string(), c.name(c.unit_opt(x)?).to_string()))).collect();
        d.id.insert(dim_key(k), e);
    }
    for k in 1..=n {
        for m in 0..k {
            let mut t = BTreeMap::new();
            for (a, b, r) in c.comp_entries(k, m) {
                if !opts.explicit_identities && c.identities_complete() && c.is_unit_entry(m, a, b, r) {
                    continue;
                }
                t.insert(format!("{}|{}", c.name(a), c.name(b)), c.name(r).to_string());
            }
            if !t.is_empty() {
                d.comp.insert(comp_key(m, k), t);
            }
        }
    }
    d
}

fn lookup(c: &NCat, dim: usize, name: &str, ctx: &str) -> IoRes<Cell> {
    c.find(dim, name).ok_or_else(|| schema(format!("{ctx}: unknown {dim}-cell {name:?}")))
}

/// Splits `"a|b"` at the bar where both halves are `k`-cells.
fn split_pair(c: &NCat, k: usize, key: &str, ctx: &str) -> IoRes<(Cell, Cell)> {
    let hits: Vec<(Cell, Cell)> =
        key.match_indices('|').filter_map(|(i, _)| Some((c.find(k, &key[..i])?, c.find(k, &key[i + 1..])?))).collect();
    match hits.as_slice() {
        [one] => Ok(*one),
        [] => Err(schema(format!("{ctx}: entry {key:?} does not name two {k}-cells"))),
        _ => Err(schema(format!("{ctx}: entry {key:?} splits in more than one way"))),
    }
}

pub fn cat_from_doc(d: &CatDoc) -> IoRes<NCat> {
    if d.kind != "ncat" {
        return Err(schema(format!("expected kind \"ncat\", found {:?}", d.kind)));
    }
    let n = d.dim;
    if d.cells.len() != n + 1 {
        return Err(schema(format!("cells lists {} dimensions, dim is {n}", d.cells.len())));
    }
    let mut c = NCat::empty(n);
    for (k, names) in d.cells.iter().enumerate() {
        for name in names {
            let bnd = if k == 0 {
                None
            } else {
                let ctx = format!("cell {name:?}");
                let get = |m: &Dims, what: &str| -> IoRes<u32> {
                    let s = m
                        .get(&dim_key(k))
                        .and_then(|t| t.get(name))
                        .ok_or_else(|| schema(format!("{ctx}: no {what}")))?;
                    Ok(lookup(&c, k - 1, s, &ctx)?.idx)
                };
                Some((get(&d.src, "source")?, get(&d.tgt, "target")?))
            };
            c.add_cell(k, name.clone(), bnd).map_err(|e| schema(e.to_string()))?;
        }
    }
    for (key, t) in &d.id {
        let k: usize = key.parse().map_err(|_| schema(format!("id: bad dimension {key:?}")))?;
        if k >= n {
            return Err(schema(format!("id: dimension {k} has no identities")));
        }
        for (x, e) in t {
            let ctx = format!("id {k}: {x}");
            let x = lookup(&c, k, x, &ctx)?;
            let e = lookup(&c, k + 1, e, &ctx)?;
            c.set_ident(x, e);
        }
    }
    for (key, t) in &d.comp {
        let ctx = format!("comp {key:?}");
        let (m, k) = key
            .split_once(',')
            .and_then(|(m, k)| Some((m.trim().parse::<usize>().ok()?, k.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| schema(format!("{ctx}: key must be \"m,k\"")))?;
        if k > n || m >= k {
            return Err(schema(format!("{ctx}: needs m < k <= {n}")));
        }
        for (pair, r) in t {
            let ectx = format!("{ctx}, entry {pair:?}");
            let (a, b) = split_pair(&c, k, pair, &ectx)?;
            let r = lookup(&c, k, r, &ectx)?;
            c.set_comp(m, a, b, r);
        }
    }
    c.fill_unit_entries();
    if let Some(p) = &d.point {
        c.set_point(Some(lookup(&c, 0, p, "point")?));
    }
    Ok(c)
}

// ----- morphisms -----

fn map_doc(dom: &NCat, cod: &NCat, k0: usize, f: impl Fn(Cell) -> Cell) -> Dims {
    let mut out = Dims::new();
    for k in 0..=dom.n() - k0.min(dom.n()) {
        if k + k0 > cod.n() {
            break;
        }
        let t = dom.cells(k).map(|x| (dom.name(x).to_string(), cod.name(f(x)).to_string())).collect();
        out.insert(dim_key(k), t);
    }
    out
}

pub fn mor_to_doc(f: &Morphism, opts: Options) -> MorDoc {
    MorDoc {
        kind: "morphism".into(),
        dom: Ref::Inline(Box::new(cat_to_doc(&f.dom, opts))),
        cod: Ref::Inline(Box::new(cat_to_doc(&f.cod, opts))),
        map: map_doc(&f.dom, &f.cod, 0, |x| f.apply(x)),
    }
}

/// Reads per-dimension component maps from `dom` cells to cells `shift`
/// dimensions higher in `cod`.
fn read_map(map: &Dims, dom: &NCat, cod: &NCat, shift: usize, top: usize, what: &str) -> IoRes<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for k in 0..=top {
        let t = map.get(&dim_key(k));
        let mut v = Vec::with_capacity(dom.count(k));
        for x in dom.cells(k) {
            let nm = dom.name(x);
            let y = t.and_then(|t| t.get(nm)).ok_or_else(|| schema(format!("{what}: no image for {k}-cell {nm:?}")))?;
            v.push(lookup(cod, k + shift, y, &format!("{what}, image of {nm:?}"))?.idx);
        }
        out.push(v);
    }
    Ok(out)
}

struct Loader {
    base: PathBuf,
    opts: Options,
}

impl Loader {
    fn sub(&self, path: &str) -> IoRes<(serde_json::Value, Loader)> {
        let p = self.base.join(path);
        let text =
            std::fs::read_to_string(&p).map_err(|e| IoError::Read { path: p.display().to_string(), source: e })?;
        let v = parse_json(&text)?;
        let base = p.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok((v, Loader { base, opts: self.opts }))
    }

    fn cat_ref(&self, r: &Ref<CatDoc>) -> IoRes<Arc<NCat>> {
        match r {
            Ref::Inline(d) => self.cat(d),
            Ref::Path(p) => {
                let (v, l) = self.sub(p)?;
                match l.value(&v)? {
                    Value::Cat(c) => Ok(c),
                    other => Err(schema(format!("{p}: expected an ncat document, found {}", other.kind()))),
                }
            }
        }
    }

    fn cat(&self, d: &CatDoc) -> IoRes<Arc<NCat>> {
        let c = cat_from_doc(d)?;
        if !self.opts.no_validate {
            let r = validate(&c);
            if !r.ok {
                return Err(IoError::Invalid { what: "category".into(), report: r });
            }
        }
        Ok(Arc::new(c))
    }

    fn mor(&self, d: &MorDoc) -> IoRes<Morphism> {
        if d.kind != "morphism" {
            return Err(schema(format!("expected kind \"morphism\", found {:?}", d.kind)));
        }
        let dom = self.cat_ref(&d.dom)?;
        let cod = self.cat_ref(&d.cod)?;
        if dom.n() != cod.n() {
            return Err(schema("domain and codomain have different dimensions"));
        }
        let map = read_map(&d.map, &dom, &cod, 0, dom.n(), "map")?;
        let f = Morphism::from_map(dom, cod, map)?;
        if !self.opts.no_validate {
            let r = validate_functor(&f);
            if !r.ok {
                return Err(IoError::Invalid { what: "morphism".into(), report: r });
            }
        }
        Ok(f)
    }

    fn value_ref(&self, r: &Ref<serde_json::Value>) -> IoRes<Value> {
        match r {
            Ref::Inline(v) => self.value(v),
            Ref::Path(p) => {
                let (v, l) = self.sub(p)?;
                l.value(&v)
            }
        }
    }

    fn value(&self, v: &serde_json::Value) -> IoRes<Value> {
        let kind = v.get("kind").and_then(|k| k.as_str()).ok_or_else(|| schema("missing \"kind\""))?;
        let de = |e: serde_json::Error| schema(format!("{kind}: {e}"));
        match kind {
            "ncat" => Ok(Value::Cat(self.cat(&CatDoc::deserialize(v).map_err(de)?)?)),
            "morphism" => Ok(Value::Mor(self.mor(&MorDoc::deserialize(v).map_err(de)?)?)),
            "transf2" => {
                let d = TransfDoc::deserialize(v).map_err(de)?;
                let (Value::Mor(f), Value::Mor(g)) = (self.value_ref(&d.src)?, self.value_ref(&d.tgt)?) else {
                    return Err(schema("transf2: src and tgt must be morphisms"));
                };
                let n = f.n();
                let comp = if n == 0 { Vec::new() } else { read_map(&d.comp, &f.dom, &f.cod, 1, n - 1, "transf2")? };
                let a = Transf2::from_raw(f, g, comp)?;
                if !self.opts.no_validate {
                    let r = validate_transf2(&a);
                    if !r.ok {
                        return Err(IoError::Invalid { what: "transf2".into(), report: r });
                    }
                }
                Ok(Value::Transf2(a))
            }
            "transf3" => {
                let d = TransfDoc::deserialize(v).map_err(de)?;
                let (Value::Transf2(a), Value::Transf2(b)) = (self.value_ref(&d.src)?, self.value_ref(&d.tgt)?) else {
                    return Err(schema("transf3: src and tgt must be transf2 documents"));
                };
                let n = a.n();
                let comp =
                    if n < 2 { Vec::new() } else { read_map(&d.comp, a.dom_cat(), a.cod_cat(), 2, n - 2, "transf3")? };
                let l = Transf3::from_raw(a, b, comp)?;
                if !self.opts.no_validate {
                    let r = validate_transf3(&l);
                    if !r.ok {
                        return Err(IoError::Invalid { what: "transf3".into(), report: r });
                    }
                }
                Ok(Value::Transf3(l))
            }
            other => Err(schema(format!("unknown kind {other:?}"))),
        }
    }
}

fn parse_json(text: &str) -> IoRes<serde_json::Value> {
    serde_json::from_str(text).map_err(|e| {
        let msg = e.to_string();
        let msg = msg.rfind(" at line ").map_or(msg.as_str(), |i| &msg[..i]).to_string();
        IoError::Parse { line: e.line(), column: e.column(), msg }
    })
}

// ----- transformations -----

pub fn transf2_to_json(a: &Transf2, opts: Options) -> serde_json::Value {
    let d = TransfDoc {
        kind: "transf2".into(),
        src: Ref::Inline(Box::new(to_json(&Value::Mor(a.src.clone()), opts))),
        tgt: Ref::Inline(Box::new(to_json(&Value::Mor(a.tgt.clone()), opts))),
        comp: if a.n() == 0 { Dims::new() } else { map_doc_upto(a.dom_cat(), a.cod_cat(), a.n() - 1, |x| a.apply(x)) },
    };
    serde_json::to_value(d).expect("serializable")
}

pub fn transf3_to_json(l: &Transf3, opts: Options) -> serde_json::Value {
    let d = TransfDoc {
        kind: "transf3".into(),
        src: Ref::Inline(Box::new(transf2_to_json(&l.src, opts))),
        tgt: Ref::Inline(Box::new(transf2_to_json(&l.tgt, opts))),
        comp: if l.n() < 2 { Dims::new() } else { map_doc_upto(l.dom_cat(), l.cod_cat(), l.n() - 2, |x| l.apply(x)) },
    };
    serde_json::to_value(d).expect("serializable")
}

fn map_doc_upto(dom: &NCat, cod: &NCat, top: usize, f: impl Fn(Cell) -> Cell) -> Dims {
    (0..=top)
        .map(|k| (dim_key(k), dom.cells(k).map(|x| (dom.name(x).to_string(), cod.name(f(x)).to_string())).collect()))
        .collect()
}

// ----- entry points -----

pub fn to_json(v: &Value, opts: Options) -> serde_json::Value {
    match v {
        Value::Cat(c) => serde_json::to_value(cat_to_doc(c, opts)).expect("serializable"),
        Value::Mor(f) => serde_json::to_value(mor_to_doc(f, opts)).expect("serializable"),
        Value::Transf2(a) => transf2_to_json(a, opts),
        Value::Transf3(l) => transf3_to_json(l, opts),
    }
}

/// Canonical pretty-printed text, newline terminated.
pub fn to_string(v: &Value, opts: Options) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(v, opts)).expect("serializable");
    s.push('\n');
    s
}

/// Parses a document; relative path references resolve against `base`.
pub fn parse(text: &str, base: &Path, opts: Options) -> IoRes<Value> {
    let v = parse_json(text)?;
    Loader { base: base.to_path_buf(), opts }.value(&v)
}

pub fn load(path: &Path, opts: Options) -> IoRes<Value> {
    let text =
        std::fs::read_to_string(path).map_err(|e| IoError::Read { path: path.display().to_string(), source: e })?;
    parse(&text, path.parent().unwrap_or(Path::new(".")), opts)
}

pub fn save(path: &Path, v: &Value, opts: Options) -> IoRes<()> {
    std::fs::write(path, to_string(v, opts)).map_err(|e| IoError::Read { path: path.display().to_string(), source: e })
}

pub fn cat_from_str(text: &str) -> IoRes<NCat> {
    match parse(text, Path::new("."), Options::default())? {
        Value::Cat(c) => Ok(Arc::unwrap_or_clone(c)),
        other => Err(schema(format!("expected an ncat document, found {}", other.kind()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, Monoid};

    fn round(v: &Value) -> Value {
        parse(&to_string(v, Options::default()), Path::new("."), Options::default()).unwrap()
    }

    #[test]
    fn terminal_document() {
        let t = fixtures::terminal(2);
        let s = to_string(&Value::Cat(Arc::new(t.clone())), Options::default());
        assert!(s.contains("\"kind\": \"ncat\""));
        assert_eq!(cat_from_str(&s).unwrap(), t);
    }

    #[test]
    fn round_trips() {
        for (label, c) in fixtures::standard_fixtures() {
            let v = Value::Cat(Arc::new(c.clone()));
            let s = to_string(&v, Options::default());
            let Value::Cat(back) = round(&v) else { panic!() };
            assert!(back.same_as(&c), "{label}");
            assert_eq!(to_string(&Value::Cat(back), Options::default()), s, "{label}");
        }
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let Value::Mor(q2) = round(&Value::Mor(q.clone())) else { panic!() };
        assert_eq!(q2.map(), q.map());
        let k = crate::limits::h_kernel(&q).unwrap();
        let Value::Transf2(e) = round(&Value::Transf2(k.pb.eps.clone())) else { panic!() };
        assert_eq!(e.raw(), k.pb.eps.raw());
        let b = Arc::new(fixtures::delooping(&Monoid::cyclic(2), 2).unwrap());
        let a = Transf2::identity(&Morphism::identity(b));
        let l = Transf3::identity(&a);
        let Value::Transf3(l2) = round(&Value::Transf3(l.clone())) else { panic!() };
        assert_eq!(l2.raw(), l.raw());
    }

    #[test]
    fn explicit_identities_are_optional() {
        let c = fixtures::delooping(&Monoid::cyclic(3), 1).unwrap();
        let v = Value::Cat(Arc::new(c.clone()));
        let short = to_string(&v, Options::default());
        let long = to_string(&v, Options { explicit_identities: true, ..Options::default() });
        assert!(long.len() > short.len());
        assert_eq!(cat_from_str(&long).unwrap(), cat_from_str(&short).unwrap());
    }

    #[test]
    fn dangling_entry_is_cited() {
        let c = fixtures::delooping(&Monoid::cyclic(2), 1).unwrap();
        let s = to_string(&Value::Cat(Arc::new(c)), Options::default()).replace("\"g1|g1\"", "\"g1|g7\"");
        let e = cat_from_str(&s).unwrap_err().to_string();
        assert!(e.contains("g1|g7"), "{e}");
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = cat_from_str("{\n  \"kind\": \"ncat\",\n  oops\n}").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 3, .. }), "{e}");
    }

    #[test]
    fn invalid_structures_are_refused() {
        let mut c = fixtures::delooping(&Monoid::cyclic(3), 1).unwrap();
        let g1 = c.get(1, "g1").unwrap();
        c.set_comp(0, g1, g1, c.get(1, "g0").unwrap());
        let s = to_string(&Value::Cat(Arc::new(c)), Options::default());
        assert!(matches!(cat_from_str(&s), Err(IoError::Invalid { .. })));
        let lax = Options { no_validate: true, ..Options::default() };
        assert!(parse(&s, Path::new("."), lax).is_ok());
    }

    #[test]
    fn path_references() {
        let dir = std::env::temp_dir().join(format!("ziq-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let q = fixtures::quotient(4, 2, 1).unwrap();
        save(&dir.join("b.json"), &Value::Cat(q.dom.clone()), Options::default()).unwrap();
        save(&dir.join("c.json"), &Value::Cat(q.cod.clone()), Options::default()).unwrap();
        let mut d = mor_to_doc(&q, Options::default());
        d.dom = Ref::Path("b.json".into());
        d.cod = Ref::Path("c.json".into());
        std::fs::write(dir.join("q.json"), serde_json::to_string(&d).unwrap()).unwrap();
        let Value::Mor(q2) = load(&dir.join("q.json"), Options::default()).unwrap() else { panic!() };
        assert_eq!(q2, q);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
