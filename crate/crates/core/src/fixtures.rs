//! Small named n-categories and functors used as test and demo inputs.

use std::sync::Arc;

use crate::cat::{Cell, Generated, NCat};
use crate::error::{CatError, Res};
use crate::morphism::Morphism;

/// A finite monoid given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoid {
    pub label: String,
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
}

pub type Group = Monoid;

impl Monoid {
    pub fn cyclic(k: usize) -> Monoid {
        assert!(k > 0);
        Monoid {
            label: format!("Z/{k}"),
            names: (0..k).map(|i| format!("g{i}")).collect(),
            table: (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect(),
            unit: 0,
        }
    }

    /// The symmetric group on three letters, as permutations of (0 1 2).
    pub fn s3() -> Monoid {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let names = ["e", "r", "r2", "s", "sr", "sr2"].iter().map(|s| s.to_string()).collect();
        let pos = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms.iter().map(|a| perms.iter().map(|b| pos([b[a[0]], b[a[1]], b[a[2]]])).collect()).collect();
        Monoid { label: "S3".into(), names, table, unit: 0 }
    }

    /// `({0, 1}, ·)`: commutative, not a group.
    pub fn and_monoid() -> Monoid {
        Monoid {
            label: "And".into(),
            names: vec!["one".into(), "zero".into()],
            table: vec![vec![0, 1], vec![1, 1]],
            unit: 0,
        }
    }

    pub fn parse(label: &str) -> Res<Monoid> {
        if let Some(k) = label.strip_prefix("Z/") {
            let k: usize = k.parse().map_err(|_| CatError::Invalid(format!("bad group {label}")))?;
            if k == 0 {
                return Err(CatError::Invalid("Z/0 is not finite".into()));
            }
            return Ok(Monoid::cyclic(k));
        }
        match label {
            "S3" => Ok(Monoid::s3()),
            "And" => Ok(Monoid::and_monoid()),
            _ => Err(CatError::Invalid(format!("unknown group {label}"))),
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_group(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).any(|b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit))
    }
}

/// One cell per dimension, pointed.
pub fn terminal(n: usize) -> NCat {
    discrete_named(&["*"], n).with_point(Cell::new(0, 0))
}

/// A set of objects with only identity cells above it.
pub fn discrete_named(objects: &[&str], n: usize) -> NCat {
    let mut c = NCat::empty(0);
    for o in objects {
        c.add_cell(0, *o, None).expect("distinct object names");
    }
    raise(c, n)
}

pub fn discrete(k: usize, n: usize) -> NCat {
    let names: Vec<String> = (0..k).map(object_name).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    discrete_named(&refs, n)
}

fn object_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

/// Adds identity dimensions until the category has dimension `n`.
pub fn raise(mut c: NCat, n: usize) -> NCat {
    while c.n() < n {
        c = c.discretized();
    }
    c
}

/// Two objects joined by an isomorphism `f` with inverse `g`.
pub fn interval(n: usize) -> NCat {
    let mut c = NCat::empty(1);
    let a = c.add_cell(0, "a", None).unwrap();
    let b = c.add_cell(0, "b", None).unwrap();
    let ia = c.add_cell(1, "a", Some((0, 0))).unwrap();
    let ib = c.add_cell(1, "b", Some((1, 1))).unwrap();
    let f = c.add_cell(1, "f", Some((0, 1))).unwrap();
    let g = c.add_cell(1, "g", Some((1, 0))).unwrap();
    c.set_ident(a, ia);
    c.set_ident(b, ib);
    c.set_comp(0, f, g, ia);
    c.set_comp(0, g, f, ib);
    c.fill_unit_entries();
    raise(c, n.max(1)).with_point(a)
}

/// The free category on one arrow `f: a -> b`; not a groupoid.
pub fn arrow(n: usize) -> NCat {
    let mut c = NCat::empty(1);
    let a = c.add_cell(0, "a", None).unwrap();
    let b = c.add_cell(0, "b", None).unwrap();
    let ia = c.add_cell(1, "a", Some((0, 0))).unwrap();
    let ib = c.add_cell(1, "b", Some((1, 1))).unwrap();
    c.add_cell(1, "f", Some((0, 1))).unwrap();
    c.set_ident(a, ia);
    c.set_ident(b, ib);
    c.fill_unit_entries();
    raise(c, n.max(1)).with_point(a)
}

/// The indiscrete groupoid on `k` objects: exactly one arrow between any two.
pub fn pair_groupoid(k: usize, n: usize) -> NCat {
    let mut c = NCat::empty(1);
    let objs: Vec<Cell> = (0..k).map(|i| c.add_cell(0, format!("p{i}"), None).unwrap()).collect();
    let mut arr = vec![vec![Cell::new(1, 0); k]; k];
    for i in 0..k {
        for j in 0..k {
            arr[i][j] = c.add_cell(1, format!("p{i}>p{j}"), Some((i as u32, j as u32))).unwrap();
        }
    }
    for i in 0..k {
        c.set_ident(objs[i], arr[i][i]);
        for j in 0..k {
            for l in 0..k {
                c.set_comp(0, arr[i][j], arr[j][l], arr[i][l]);
            }
        }
    }
    let mut c = raise(c, n.max(1));
    if k > 0 {
        c.set_point(Some(objs[0]));
    }
    c
}

/// The m-fold delooping `B^m M`: one cell below dimension m, the elements at m.
///
/// For m >= 2 the monoid must be commutative, since all compositions coincide.
pub fn delooping(g: &Monoid, m: usize) -> Res<NCat> {
    if m == 0 {
        let refs: Vec<&str> = g.names.iter().map(|s| s.as_str()).collect();
        let mut c = discrete_named(&refs, 0);
        c.set_point(Some(Cell::new(0, g.unit as u32)));
        return Ok(c);
    }
    if m >= 2 && !g.is_commutative() {
        return Err(CatError::Invalid(format!(
            "{} is not commutative; the interchange law forbids its {m}-fold delooping",
            g.label
        )));
    }
    let mut c = NCat::empty(m);
    let mut prev = c.add_cell(0, "*", None)?;
    for k in 1..m {
        let cur = c.add_cell(k, "*", Some((0, 0)))?;
        c.set_ident(prev, cur);
        prev = cur;
    }
    let elems: Vec<Cell> = g.names.iter().map(|nm| c.add_cell(m, nm.clone(), Some((0, 0)))).collect::<Res<_>>()?;
    c.set_ident(prev, elems[g.unit]);
    for k in 1..m {
        let x = Cell::new(k, 0);
        for l in 0..k {
            c.set_comp(l, x, x, x);
        }
    }
    for l in 0..m {
        for a in 0..g.order() {
            for b in 0..g.order() {
                c.set_comp(l, elems[a], elems[b], elems[g.mul(a, b)]);
            }
        }
    }
    Ok(c.with_point(Cell::new(0, 0)))
}

/// The 2-category with one object, the monoid elements as 1-cells and exactly
/// one 2-cell `a>b` between any two of them.
///
/// Every 1-cell is invertible up to a 2-cell, so this is a 2-groupoid whose
/// inverses are far from strict.
pub fn codiscrete(g: &Monoid) -> Res<NCat> {
    let k = g.order();
    let mut c = NCat::empty(2);
    c.add_cell(0, "*", None)?;
    for nm in &g.names {
        c.add_cell(1, nm.clone(), Some((0, 0)))?;
    }
    for a in 0..k {
        for b in 0..k {
            c.add_cell(2, format!("{}>{}", g.names[a], g.names[b]), Some((a as u32, b as u32)))?;
        }
    }
    let two = |a: usize, b: usize| Cell::new(2, (a * k + b) as u32);
    let gen = Generated {
        cat: c,
        unit: Box::new(|_, x| {
            Ok(if x.dim == 0 { Cell::new(1, g.unit as u32) } else { two(x.idx as usize, x.idx as usize) })
        }),
        compose: Box::new(|_, m, x, y| {
            let (i, j) = (x.idx as usize, y.idx as usize);
            Ok(match (x.dim, m) {
                (1, _) => Cell::new(1, g.mul(i, j) as u32),
                (_, 1) => two(i / k, j % k),
                _ => two(g.mul(i / k, j / k), g.mul(i % k, j % k)),
            })
        }),
    };
    Ok(gen.finish()?.with_point(Cell::new(0, 0)))
}

/// `B^m` of a monoid homomorphism given on element indices.
pub fn group_hom(g: &Monoid, h: &Monoid, m: usize, f: impl Fn(usize) -> usize) -> Res<Morphism> {
    let dom = Arc::new(delooping(g, m)?);
    let cod = Arc::new(delooping(h, m)?);
    let cod2 = cod.clone();
    Morphism::from_fn(dom, cod, |c| {
        if c.dim == m {
            Ok(Cell::new(m, f(c.idx as usize) as u32))
        } else {
            Ok(cod2.unit_to(Cell::new(0, 0), c.dim))
        }
    })
}

/// The reduction `Z/k -> Z/d` on m-fold deloopings.
pub fn quotient(k: usize, d: usize, m: usize) -> Res<Morphism> {
    if d == 0 || k % d != 0 {
        return Err(CatError::Invalid(format!("{d} does not divide {k}")));
    }
    group_hom(&Monoid::cyclic(k), &Monoid::cyclic(d), m, |x| x % d)
}

/// Either kind of generated value.
#[derive(Clone, Debug)]
pub enum Fixture {
    Cat(NCat),
    Mor(Morphism),
}

fn arg(params: &[&str], i: usize, default: Option<usize>) -> Res<usize> {
    match params.get(i) {
        Some(s) => s.parse().map_err(|_| CatError::Invalid(format!("expected a number, got {s}"))),
        None => default.ok_or_else(|| CatError::Invalid(format!("missing parameter {}", i + 1))),
    }
}

/// Named fixture generator.
///
/// `terminal N`, `discrete K [N]`, `interval [N]`, `arrow [N]`, `pair-groupoid K [N]`,
/// `delooping G M [N]` (G like `Z/4`, `S3`, `And`), `codiscrete G`, `quotient K D [M]`,
/// `identity <fixture...>`.
pub fn gen(name: &str, params: &[&str]) -> Res<Fixture> {
    let cat = |c: NCat| Ok(Fixture::Cat(c));
    match name {
        "terminal" => cat(terminal(arg(params, 0, Some(0))?)),
        "discrete" => cat(discrete(arg(params, 0, None)?, arg(params, 1, Some(0))?)),
        "interval" => cat(interval(arg(params, 0, Some(1))?)),
        "arrow" => cat(arrow(arg(params, 0, Some(1))?)),
        "pair-groupoid" => cat(pair_groupoid(arg(params, 0, None)?, arg(params, 1, Some(1))?)),
        "delooping" => {
            let g = Monoid::parse(params.first().ok_or_else(|| CatError::Invalid("missing group".into()))?)?;
            let m = arg(params, 1, Some(1))?;
            let n = arg(params, 2, Some(m))?;
            if n < m {
                return Err(CatError::Invalid("target dimension below the delooping level".into()));
            }
            let c = delooping(&g, m)?;
            let p = c.point();
            let mut c = raise(c, n);
            c.set_point(p);
            cat(c)
        }
        "codiscrete" => {
            let g = Monoid::parse(params.first().ok_or_else(|| CatError::Invalid("missing monoid".into()))?)?;
            cat(codiscrete(&g)?)
        }
        "quotient" => {
            let (k, d) = (arg(params, 0, None)?, arg(params, 1, None)?);
            Ok(Fixture::Mor(quotient(k, d, arg(params, 2, Some(1))?)?))
        }
        "identity" => match gen(params.first().copied().unwrap_or(""), &params[params.len().min(1)..])? {
            Fixture::Cat(c) => Ok(Fixture::Mor(Morphism::identity(Arc::new(c)))),
            Fixture::Mor(_) => Err(CatError::Invalid("identity needs a category fixture".into())),
        },
        _ => Err(CatError::Invalid(format!("unknown fixture {name}"))),
    }
}

/// The acceptance fixture family, each with a label.
pub fn standard_fixtures() -> Vec<(String, NCat)> {
    let z = Monoid::cyclic;
    let mut v = vec![];
    for n in 0..=3 {
        v.push((format!("terminal({n})"), terminal(n)));
    }
    v.push(("discrete(3)".into(), discrete(3, 1)));
    v.push(("discrete(2,n=2)".into(), discrete(2, 2)));
    v.push(("interval".into(), interval(1)));
    v.push(("interval(n=2)".into(), interval(2)));
    v.push(("pair-groupoid(3)".into(), pair_groupoid(3, 1)));
    v.push(("BZ/2".into(), delooping(&z(2), 1).unwrap()));
    v.push(("BZ/3".into(), delooping(&z(3), 1).unwrap()));
    v.push(("BZ/4".into(), delooping(&z(4), 1).unwrap()));
    v.push(("B2Z/2".into(), delooping(&z(2), 2).unwrap()));
    v.push(("B2Z/3".into(), delooping(&z(3), 2).unwrap()));
    v.push(("B3Z/2".into(), delooping(&z(2), 3).unwrap()));
    let mut d = raise(delooping(&z(4), 1).unwrap(), 2);
    d.set_point(Some(Cell::new(0, 0)));
    v.push(("BZ/4(n=2)".into(), d));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::validate;

    #[test]
    fn all_fixtures_validate() {
        for (label, c) in standard_fixtures() {
            let r = validate(&c);
            assert!(r.ok, "{label}: {r}");
        }
        assert!(validate(&arrow(1)).ok);
        assert!(validate(&delooping(&Monoid::s3(), 1).unwrap()).ok);
        assert!(validate(&delooping(&Monoid::and_monoid(), 2).unwrap()).ok);
    }

    #[test]
    fn s3_cannot_be_delooped_twice() {
        assert!(delooping(&Monoid::s3(), 2).is_err());
        assert!(!Monoid::s3().is_commutative());
        assert!(Monoid::s3().is_group());
    }

    #[test]
    fn delooping_table() {
        let c = delooping(&Monoid::cyclic(4), 1).unwrap();
        let r = c.compose_cells(0, "g1", 1, "g3", 1).unwrap();
        assert_eq!(c.name(r), "g0");
        assert_eq!(c.name(c.unit_cell(Cell::new(0, 0), 1).unwrap()), "g0");
    }
}
