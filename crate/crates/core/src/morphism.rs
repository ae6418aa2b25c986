//! n-functors stored as dimension-indexed cell maps.

use std::sync::Arc;

use crate::cat::{Cell, NCat};
use crate::error::{CatError, Res};
use crate::validate::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub dom: Arc<NCat>,
    pub cod: Arc<NCat>,
    map: Vec<Vec<u32>>,
}

impl Morphism {
    pub fn from_map(dom: Arc<NCat>, cod: Arc<NCat>, map: Vec<Vec<u32>>) -> Res<Self> {
        if dom.n() != cod.n() {
            return Err(CatError::DimMismatch(format!(
                "functor from a {}-category to a {}-category",
                dom.n(),
                cod.n()
            )));
        }
        if map.len() != dom.n() + 1 || (0..=dom.n()).any(|k| map[k].len() != dom.count(k)) {
            return Err(CatError::Invalid("functor map is not total".into()));
        }
        if (0..=dom.n()).any(|k| map[k].iter().any(|&i| i as usize >= cod.count(k))) {
            return Err(CatError::Invalid("functor map points outside its codomain".into()));
        }
        Ok(Morphism { dom, cod, map })
    }

    pub fn from_fn(dom: Arc<NCat>, cod: Arc<NCat>, mut f: impl FnMut(Cell) -> Res<Cell>) -> Res<Self> {
        let mut map = Vec::new();
        for k in 0..=dom.n() {
            let mut row = Vec::with_capacity(dom.count(k));
            for c in dom.cells(k) {
                let d = f(c)?;
                if d.dim != k {
                    return Err(CatError::DimMismatch(format!("{} sent to a {}-cell", dom.name(c), d.dim)));
                }
                row.push(d.idx);
            }
            map.push(row);
        }
        Morphism::from_map(dom, cod, map)
    }

    /// Builds a functor from cell names; unnamed cells are an error.
    pub fn from_names(dom: Arc<NCat>, cod: Arc<NCat>, f: impl Fn(usize, &str) -> Option<String>) -> Res<Self> {
        let d2 = dom.clone();
        let c2 = cod.clone();
        Morphism::from_fn(dom, cod, move |c| {
            let nm = f(c.dim, d2.name(c))
                .ok_or_else(|| CatError::UnknownCell { dim: c.dim, name: d2.name(c).to_string() })?;
            c2.get(c.dim, &nm)
        })
    }

    pub fn identity(c: Arc<NCat>) -> Self {
        let map = (0..=c.n()).map(|k| (0..c.count(k) as u32).collect()).collect();
        Morphism { dom: c.clone(), cod: c, map }
    }

    /// The constant functor at object `d`.
    pub fn constant(dom: Arc<NCat>, cod: Arc<NCat>, d: Cell) -> Res<Self> {
        if d.dim != 0 {
            return Err(CatError::NotObject);
        }
        let c2 = cod.clone();
        Morphism::from_fn(dom, cod, move |c| Ok(c2.unit_to(d, c.dim)))
    }

    /// The zero morphism between pointed categories.
    pub fn zero(dom: Arc<NCat>, cod: Arc<NCat>) -> Res<Self> {
        let p = cod.require_point()?;
        Morphism::constant(dom, cod, p)
    }

    pub fn apply(&self, c: Cell) -> Cell {
        Cell::new(c.dim, self.map[c.dim][c.idx as usize])
    }

    pub fn map(&self) -> &[Vec<u32>] {
        &self.map
    }

    pub fn n(&self) -> usize {
        self.dom.n()
    }

    /// Diagrammatic composite `self • g`: first `self`, then `g`.
    pub fn then(&self, g: &Morphism) -> Res<Morphism> {
        if *self.cod != *g.dom {
            return Err(CatError::Boundary(
                "codomain of the first functor differs from the domain of the second".into(),
            ));
        }
        let map =
            self.map.iter().enumerate().map(|(k, row)| row.iter().map(|&i| g.map[k][i as usize]).collect()).collect();
        Ok(Morphism { dom: self.dom.clone(), cod: g.cod.clone(), map })
    }

    pub fn is_pointed(&self) -> bool {
        match (self.dom.point(), self.cod.point()) {
            (Some(p), Some(q)) => self.apply(p) == q,
            _ => false,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.map.iter().all(|row| row.iter().enumerate().all(|(i, &j)| i as u32 == j))
    }

    /// The same cell map read against structurally equal endpoints, matched by name.
    pub fn retarget(&self, dom: Arc<NCat>, cod: Arc<NCat>) -> Res<Morphism> {
        let (d0, c0) = (self.dom.clone(), self.cod.clone());
        let (d1, c1) = (dom.clone(), cod.clone());
        let f = self.clone();
        Morphism::from_fn(dom, cod, move |c| {
            let x = d0.get(c.dim, d1.name(c))?;
            c1.get(c.dim, c0.name(f.apply(x)))
        })
    }
}

/// Checks that a cell map commutes with boundaries, identities and composition.
pub fn validate_functor(f: &Morphism) -> Report {
    let (c, d) = (&*f.dom, &*f.cod);
    let mut r = Report::new();
    let w = |x: Cell| vec![format!("{}:{}", x.dim, c.name(x))];
    for k in 0..=c.n() {
        for x in c.cells(k) {
            let y = f.apply(x);
            if k > 0 {
                r.check(
                    d.src(y) == f.apply(c.src(x)) && d.tgt(y) == f.apply(c.tgt(x)),
                    "functor-boundary",
                    || w(x),
                    || format!("image {} has the wrong boundary", d.name(y)),
                );
            }
            if k < c.n() {
                r.check(f.apply(c.unit(x)) == d.unit(y), "functor-unit", || w(x), || "identity not preserved".into());
            }
        }
        for m in 0..k {
            let mut entries: Vec<_> = c.comp_entries(k, m).collect();
            entries.sort();
            for (a, b, x) in entries {
                let img = d.comp_raw(m, f.apply(a), f.apply(b));
                r.check(
                    img == Some(f.apply(x)),
                    "functor-comp",
                    || vec![w(a)[0].clone(), w(b)[0].clone()],
                    || format!("composite along {m} not preserved"),
                );
            }
        }
    }
    r
}
