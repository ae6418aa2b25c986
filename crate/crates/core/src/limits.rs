//! Standard homotopy pullbacks, strict pullbacks, homotopy fibers and kernels.
//!
//! For a cospan `F: A → B ← C: G` the apex has k-cells `(a, b, c)` for k < n, where
//! `b` is a (k+1)-cell of `B` playing the role of the component `ε(a, b, c)`, and
//! n-cells `(a, c)`. The boundary of `b` is the one a transformation
//! `ε: P•F ⇒ Q•G` must have, so the apex is exactly the object of such data.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

use crate::cat::{Cell, Generated, NCat};
use crate::error::{CatError, Res};
use crate::fixtures;
use crate::morphism::Morphism;
use crate::transf::{on0, on1, star, Ctx, Fx, Pt, Tr, Transf2, Transf3};

const NONE: u32 = u32::MAX;

/// `(dim, a, b, c, source, target)`; objects use `NONE` for the boundary.
type Key = (usize, u32, Option<u32>, u32, u32, u32);

type Parts = Vec<Vec<(u32, Option<u32>, u32)>>;

#[derive(Clone, Debug)]
pub struct HPullback {
    pub apex: Arc<NCat>,
    pub proj_left: Morphism,
    pub proj_right: Morphism,
    pub eps: Transf2,
    pub f: Morphism,
    pub g: Morphism,
    index: HashMap<Key, u32>,
}

/// A cone `(X, M, N, ω)` with `ω: M•F ⇒ N•G`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub m: Morphism,
    pub n: Morphism,
    pub w: Transf2,
}

/// Points used while the apex is still being built: real cells, or a candidate
/// top cell known only by its `a`, `c` parts and its boundary.
#[derive(Clone)]
enum V {
    R(Cell),
    N { dim: usize, a: Cell, c: Cell, s: Option<Cell>, t: Option<Cell> },
}

impl Pt for V {
    fn dim(&self) -> usize {
        match self {
            V::R(x) => x.dim,
            V::N { dim, .. } => *dim,
        }
    }
    fn s(&self, c: &NCat, m: usize) -> Self {
        match self {
            V::R(x) => V::R(c.s_at(*x, m)),
            V::N { dim, s: Some(s), .. } if m < *dim => V::R(c.s_at(*s, m)),
            v => v.clone(),
        }
    }
    fn t(&self, c: &NCat, m: usize) -> Self {
        match self {
            V::R(x) => V::R(c.t_at(*x, m)),
            V::N { dim, t: Some(t), .. } if m < *dim => V::R(c.t_at(*t, m)),
            v => v.clone(),
        }
    }
}

fn level_tr(f: &Morphism, g: &Morphism, parts: Rc<Parts>) -> Tr<V> {
    let (f2, g2) = (f.clone(), g.clone());
    let (p1, p2, p3) = (parts.clone(), parts.clone(), parts);
    Tr {
        l: 0,
        f: Rc::new(move |v: &V| {
            Ok(f2.apply(match v {
                V::R(x) => Cell::new(x.dim, p1[x.dim][x.idx as usize].0),
                V::N { a, .. } => *a,
            }))
        }),
        g: Rc::new(move |v: &V| {
            Ok(g2.apply(match v {
                V::R(x) => Cell::new(x.dim, p2[x.dim][x.idx as usize].2),
                V::N { c, .. } => *c,
            }))
        }),
        a: Rc::new(move |v: &V| match v {
            V::R(x) => p3[x.dim][x.idx as usize]
                .1
                .map(|b| Cell::new(x.dim + 1, b))
                .ok_or_else(|| CatError::OutOfRange("no component at a top cell".into())),
            V::N { .. } => Err(CatError::Invalid("component of a candidate cell".into())),
        }),
    }
}

pub fn triple_name(a: &str, b: &str, c: &str) -> String {
    format!("({a}|{b}|{c})")
}

/// The standard h-pullback of `F: A → B` and `G: C → B`.
pub fn h_pullback(f: &Morphism, g: &Morphism) -> Res<HPullback> {
    if f.cod != g.cod {
        return Err(CatError::Boundary("h-pullback of functors with different codomains".into()));
    }
    let (ca, cb, cc) = (f.dom.clone(), f.cod.clone(), g.dom.clone());
    let n = cb.n();
    let mut p = NCat::empty(n);
    let mut parts: Parts = vec![Vec::new(); n + 1];
    let mut index: HashMap<Key, u32> = HashMap::new();
    for k in 0..=n {
        let snap = Arc::new(p.clone());
        let cx = Ctx::new(snap.clone(), cb.clone());
        let mut lv = level_tr(f, g, Rc::new(parts.clone()));
        for _ in 0..k {
            lv = lv.descend(&cx);
        }
        let par = if k < n { cb.parallel_index(k + 1) } else { HashMap::new() };
        let mut by_ac: HashMap<(u32, u32), Vec<Cell>> = HashMap::new();
        if k > 0 {
            for u in p.cells(k - 1) {
                let (a, _, c) = parts[k - 1][u.idx as usize];
                by_ac.entry((a, c)).or_default().push(u);
            }
        }
        let mut found: Vec<(String, Key)> = Vec::new();
        for x in ca.cells(k) {
            for y in cc.cells(k) {
                let bnds: Vec<(Option<Cell>, Option<Cell>)> = if k == 0 {
                    vec![(None, None)]
                } else {
                    let us = by_ac.get(&(ca.src(x).idx, cc.src(y).idx)).cloned().unwrap_or_default();
                    let vs = by_ac.get(&(ca.tgt(x).idx, cc.tgt(y).idx)).cloned().unwrap_or_default();
                    let mut out = Vec::new();
                    for &u in &us {
                        for &v in &vs {
                            if k < 2 || (p.src(u) == p.src(v) && p.tgt(u) == p.tgt(v)) {
                                out.push((Some(u), Some(v)));
                            }
                        }
                    }
                    out
                };
                for (u, v) in bnds {
                    let cand = V::N { dim: k, a: x, c: y, s: u, t: v };
                    let lo = (lv.f)(&cand)?;
                    let hi = (lv.g)(&cand)?;
                    let (su, tv) = (u.map_or(NONE, |c| c.idx), v.map_or(NONE, |c| c.idx));
                    if k < n {
                        for &b in par.get(&(lo.idx, hi.idx)).map(|v| v.as_slice()).unwrap_or(&[]) {
                            let bc = Cell::new(k + 1, b);
                            let nm = triple_name(ca.name(x), cb.name(bc), cc.name(y));
                            found.push((nm, (k, x.idx, Some(b), y.idx, su, tv)));
                        }
                    } else if lo == hi {
                        found.push((
                            crate::construct::pair_name(ca.name(x), cc.name(y)),
                            (k, x.idx, None, y.idx, su, tv),
                        ));
                    }
                }
            }
        }
        let mut uses: HashMap<&str, usize> = HashMap::new();
        for (nm, _) in &found {
            *uses.entry(nm.as_str()).or_default() += 1;
        }
        let names: Vec<String> = found
            .iter()
            .map(|(nm, key)| {
                if uses[nm.as_str()] > 1 {
                    let (s, t) = (Cell::new(k - 1, key.4), Cell::new(k - 1, key.5));
                    format!("{nm}[{}>{}]", p.name(s), p.name(t))
                } else {
                    nm.clone()
                }
            })
            .collect();
        for ((_, key), nm) in found.into_iter().zip(names) {
            let bnd = (k > 0).then_some((key.4, key.5));
            let cell = p.add_cell(k, nm, bnd)?;
            parts[k].push((key.1, key.2, key.3));
            index.insert(key, cell.idx);
        }
    }
    if let (Some(pa), Some(pb), Some(pc)) = (ca.point(), cb.point(), cc.point()) {
        if f.apply(pa) == pb && g.apply(pc) == pb {
            let b = (n > 0).then(|| cb.unit(pb).idx);
            if let Some(&i) = index.get(&(0, pa.idx, b, pc.idx, NONE, NONE)) {
                p.set_point(Some(Cell::new(0, i)));
            }
        }
    }
    let cells_only = Arc::new(p.clone());
    let parts = Rc::new(parts);
    let eps_fx: Fx<Cell> = {
        let parts = parts.clone();
        Rc::new(move |x: &Cell| {
            parts[x.dim][x.idx as usize]
                .1
                .map(|b| Cell::new(x.dim + 1, b))
                .ok_or_else(|| CatError::OutOfRange("no component at a top cell".into()))
        })
    };
    let cx = Ctx::new(cells_only.clone(), cb.clone());
    let a_fx: Fx<Cell> = {
        let (parts, f) = (parts.clone(), f.clone());
        Rc::new(move |x: &Cell| Ok(f.apply(Cell::new(x.dim, parts[x.dim][x.idx as usize].0))))
    };
    let c_fx: Fx<Cell> = {
        let (parts, g) = (parts.clone(), g.clone());
        Rc::new(move |x: &Cell| Ok(g.apply(Cell::new(x.dim, parts[x.dim][x.idx as usize].2))))
    };
    let mut levels = vec![Tr { l: 0, f: a_fx, g: c_fx, a: eps_fx.clone() }];
    for _ in 0..n {
        let next = levels.last().unwrap().descend(&cx);
        levels.push(next);
    }
    let rhs: Vec<Fx<(Cell, Cell)>> = (0..n)
        .map(|m| {
            let ap = cx.pw(m, &on0(&eps_fx), &on1(&levels[m].g));
            let bp = cx.pw(m, &on0(&levels[m].f), &on1(&eps_fx));
            cx.vc(m + 1, &ap, &bp)
        })
        .collect();
    let lookup = |key: Key| -> Res<Cell> {
        index
            .get(&key)
            .map(|&i| Cell::new(key.0, i))
            .ok_or_else(|| CatError::Invalid("h-pullback is not closed under its induced operations".into()))
    };
    let part = |x: Cell| parts[x.dim][x.idx as usize];
    let gen = Generated {
        cat: p,
        unit: Box::new(|_, x| {
            let (a, b, c) = part(x);
            let k = x.dim + 1;
            let eb = if k < n { Some(cb.unit(Cell::new(k, b.unwrap())).idx) } else { None };
            lookup((k, ca.unit(Cell::new(x.dim, a)).idx, eb, cc.unit(Cell::new(x.dim, c)).idx, x.idx, x.idx))
        }),
        compose: Box::new(|cat, m, x, y| {
            let k = x.dim;
            let (a1, _, c1) = part(x);
            let (a2, _, c2) = part(y);
            let a = ca.comp(m, Cell::new(k, a1), Cell::new(k, a2))?;
            let c = cc.comp(m, Cell::new(k, c1), Cell::new(k, c2))?;
            let b = if k < n { Some(rhs[m](&(x, y))?.idx) } else { None };
            let (s, t) = if m + 1 == k {
                (cat.src(x), cat.tgt(y))
            } else {
                (cat.comp(m, cat.src(x), cat.src(y))?, cat.comp(m, cat.tgt(x), cat.tgt(y))?)
            };
            lookup((k, a.idx, b, c.idx, s.idx, t.idx))
        }),
    };
    let apex = Arc::new(gen.finish()?);
    let pl = Morphism::from_fn(apex.clone(), ca.clone(), |x| Ok(Cell::new(x.dim, part(x).0)))?;
    let pr = Morphism::from_fn(apex.clone(), cc.clone(), |x| Ok(Cell::new(x.dim, part(x).2)))?;
    let eps = Transf2::from_fn(pl.then(f)?, pr.then(g)?, |x| {
        part(x)
            .1
            .map(|b| Cell::new(x.dim + 1, b))
            .ok_or_else(|| CatError::OutOfRange("no component at a top cell".into()))
    })?;
    Ok(HPullback { apex, proj_left: pl, proj_right: pr, eps, f: f.clone(), g: g.clone(), index })
}

impl HPullback {
    /// The apex cell with the given parts and boundary.
    pub fn cell(&self, dim: usize, a: Cell, b: Option<Cell>, c: Cell, bnd: Option<(Cell, Cell)>) -> Option<Cell> {
        let (s, t) = bnd.map_or((NONE, NONE), |(s, t)| (s.idx, t.idx));
        self.index.get(&(dim, a.idx, b.map(|b| b.idx), c.idx, s, t)).map(|&i| Cell::new(dim, i))
    }

    /// The middle part `b` of an apex cell below the top dimension.
    pub fn middle(&self, x: Cell) -> Option<Cell> {
        (x.dim < self.apex.n()).then(|| self.eps.apply(x))
    }

    /// The cone formed by the pullback itself.
    pub fn own_cone(&self) -> Cone {
        Cone { m: self.proj_left.clone(), n: self.proj_right.clone(), w: self.eps.clone() }
    }

    fn check_cone(&self, cone: &Cone) -> Res<()> {
        if cone.m.cod != self.f.dom || cone.n.cod != self.g.dom || cone.m.dom != cone.n.dom {
            return Err(CatError::Boundary("cone legs do not reach the cospan".into()));
        }
        if cone.w.src != cone.m.then(&self.f)? || cone.w.tgt != cone.n.then(&self.g)? {
            return Err(CatError::Boundary("not a cone: 2-cell has the wrong boundary".into()));
        }
        Ok(())
    }

    /// The unique `L` with `L•P = M`, `L•Q = N`, `L•ε = ω`.
    pub fn mediate(&self, cone: &Cone) -> Res<Morphism> {
        self.check_cone(cone)?;
        let x = cone.m.dom.clone();
        let n = x.n();
        let mut map: Vec<Vec<u32>> = Vec::new();
        for k in 0..=n {
            let mut row = Vec::with_capacity(x.count(k));
            for c in x.cells(k) {
                let b = (k < n).then(|| cone.w.apply(c));
                let bnd = (k > 0).then(|| {
                    (
                        Cell::new(k - 1, map[k - 1][x.src(c).idx as usize]),
                        Cell::new(k - 1, map[k - 1][x.tgt(c).idx as usize]),
                    )
                });
                let y = self
                    .cell(k, cone.m.apply(c), b, cone.n.apply(c), bnd)
                    .ok_or_else(|| CatError::Check(format!("no apex cell over {}", x.name(c))))?;
                row.push(y.idx);
            }
            map.push(row);
        }
        let l = Morphism::from_map(x, self.apex.clone(), map)?;
        if l.then(&self.proj_left)? != cone.m
            || l.then(&self.proj_right)? != cone.n
            || Transf2::whisker_left(&l, &self.eps)? != cone.w
        {
            return Err(CatError::Check("mediator equations fail".into()));
        }
        Ok(l)
    }

    /// The unique `λ: L1 ⇒ L2` between the mediators of two cones with
    /// `λ•P = α`, `λ•Q = β` and `λ * ε = Σ`.
    pub fn mediate2(&self, c1: &Cone, c2: &Cone, al: &Transf2, be: &Transf2, sig: &Transf3) -> Res<Transf2> {
        let l1 = self.mediate(c1)?;
        let l2 = self.mediate(c2)?;
        if al.src != c1.m || al.tgt != c2.m || be.src != c1.n || be.tgt != c2.n {
            return Err(CatError::Boundary("2-cells do not connect the cone legs".into()));
        }
        let want_src = c1.w.vcompose(&Transf2::whisker_right(be, &self.g)?)?;
        let want_tgt = Transf2::whisker_right(al, &self.f)?.vcompose(&c2.w)?;
        if sig.src != want_src || sig.tgt != want_tgt {
            return Err(CatError::Boundary("3-cell has the wrong boundary".into()));
        }
        let x = l1.dom.clone();
        let n = x.n();
        let comp: Rc<RefCell<Vec<Vec<u32>>>> = Rc::new(RefCell::new(vec![Vec::new(); n]));
        let a_fx: Fx<Cell> = {
            let comp = comp.clone();
            Rc::new(move |z: &Cell| {
                comp.borrow()[z.dim]
                    .get(z.idx as usize)
                    .map(|&i| Cell::new(z.dim + 1, i))
                    .ok_or_else(|| CatError::Invalid("component not built yet".into()))
            })
        };
        let cx = Ctx::new(x.clone(), self.apex.clone());
        let (f1, f2) = (l1.clone(), l2.clone());
        let mut lv = Tr {
            l: 0,
            f: Rc::new(move |z: &Cell| Ok(f1.apply(*z))),
            g: Rc::new(move |z: &Cell| Ok(f2.apply(*z))),
            a: a_fx,
        };
        for k in 0..n {
            let mut row = Vec::new();
            for c in x.cells(k) {
                let s = (lv.f)(&c)?;
                let t = (lv.g)(&c)?;
                let mid = (k + 1 < n).then(|| sig.apply(c));
                let y = self
                    .cell(k + 1, al.apply(c), mid, be.apply(c), Some((s, t)))
                    .ok_or_else(|| CatError::Check(format!("no apex cell for the component at {}", x.name(c))))?;
                row.push(y.idx);
            }
            comp.borrow_mut()[k] = row;
            lv = lv.descend(&cx);
        }
        let lam = Transf2::from_raw(l1, l2, comp.borrow().clone())?;
        if Transf2::whisker_right(&lam, &self.proj_left)? != *al
            || Transf2::whisker_right(&lam, &self.proj_right)? != *be
            || star(&lam, &self.eps)? != *sig
        {
            return Err(CatError::Check("2-dimensional mediator equations fail".into()));
        }
        Ok(lam)
    }
}

/// Dimensionwise set pullback with its two projections.
pub fn strict_pullback(f: &Morphism, g: &Morphism) -> Res<(Arc<NCat>, Morphism, Morphism)> {
    if f.cod != g.cod {
        return Err(CatError::Boundary("pullback of functors with different codomains".into()));
    }
    let (ca, cc) = (f.dom.clone(), g.dom.clone());
    let n = ca.n();
    let mut p = NCat::empty(n);
    let mut idx: HashMap<(usize, u32, u32), Cell> = HashMap::new();
    let mut back: Vec<Vec<(Cell, Cell)>> = vec![Vec::new(); n + 1];
    for k in 0..=n {
        for x in ca.cells(k) {
            for y in cc.cells(k) {
                if f.apply(x) != g.apply(y) {
                    continue;
                }
                let bnd = if k > 0 {
                    let s = idx[&(k - 1, ca.src(x).idx, cc.src(y).idx)];
                    let t = idx[&(k - 1, ca.tgt(x).idx, cc.tgt(y).idx)];
                    Some((s.idx, t.idx))
                } else {
                    None
                };
                let c = p.add_cell(k, crate::construct::pair_name(ca.name(x), cc.name(y)), bnd)?;
                idx.insert((k, x.idx, y.idx), c);
                back[k].push((x, y));
            }
        }
    }
    if let (Some(a), Some(c)) = (ca.point(), cc.point()) {
        p.set_point(idx.get(&(0, a.idx, c.idx)).copied());
    }
    let gen = Generated {
        cat: p,
        unit: Box::new(|_, x| {
            let (a, c) = back[x.dim][x.idx as usize];
            Ok(idx[&(x.dim + 1, ca.unit(a).idx, cc.unit(c).idx)])
        }),
        compose: Box::new(|_, m, x, y| {
            let (a1, c1) = back[x.dim][x.idx as usize];
            let (a2, c2) = back[y.dim][y.idx as usize];
            let a = ca.comp(m, a1, a2)?;
            let c = cc.comp(m, c1, c2)?;
            Ok(idx[&(x.dim, a.idx, c.idx)])
        }),
    };
    let p = Arc::new(gen.finish()?);
    let pl = Morphism::from_fn(p.clone(), ca.clone(), |x| Ok(back[x.dim][x.idx as usize].0))?;
    let pr = Morphism::from_fn(p.clone(), cc.clone(), |x| Ok(back[x.dim][x.idx as usize].1))?;
    Ok((p, pl, pr))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberKind {
    Past,
    Future,
}

#[derive(Clone, Debug)]
pub struct HFiber {
    pub kind: FiberKind,
    pub base: Cell,
    pub pb: HPullback,
}

impl HFiber {
    /// The leg into the domain of the morphism.
    pub fn leg(&self) -> &Morphism {
        match self.kind {
            FiberKind::Past => &self.pb.proj_right,
            FiberKind::Future => &self.pb.proj_left,
        }
    }
}

/// The constant functor `[d]` from the terminal n-category.
pub fn point_at(c: &Arc<NCat>, d: Cell) -> Res<Morphism> {
    Morphism::constant(Arc::new(fixtures::terminal(c.n())), c.clone(), d)
}

/// Past fiber: cells `(*, d → F c, c)`; future fiber: cells `(c, F c → d, *)`.
pub fn h_fiber(f: &Morphism, d: Cell, kind: FiberKind) -> Res<HFiber> {
    if d.dim != 0 || d.idx as usize >= f.cod.count(0) {
        return Err(CatError::NotObject);
    }
    let pt = point_at(&f.cod, d)?;
    let pb = match kind {
        FiberKind::Past => h_pullback(&pt, f)?,
        FiberKind::Future => h_pullback(f, &pt)?,
    };
    Ok(HFiber { kind, base: d, pb })
}

/// The h-kernel `(K, K, κ)` of a pointed morphism: the past fiber over the point.
pub fn h_kernel(g: &Morphism) -> Res<HFiber> {
    let p = g.cod.require_point()?;
    h_fiber(g, p, FiberKind::Past)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Monoid;
    use crate::morphism::validate_functor;
    use crate::transf::validate_transf2;
    use crate::validate::validate;

    fn bz(k: usize, m: usize) -> Arc<NCat> {
        Arc::new(fixtures::delooping(&Monoid::cyclic(k), m).unwrap())
    }

    fn check(pb: &HPullback) {
        assert!(validate(&pb.apex).ok, "{}", validate(&pb.apex));
        assert!(validate_transf2(&pb.eps).ok, "{}", validate_transf2(&pb.eps));
        assert!(validate_functor(&pb.proj_left).ok);
        assert!(validate_functor(&pb.proj_right).ok);
    }

    #[test]
    fn loops_of_bz2() {
        let c = bz(2, 1);
        let pt = point_at(&c, c.point().unwrap()).unwrap();
        let pb = h_pullback(&pt, &pt).unwrap();
        check(&pb);
        assert_eq!(pb.apex.count(0), 2);
        assert_eq!(pb.apex.count(1), 2);
        assert!(pb.apex.find(0, "(*|g1|*)").is_some());
        assert_eq!(pb.apex.name(pb.apex.point().unwrap()), "(*|g0|*)");
    }

    #[test]
    fn diagonal_of_discrete() {
        let d = Arc::new(fixtures::discrete(2, 1));
        let id = Morphism::identity(d.clone());
        let pb = h_pullback(&id, &id).unwrap();
        check(&pb);
        let names: Vec<&String> = pb.apex.names(0).iter().collect();
        assert_eq!(names, ["(a|a|a)", "(b|b|b)"]);
    }

    #[test]
    fn over_terminal_is_product() {
        let c = bz(3, 1);
        let t = Arc::new(fixtures::terminal(1));
        let to_t = Morphism::constant(c.clone(), t.clone(), t.point().unwrap()).unwrap();
        let pb = h_pullback(&to_t, &Morphism::identity(t)).unwrap();
        check(&pb);
        assert_eq!(pb.apex.count(0), 1);
        assert_eq!(pb.apex.count(1), 3);
    }

    #[test]
    fn kernel_of_quotient() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let k = h_kernel(&q).unwrap();
        check(&k.pb);
        let kc = &k.pb.apex;
        assert_eq!(kc.count(0), 2);
        let p = kc.point().unwrap();
        let loops = kc.between(p, p);
        let mut names: Vec<&str> = loops.iter().map(|&x| k.leg().cod.name(k.leg().apply(x))).collect();
        names.sort();
        assert_eq!(names, ["g0", "g2"]);
        // objects are connected
        let objs: Vec<Cell> = kc.objects().collect();
        assert!(!kc.between(objs[0], objs[1]).is_empty());
    }

    #[test]
    fn two_dimensional_apex() {
        let c = bz(2, 2);
        let pt = point_at(&c, c.point().unwrap()).unwrap();
        let pb = h_pullback(&pt, &pt).unwrap();
        check(&pb);
        assert_eq!(pb.apex.count(0), 1);
        assert_eq!(pb.apex.count(1), 2);
        let q = fixtures::quotient(4, 2, 2).unwrap();
        let k = h_kernel(&q).unwrap();
        check(&k.pb);
    }

    #[test]
    fn own_cone_mediates_to_identity() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let k = h_kernel(&q).unwrap();
        let l = k.pb.mediate(&k.pb.own_cone()).unwrap();
        assert!(l.is_identity());
        let c = bz(2, 2);
        let pt = point_at(&c, c.point().unwrap()).unwrap();
        let pb = h_pullback(&pt, &pt).unwrap();
        assert!(pb.mediate(&pb.own_cone()).unwrap().is_identity());
    }

    #[test]
    fn mediate2_of_identities() {
        let q = fixtures::quotient(4, 2, 2).unwrap();
        let k = h_kernel(&q).unwrap();
        let cone = k.pb.own_cone();
        let lam =
            k.pb.mediate2(
                &cone,
                &cone,
                &Transf2::identity(&cone.m),
                &Transf2::identity(&cone.n),
                &Transf3::identity(&cone.w),
            )
            .unwrap();
        assert!(lam.is_identity());
    }

    #[test]
    fn strict_pullback_of_quotient() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let (p, _, _) = strict_pullback(&q, &q).unwrap();
        assert!(validate(&p).ok);
        assert_eq!(p.count(1), 8);
    }
}
