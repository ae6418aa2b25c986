//! The sesqui-functors π0, D, Ω and π1, the unit η, the comparison 𝔖 and loop
//! monoids.

use std::sync::Arc;

use crate::cat::{Cell, Generated, NCat};
use crate::error::{CatError, Res};
use crate::exactness::is_ngroupoid;
use crate::limits::{h_pullback, point_at, Cone, HPullback};
use crate::morphism::{validate_functor, Morphism};
use crate::transf::{Transf2, Transf3};
use crate::validate::Report;

/// `π0` of an n-groupoid together with the class of every (n-1)-cell.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub cat: Arc<NCat>,
    /// index in `cat` of the class of each (n-1)-cell of the input
    pub class: Vec<u32>,
    /// least member of each class
    pub rep: Vec<u32>,
}

fn require_groupoid(c: &NCat) -> Res<()> {
    let r = is_ngroupoid(c);
    match r.violations.first() {
        None => Ok(()),
        Some(v) => Err(CatError::NotGroupoid(format!("{}: {}", v.witness.join(", "), v.detail))),
    }
}

fn find_root(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Quotients the (n-1)-cells by top-cell connectivity. No groupoid check.
pub fn quotient(c: &NCat) -> Res<Quotient> {
    let n = c.n();
    if n == 0 {
        return Err(CatError::OutOfRange("π0 of a 0-category".into()));
    }
    let top = n - 1;
    let len = c.count(top);
    let mut parent: Vec<usize> = (0..len).collect();
    for x in c.cells(n) {
        let a = find_root(&mut parent, c.src(x).idx as usize);
        let b = find_root(&mut parent, c.tgt(x).idx as usize);
        // keep the least index as root so it is the representative
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        parent[hi] = lo;
    }
    let mut class = vec![0u32; len];
    let mut rep = Vec::new();
    for i in 0..len {
        let r = find_root(&mut parent, i);
        if r == i {
            class[i] = rep.len() as u32;
            rep.push(i as u32);
        } else {
            class[i] = class[r];
        }
    }
    let mut out = NCat::empty(top);
    for k in 0..top {
        for x in c.cells(k) {
            let bnd = (k > 0).then(|| (c.src(x).idx, c.tgt(x).idx));
            out.add_cell(k, c.name(x), bnd)?;
        }
    }
    for &r in &rep {
        let x = Cell::new(top, r);
        let bnd = (top > 0).then(|| (c.src(x).idx, c.tgt(x).idx));
        out.add_cell(top, c.name(x), bnd)?;
    }
    let to_out = |y: Cell| if y.dim == top { Cell::new(top, class[y.idx as usize]) } else { y };
    out.set_point(c.point().map(to_out));
    let gen = Generated {
        cat: out,
        unit: Box::new(|_, x| Ok(to_out(c.unit(x)))),
        compose: Box::new(|_, m, a, b| {
            if a.dim == top {
                let (ra, rb) = (Cell::new(top, rep[a.idx as usize]), Cell::new(top, rep[b.idx as usize]));
                Ok(to_out(c.comp(m, ra, rb)?))
            } else {
                c.comp(m, a, b)
            }
        }),
    };
    let cat = Arc::new(gen.finish()?);
    Ok(Quotient { cat, class, rep })
}

impl Quotient {
    pub fn project(&self, y: Cell) -> Cell {
        if y.dim == self.cat.n() {
            Cell::new(y.dim, self.class[y.idx as usize])
        } else {
            y
        }
    }

    pub fn rep_of(&self, x: Cell) -> Cell {
        if x.dim == self.cat.n() {
            Cell::new(x.dim, self.rep[x.idx as usize])
        } else {
            x
        }
    }
}

/// π0 of an n-groupoid: an (n-1)-groupoid.
pub fn pi0(c: &NCat) -> Res<Arc<NCat>> {
    require_groupoid(c)?;
    Ok(quotient(c)?.cat)
}

/// π0 on a morphism of n-groupoids.
pub fn pi0_mor(f: &Morphism) -> Res<Morphism> {
    require_groupoid(&f.dom)?;
    require_groupoid(&f.cod)?;
    let (qa, qb) = (quotient(&f.dom)?, quotient(&f.cod)?);
    Morphism::from_fn(qa.cat.clone(), qb.cat.clone(), |x| Ok(qb.project(f.apply(qa.rep_of(x)))))
}

/// π0 on a 2-morphism between morphisms of n-groupoids; the top components drop out.
pub fn pi0_transf(a: &Transf2) -> Res<Transf2> {
    let src = pi0_mor(&a.src)?;
    let tgt = pi0_mor(&a.tgt)?;
    let qb = quotient(a.cod_cat())?;
    Transf2::from_fn(src, tgt, |x| Ok(qb.project(a.apply(x))))
}

/// D: a top dimension of formal identities.
pub fn discretize(c: &NCat) -> Arc<NCat> {
    Arc::new(c.discretized())
}

pub fn discretize_mor(f: &Morphism) -> Res<Morphism> {
    let mut map = f.map().to_vec();
    map.push(f.map()[f.n()].clone());
    Morphism::from_map(discretize(&f.dom), discretize(&f.cod), map)
}

/// D on a 2-morphism: the new components at old top cells are identities.
pub fn discretize_transf(a: &Transf2) -> Res<Transf2> {
    let (src, tgt) = (discretize_mor(&a.src)?, discretize_mor(&a.tgt)?);
    let n = a.n();
    let mut comp = a.raw().to_vec();
    // placeholder top row, then read the required boundary off the levels
    comp.push(vec![0; a.dom_cat().count(n)]);
    let probe = Transf2::from_raw(src.clone(), tgt.clone(), comp.clone());
    if let Ok(probe) = probe {
        let lv = probe.levels();
        let d = probe.cod_cat().clone();
        for x in probe.dom_cat().cells(n) {
            let b = (lv[n].f)(&x)?;
            comp[n][x.idx as usize] = d.unit(b).idx;
        }
    }
    Transf2::from_raw(src, tgt, comp)
}

/// The unit `η_C: C → D(π0 C)`.
pub fn eta(c: &Arc<NCat>) -> Res<Morphism> {
    require_groupoid(c)?;
    let q = quotient(c)?;
    let top = c.n() - 1;
    Morphism::from_fn(c.clone(), discretize(&q.cat), |x| {
        Ok(match x.dim {
            k if k < top => x,
            k if k == top => q.project(x),
            // a top cell goes to the formal identity on its class
            k => Cell::new(k, q.project(c.src(x)).idx),
        })
    })
}

/// `η_C` and the adjunction checks: η is a functor, `π0(η) = id`, `η_{Dπ0C} = id`,
/// and naturality against each supplied 2-morphism `α: F ⇒ G: C → C'`.
pub fn eta_and_triangles(c: &Arc<NCat>, twos: &[Transf2]) -> Res<(Morphism, Report)> {
    let e = eta(c)?;
    let mut r = Report::new();
    r.merge_prefixed("eta", validate_functor(&e));
    let p = pi0_mor(&e)?;
    r.check(p.dom == p.cod && p.is_identity(), "pi0-eta", Vec::new, || "π0(η) is not the identity".into());
    let ds = discretize(&*pi0(c)?);
    let e2 = eta(&ds)?;
    r.check(e2.is_identity(), "eta-discrete", Vec::new, || "η at a discrete groupoid is not the identity".into());
    for (i, a) in twos.iter().enumerate() {
        if a.dom_cat() != c {
            return Err(CatError::Boundary("2-morphism does not start at the given groupoid".into()));
        }
        let ec2 = eta(a.cod_cat())?;
        for (nm, f) in [("src", &a.src), ("tgt", &a.tgt)] {
            let lhs = f.then(&ec2)?;
            let rhs = e.then(&discretize_mor(&pi0_mor(f)?)?)?;
            r.check(lhs == rhs, "eta-natural", || vec![format!("{i}.{nm}")], || "η is not natural".into());
        }
        let lhs = Transf2::whisker_right(a, &ec2)?;
        let rhs = Transf2::whisker_left(&e, &discretize_transf(&pi0_transf(a)?)?)?;
        r.check(lhs == rhs, "eta-natural-2", || vec![i.to_string()], || "η is not natural on a 2-morphism".into());
    }
    Ok((e, r))
}

/// `P_{c0,c0'}(C)`, with the loop tensor when both ends are the base point.
#[derive(Clone, Debug)]
pub struct LoopSpace {
    pub pb: HPullback,
    pub c0: Cell,
    pub c1: Cell,
    pub base: Arc<NCat>,
}

impl LoopSpace {
    pub fn apex(&self) -> &Arc<NCat> {
        &self.pb.apex
    }

    /// The cell `(*, c, *)` for a cell `c` of dimension ≥ 1 below the top.
    pub fn lift(&self, c: Cell) -> Res<Cell> {
        if c.dim == 0 || c.dim > self.base.n() {
            return Err(CatError::OutOfRange("only cells of positive dimension lift".into()));
        }
        let nm = crate::limits::triple_name("*", self.base.name(c), "*");
        self.pb.apex.get(c.dim - 1, &nm)
    }

    /// The middle component of a cell below the top.
    pub fn middle(&self, x: Cell) -> Option<Cell> {
        self.pb.middle(x)
    }

    /// `x ⊗ y = (*, b ⋆0 b', *)`; needs a loop space at the base point.
    pub fn tensor(&self, x: Cell, y: Cell) -> Res<Cell> {
        if self.c0 != self.c1 || self.base.point() != Some(self.c0) {
            return Err(CatError::Unpointed);
        }
        let (bx, by) = (self.middle(x), self.middle(y));
        let (Some(bx), Some(by)) = (bx, by) else {
            return Err(CatError::OutOfRange("tensor at the top dimension".into()));
        };
        self.lift(self.base.comp(0, bx, by)?)
    }

    pub fn unit(&self) -> Res<Cell> {
        self.pb.apex.require_point()
    }
}

pub fn path_space(c: &Arc<NCat>, c0: Cell, c1: Cell) -> Res<LoopSpace> {
    if c0.dim != 0 || c1.dim != 0 {
        return Err(CatError::NotObject);
    }
    let pb = h_pullback(&point_at(c, c0)?, &point_at(c, c1)?)?;
    Ok(LoopSpace { pb, c0, c1, base: c.clone() })
}

pub fn omega(c: &Arc<NCat>) -> Res<LoopSpace> {
    let p = c.require_point()?;
    path_space(c, p, p)
}

fn omega_cone(lc: &LoopSpace, f: &Morphism) -> Res<Cone> {
    Ok(Cone { m: lc.pb.proj_left.clone(), n: lc.pb.proj_right.clone(), w: Transf2::whisker_right(&lc.pb.eps, f)? })
}

/// Ω on a pointed morphism: the mediator of `(P, Q, ε•F)`.
pub fn omega_mor(f: &Morphism) -> Res<Morphism> {
    if !f.is_pointed() {
        return Err(CatError::Unpointed);
    }
    let (lc, ld) = (omega(&f.dom)?, omega(&f.cod)?);
    ld.pb.mediate(&omega_cone(&lc, f)?)
}

fn require_pointed_transf(a: &Transf2) -> Res<()> {
    if !a.src.is_pointed() || !a.tgt.is_pointed() || !a.is_pointed() {
        return Err(CatError::Unpointed);
    }
    Ok(())
}

/// Ω on a pointed 2-morphism `α: F ⇒ G`, giving `Ω(G) ⇒ Ω(F)`.
pub fn omega_transf(a: &Transf2) -> Res<Transf2> {
    require_pointed_transf(a)?;
    let (lc, ld) = (omega(a.dom_cat())?, omega(a.cod_cat())?);
    let (cg, cf) = (omega_cone(&lc, &a.tgt)?, omega_cone(&lc, &a.src)?);
    let eps = lc.pb.eps.clone();
    let n = a.n();
    let sig = if n >= 2 {
        Transf3::from_fn(cg.w.clone(), cf.w.clone(), |x| Ok(a.apply(eps.apply(x))))?
    } else {
        Transf3::from_raw(cg.w.clone(), cf.w.clone(), vec![Vec::new(); n.saturating_sub(1)])?
    };
    ld.pb.mediate2(&cg, &cf, &Transf2::identity(&cg.m), &Transf2::identity(&cg.n), &sig)
}

/// π1: the hom at the base point, pointed at its identity.
pub fn pi1(c: &NCat) -> Res<Arc<NCat>> {
    let p = c.require_point()?;
    Ok(Arc::new(c.hom(p, p)?))
}

fn to_hom(c: &NCat, h: &NCat, x: Cell) -> Res<Cell> {
    h.get(x.dim - 1, c.name(x))
}

fn from_hom(c: &NCat, h: &NCat, x: Cell) -> Res<Cell> {
    c.get(x.dim + 1, h.name(x))
}

pub fn pi1_mor(f: &Morphism) -> Res<Morphism> {
    if !f.is_pointed() {
        return Err(CatError::Unpointed);
    }
    let (hc, hd) = (pi1(&f.dom)?, pi1(&f.cod)?);
    Morphism::from_fn(hc.clone(), hd.clone(), |x| to_hom(&f.cod, &hd, f.apply(from_hom(&f.dom, &hc, x)?)))
}

/// π1 on a pointed 2-morphism `α: F ⇒ G`, giving `π1(G) ⇒ π1(F)`.
pub fn pi1_transf(a: &Transf2) -> Res<Transf2> {
    require_pointed_transf(a)?;
    let (c, d) = (a.dom_cat(), a.cod_cat());
    let hc = pi1(c)?;
    let hd = pi1(d)?;
    Transf2::from_fn(pi1_mor(&a.tgt)?, pi1_mor(&a.src)?, |x| to_hom(d, &hd, a.apply(from_hom(c, &hc, x)?)))
}

/// `𝔖: D(C(c0, c0')) → P_{c0,c0'}(C)`, `c ↦ (*, c, *)`.
#[derive(Clone, Debug)]
pub struct ComparisonS {
    pub path: LoopSpace,
    pub map: Morphism,
}

pub fn comparison_s(c: &Arc<NCat>, c0: Cell, c1: Cell) -> Res<ComparisonS> {
    let path = path_space(c, c0, c1)?;
    let h = c.hom(c0, c1)?;
    let dh = discretize(&h);
    let n = c.n();
    let apex = path.apex().clone();
    let map = Morphism::from_fn(dh.clone(), apex.clone(), |x| {
        if x.dim < n {
            path.lift(from_hom(c, &h, x)?)
        } else {
            let below = Cell::new(n - 1, x.idx);
            Ok(apex.unit(path.lift(from_hom(c, &h, below)?)?))
        }
    })?;
    if !is_iso(&map) {
        return Err(CatError::Check("𝔖 is not an isomorphism".into()));
    }
    Ok(ComparisonS { path, map })
}

/// Bijective on cells in every dimension and a valid functor.
pub fn is_iso(f: &Morphism) -> bool {
    (0..=f.n()).all(|k| {
        let mut seen = vec![false; f.cod.count(k)];
        f.dom.count(k) == f.cod.count(k) && f.map()[k].iter().all(|&i| !std::mem::replace(&mut seen[i as usize], true))
    }) && validate_functor(f).ok
}

/// `π0(𝔖_C): π1(C) → π0(Ω(C))`, checked to be an isomorphism.
pub fn pi1_as_pi0_omega(c: &Arc<NCat>) -> Res<Morphism> {
    let p = c.require_point()?;
    let s = comparison_s(c, p, p)?;
    let m = pi0_mor(&s.map)?;
    let m = m.retarget(pi1(c)?, m.cod.clone())?;
    if !is_iso(&m) {
        return Err(CatError::Check("π0(𝔖) is not an isomorphism".into()));
    }
    Ok(m)
}

/// Associativity, unit and weak inverses of ⊗ on Ω(C); on Ω²(C) the two
/// compositions agree and commute.
pub fn loop_monoid_check(c: &Arc<NCat>) -> Res<Report> {
    require_groupoid(c)?;
    let lc = omega(c)?;
    let omc = lc.apex().clone();
    let mut r = Report::new();
    let n = c.n();
    if n == 0 {
        return Ok(r);
    }
    let objs: Vec<Cell> = omc.objects().collect();
    let u = lc.unit()?;
    let nm = |x: Cell| omc.name(x).to_string();
    for &x in &objs {
        r.check(
            lc.tensor(u, x)? == x && lc.tensor(x, u)? == x,
            "tensor-unit",
            || vec![nm(x)],
            || "unit law fails".into(),
        );
        for &y in &objs {
            let xy = lc.tensor(x, y)?;
            for &z in &objs {
                r.check(
                    lc.tensor(xy, z)? == lc.tensor(x, lc.tensor(y, z)?)?,
                    "tensor-assoc",
                    || vec![nm(x), nm(y), nm(z)],
                    || "⊗ is not associative".into(),
                );
            }
        }
        let connected = |a: Cell, b: Cell| if n == 1 { a == b } else { !omc.between(a, b).is_empty() };
        let inv = objs.iter().any(
            |&y| matches!((lc.tensor(x, y), lc.tensor(y, x)), (Ok(a), Ok(b)) if connected(a, u) && connected(b, u)),
        );
        r.check(inv, "tensor-inverse", || vec![nm(x)], || "no weak inverse".into());
    }
    if n >= 2 {
        let p = c.require_point()?;
        let e1 = c.unit(p);
        let loops2 = c.between(e1, e1);
        let l2 = omega(&omc)?;
        r.check(l2.apex().count(0) == loops2.len(), "double-loop-objects", Vec::new, || {
            "Ω²(C) objects differ from 2-cells at the base identity".into()
        });
        for &a in &loops2 {
            for &b in &loops2 {
                let h = c.comp(0, a, b)?;
                let v = c.comp(1, a, b)?;
                let w = |x: Cell| vec![c.name(x).to_string()];
                r.check(h == v, "eckmann-hilton", || [w(a), w(b)].concat(), || "⋆0 and ⋆1 differ".into());
                r.check(
                    h == c.comp(0, b, a)?,
                    "double-loop-commutative",
                    || [w(a), w(b)].concat(),
                    || "double loops do not commute".into(),
                );
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::product;
    use crate::fixtures::{self, Monoid};
    use crate::transf::validate_transf2;
    use crate::validate::validate;

    fn b(k: usize, m: usize) -> Arc<NCat> {
        Arc::new(fixtures::delooping(&Monoid::cyclic(k), m).unwrap())
    }

    #[test]
    fn pi0_shapes() {
        assert!(pi0(&fixtures::terminal(2)).unwrap().same_as(&fixtures::terminal(1)));
        let i = pi0(&fixtures::interval(1)).unwrap();
        assert_eq!(i.n(), 0);
        assert_eq!(i.count(0), 1);
        let b4 = b(4, 1);
        let d = discretize(&b4);
        assert_eq!(*pi0(&d).unwrap(), *b4);
        assert!(matches!(pi0(&fixtures::arrow(1)), Err(CatError::NotGroupoid(_))));
    }

    #[test]
    fn pi0_commutes_with_products() {
        let c = Arc::new(fixtures::interval(2));
        let d = b(2, 2);
        let (p, _, _) = product(&c, &d).unwrap();
        let lhs = pi0(&p).unwrap();
        let (rhs, _, _) = product(&pi0(&c).unwrap(), &pi0(&d).unwrap()).unwrap();
        assert!(lhs.same_as(&rhs));
    }

    #[test]
    fn eta_triangles() {
        for c in [Arc::new(fixtures::interval(1)), b(2, 2), Arc::new(fixtures::terminal(2))] {
            let al = Transf2::identity(&Morphism::identity(c.clone()));
            let (e, r) = eta_and_triangles(&c, &[al]).unwrap();
            assert!(r.ok, "{r}");
            assert!(validate_functor(&e).ok);
        }
        let d = discretize(&b(3, 1));
        assert!(eta(&d).unwrap().is_identity());
    }

    #[test]
    fn discretize_transf_validates() {
        let f = fixtures::quotient(4, 2, 1).unwrap();
        let f2 = fixtures::quotient(4, 2, 2).unwrap();
        let mut ts = crate::search::transformations(&f, &f, 4, 100_000).unwrap();
        assert_eq!(ts.len(), 2);
        let more = crate::search::transformations(&f2, &f2, 4, 1_000_000).unwrap();
        assert!(!more.is_empty());
        ts.extend(more);
        for t in ts {
            let d = discretize_transf(&t).unwrap();
            assert!(validate_transf2(&d).ok, "{}", validate_transf2(&d));
            assert_eq!(pi0_transf(&d).unwrap(), t);
        }
    }

    #[test]
    fn loops_of_bz2() {
        let c = b(2, 1);
        let l = omega(&c).unwrap();
        assert_eq!(l.apex().count(0), 2);
        let g1 = l.lift(c.get(1, "g1").unwrap()).unwrap();
        assert_eq!(l.tensor(g1, g1).unwrap(), l.unit().unwrap());
        let s = comparison_s(&c, c.point().unwrap(), c.point().unwrap()).unwrap();
        assert_eq!(s.map.apply(Cell::new(0, 1)), g1);
        let d = Arc::new(fixtures::discrete(2, 1));
        let (x, y) = (Cell::new(0, 0), Cell::new(0, 1));
        assert_eq!(path_space(&d, x, y).unwrap().apex().count(0), 0);
        let t = Arc::new(fixtures::terminal(2));
        assert_eq!(omega(&t).unwrap().apex().summary(), t.summary());
    }

    #[test]
    fn omega_of_quotient() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let o = omega_mor(&q).unwrap();
        assert!(validate_functor(&o).ok);
        let (lc, ld) = (omega(&q.dom).unwrap(), omega(&q.cod).unwrap());
        for g in q.dom.cells(1) {
            let want = ld.lift(q.apply(g)).unwrap();
            assert_eq!(o.apply(lc.lift(g).unwrap()), want);
        }
        assert!(omega_mor(&Morphism::identity(q.dom.clone())).unwrap().is_identity());
    }

    #[test]
    fn omega_is_functorial() {
        let i = fixtures::group_hom(&Monoid::cyclic(2), &Monoid::cyclic(4), 2, |x| 2 * x).unwrap();
        let q = fixtures::quotient(4, 2, 2).unwrap();
        let lhs = omega_mor(&i.then(&q).unwrap()).unwrap();
        let rhs = omega_mor(&i).unwrap().then(&omega_mor(&q).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_and_pi1_on_two_morphisms() {
        let f = fixtures::quotient(4, 2, 2).unwrap();
        let a = Transf2::identity(&f);
        let oa = omega_transf(&a).unwrap();
        assert!(oa.is_identity());
        assert!(validate_transf2(&oa).ok);
        let p = pi1_transf(&a).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn pi1_shapes() {
        let p = pi1(&b(4, 1)).unwrap();
        assert_eq!(p.n(), 0);
        assert_eq!(p.count(0), 4);
        assert_eq!(p.name(p.point().unwrap()), "g0");
        assert!(pi1(&fixtures::terminal(2)).unwrap().same_as(&fixtures::terminal(1)));
        let p = pi1(&b(2, 2)).unwrap();
        assert!(p.same_as(&b(2, 1)));
    }

    #[test]
    fn pi1_is_pi0_omega() {
        for c in [b(4, 1), b(2, 2), b(3, 2), Arc::new(fixtures::terminal(2))] {
            let m = pi1_as_pi0_omega(&c).unwrap();
            assert!(is_iso(&m));
        }
    }

    #[test]
    fn comparison_square() {
        let f = fixtures::quotient(4, 2, 1).unwrap();
        let (c, d) = (f.dom.clone(), f.cod.clone());
        let (pc, pd) = (c.point().unwrap(), d.point().unwrap());
        let sc = comparison_s(&c, pc, pc).unwrap();
        let sd = comparison_s(&d, pd, pd).unwrap();
        let df = discretize_mor(&pi1_mor(&f).unwrap()).unwrap();
        let df = df.retarget(sc.map.dom.clone(), sd.map.dom.clone()).unwrap();
        let lhs = df.then(&sd.map).unwrap();
        let rhs = sc.map.then(&omega_mor(&f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn loop_monoids() {
        for c in [b(2, 2), Arc::new(fixtures::terminal(2)), b(4, 1), b(3, 2)] {
            let r = loop_monoid_check(&c).unwrap();
            assert!(r.ok, "{r}");
        }
    }

    #[test]
    fn apexes_validate() {
        for c in [b(2, 2), b(3, 1)] {
            assert!(validate(omega(&c).unwrap().apex()).ok);
            assert!(validate(&pi0(&c).unwrap()).ok);
        }
    }
}
