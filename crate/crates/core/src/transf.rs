//! Lax n-transformations and lax n-modifications in flat form.
//!
//! A transformation `α: F ⇒ G` sends each k-cell `x` (k < n) to a (k+1)-cell
//! `α(x): α(s x) ⋆₀ G(x) ⇒ F(x) ⋆₀ α(t x)` at the bottom level, and recursively on
//! homs. The recursive reading is recovered through [`Tr::descend`]: the level-ℓ
//! functors are `F₍ℓ₊₁₎(x) = α(s_ℓ x) ⋆_ℓ G_ℓ(x)` and `G₍ℓ₊₁₎(x) = F_ℓ(x) ⋆_ℓ α(t_ℓ x)`.
//! Modifications are handled the same way through [`Md`].

use std::rc::Rc;
use std::sync::Arc;

use crate::cat::{Cell, NCat};
use crate::error::{CatError, Res};
use crate::morphism::Morphism;
use crate::validate::Report;

/// Points of a domain over which cell-valued closures are evaluated.
pub trait Pt: Clone + 'static {
    fn dim(&self) -> usize;
    fn s(&self, c: &NCat, m: usize) -> Self;
    fn t(&self, c: &NCat, m: usize) -> Self;
}

impl Pt for Cell {
    fn dim(&self) -> usize {
        self.dim
    }
    fn s(&self, c: &NCat, m: usize) -> Self {
        c.s_at(*self, m)
    }
    fn t(&self, c: &NCat, m: usize) -> Self {
        c.t_at(*self, m)
    }
}

/// Composable pairs, used to state functoriality.
impl Pt for (Cell, Cell) {
    fn dim(&self) -> usize {
        self.0.dim
    }
    fn s(&self, c: &NCat, m: usize) -> Self {
        (c.s_at(self.0, m), c.s_at(self.1, m))
    }
    fn t(&self, c: &NCat, m: usize) -> Self {
        (c.t_at(self.0, m), c.t_at(self.1, m))
    }
}

pub type Fx<X> = Rc<dyn Fn(&X) -> Res<Cell>>;

/// Domain and codomain of the closures.
#[derive(Clone)]
pub struct Ctx {
    pub c: Arc<NCat>,
    pub d: Arc<NCat>,
}

impl Ctx {
    pub fn new(c: Arc<NCat>, d: Arc<NCat>) -> Self {
        Ctx { c, d }
    }

    /// `z ↦ p(s_l z) ⋆_l q(z)`
    pub fn pre<X: Pt>(&self, l: usize, p: &Fx<X>, q: &Fx<X>) -> Fx<X> {
        let (cx, p, q) = (self.clone(), p.clone(), q.clone());
        Rc::new(move |z| cx.d.comp(l, p(&z.s(&cx.c, l))?, q(z)?))
    }

    /// `z ↦ p(z) ⋆_l q(t_l z)`
    pub fn post<X: Pt>(&self, l: usize, p: &Fx<X>, q: &Fx<X>) -> Fx<X> {
        let (cx, p, q) = (self.clone(), p.clone(), q.clone());
        Rc::new(move |z| cx.d.comp(l, p(z)?, q(&z.t(&cx.c, l))?))
    }

    /// `z ↦ p(z) ⋆_l q(z)`
    pub fn pw<X: Pt>(&self, l: usize, p: &Fx<X>, q: &Fx<X>) -> Fx<X> {
        let (cx, p, q) = (self.clone(), p.clone(), q.clone());
        Rc::new(move |z| cx.d.comp(l, p(z)?, q(z)?))
    }

    /// Raises the value at `z` to dimension `dim z + 1`.
    pub fn raise<X: Pt>(&self, p: &Fx<X>) -> Fx<X> {
        let (cx, p) = (self.clone(), p.clone());
        Rc::new(move |z| {
            let v = p(z)?;
            cx.d.unit_cell(v, z.dim() + 1)
        })
    }

    /// Vertical composite of two transformation-level maps, starting at level `l`.
    pub fn vc<X: Pt>(&self, l: usize, a: &Fx<X>, b: &Fx<X>) -> Fx<X> {
        let (cx, a, b) = (self.clone(), a.clone(), b.clone());
        Rc::new(move |x| {
            if x.dim() < l {
                return Err(CatError::DimMismatch(format!("vertical composite at level {l} of a {}-cell", x.dim())));
            }
            if x.dim() == l {
                return cx.d.comp(l, a(x)?, b(x)?);
            }
            let a2 = cx.pre(l, &a, &b);
            let b2 = cx.post(l, &a, &b);
            cx.vc(l + 1, &a2, &b2)(x)
        })
    }
}

pub fn on0(h: &Fx<Cell>) -> Fx<(Cell, Cell)> {
    let h = h.clone();
    Rc::new(move |p| h(&p.0))
}

pub fn on1(h: &Fx<Cell>) -> Fx<(Cell, Cell)> {
    let h = h.clone();
    Rc::new(move |p| h(&p.1))
}

/// A transformation read at level `l`: `a(x): f(x) → g(x)` for `dim x = l`.
#[derive(Clone)]
pub struct Tr<X> {
    pub l: usize,
    pub f: Fx<X>,
    pub g: Fx<X>,
    pub a: Fx<X>,
}

impl<X: Pt> Tr<X> {
    pub fn descend(&self, cx: &Ctx) -> Tr<X> {
        Tr {
            l: self.l + 1,
            f: cx.pre(self.l, &self.a, &self.g),
            g: cx.post(self.l, &self.f, &self.a),
            a: self.a.clone(),
        }
    }
}

/// A modification read at level `l`: `m(x): s(x) ⇛ t(x)` for `dim x = l`,
/// where `s` and `t` are transformation-level maps from `f` to `g`.
#[derive(Clone)]
pub struct Md<X> {
    pub l: usize,
    pub f: Fx<X>,
    pub g: Fx<X>,
    pub s: Fx<X>,
    pub t: Fx<X>,
    pub m: Fx<X>,
}

impl<X: Pt> Md<X> {
    pub fn descend(&self, cx: &Ctx) -> Md<X> {
        let l = self.l;
        let t1 = cx.raise(&cx.pre(l, &self.m, &self.g));
        let t2 = cx.raise(&cx.post(l, &self.f, &self.m));
        Md {
            l: l + 1,
            f: cx.pre(l, &self.s, &self.g),
            g: cx.post(l, &self.f, &self.t),
            s: cx.vc(l + 1, &t1, &self.t),
            t: cx.vc(l + 1, &self.s, &t2),
            m: self.m.clone(),
        }
    }

    pub fn src_tr(&self) -> Tr<X> {
        Tr { l: self.l, f: self.f.clone(), g: self.g.clone(), a: self.s.clone() }
    }

    pub fn tgt_tr(&self) -> Tr<X> {
        Tr { l: self.l, f: self.f.clone(), g: self.g.clone(), a: self.t.clone() }
    }

    fn map_all(&self, l: usize, h: impl Fn(&Fx<X>) -> Fx<X>) -> Md<X> {
        Md { l, f: h(&self.f), g: h(&self.g), s: h(&self.s), t: h(&self.t), m: h(&self.m) }
    }
}

/// Vertical composite `Λ •² Σ` of modifications at the same level.
pub fn compose2_md<X: Pt>(cx: &Ctx, lam: &Md<X>, sig: &Md<X>) -> Md<X> {
    let l = lam.l;
    let (c2, lam2, sig2) = (cx.clone(), lam.clone(), sig.clone());
    let m: Fx<X> = Rc::new(move |x| {
        if x.dim() == l {
            return c2.d.comp(l + 1, (lam2.m)(x)?, (sig2.m)(x)?);
        }
        let ld = lam2.descend(&c2);
        let sd = sig2.descend(&c2);
        let t1 = Tr { l: l + 1, f: ld.f.clone(), g: sd.f.clone(), a: c2.raise(&c2.pre(l, &lam2.m, &lam2.g)) };
        let t2 = Tr { l: l + 1, f: ld.g.clone(), g: sd.g.clone(), a: c2.raise(&c2.post(l, &lam2.f, &sig2.m)) };
        let left = wl_md(&c2, &t1, &sd);
        let right = wr_md(&c2, &ld, &t2);
        (compose2_md(&c2, &left, &right).m)(x)
    });
    Md { l, f: lam.f.clone(), g: lam.g.clone(), s: lam.s.clone(), t: sig.t.clone(), m }
}

/// Left whiskering `ω •¹ M` of a modification by a transformation.
pub fn wl_md<X: Pt>(cx: &Ctx, w: &Tr<X>, md: &Md<X>) -> Md<X> {
    let l = md.l;
    let (c2, w2, md2) = (cx.clone(), w.clone(), md.clone());
    let m: Fx<X> = Rc::new(move |x| {
        if x.dim() == l {
            return c2.d.comp(l, (w2.a)(x)?, (md2.m)(x)?);
        }
        let mdd = md2.descend(&c2);
        let wd = w2.descend(&c2);
        let mut p = mdd.map_all(l + 1, |h| c2.pre(l, &w2.a, h));
        p.m = c2.pre(l, &w2.a, &md2.m);
        let q =
            Tr { l: l + 1, f: c2.post(l, &wd.f, &md2.t), g: c2.post(l, &wd.g, &md2.t), a: c2.post(l, &w2.a, &md2.t) };
        (wr_md(&c2, &p, &q).m)(x)
    });
    Md { l, f: w.f.clone(), g: md.g.clone(), s: cx.vc(l, &w.a, &md.s), t: cx.vc(l, &w.a, &md.t), m }
}

/// Right whiskering `M •¹ σ` of a modification by a transformation.
pub fn wr_md<X: Pt>(cx: &Ctx, md: &Md<X>, sg: &Tr<X>) -> Md<X> {
    let l = md.l;
    let (c2, md2, sg2) = (cx.clone(), md.clone(), sg.clone());
    let m: Fx<X> = Rc::new(move |x| {
        if x.dim() == l {
            return c2.d.comp(l, (md2.m)(x)?, (sg2.a)(x)?);
        }
        let mdd = md2.descend(&c2);
        let sd = sg2.descend(&c2);
        let p = Tr { l: l + 1, f: c2.pre(l, &md2.s, &sd.f), g: c2.pre(l, &md2.s, &sd.g), a: c2.pre(l, &md2.s, &sg2.a) };
        let mut q = mdd.map_all(l + 1, |h| c2.post(l, h, &sg2.a));
        q.m = c2.post(l, &md2.m, &sg2.a);
        (wl_md(&c2, &p, &q).m)(x)
    });
    Md { l, f: md.f.clone(), g: sg.g.clone(), s: cx.vc(l, &md.s, &sg.a), t: cx.vc(l, &md.t, &sg.a), m }
}

fn fx_of_morphism(f: &Morphism) -> Fx<Cell> {
    let f = f.clone();
    Rc::new(move |x| Ok(f.apply(*x)))
}

fn same_functor_shape(f: &Morphism, g: &Morphism) -> Res<()> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(CatError::Boundary("functors do not share domain and codomain".into()));
    }
    Ok(())
}

pub(crate) fn wname(c: &NCat, x: Cell) -> String {
    format!("{}:{}", x.dim, c.name(x))
}

/// A lax n-transformation `α: F ⇒ G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transf2 {
    pub src: Morphism,
    pub tgt: Morphism,
    comp: Vec<Vec<u32>>,
}

impl Transf2 {
    pub fn from_fn(src: Morphism, tgt: Morphism, mut f: impl FnMut(Cell) -> Res<Cell>) -> Res<Self> {
        same_functor_shape(&src, &tgt)?;
        let c = src.dom.clone();
        let mut comp = Vec::new();
        for k in 0..c.n() {
            let mut row = Vec::new();
            for x in c.cells(k) {
                let y = f(x)?;
                if y.dim != k + 1 {
                    return Err(CatError::DimMismatch(format!("component at {} has dimension {}", c.name(x), y.dim)));
                }
                row.push(y.idx);
            }
            comp.push(row);
        }
        Ok(Transf2 { src, tgt, comp })
    }

    pub fn from_raw(src: Morphism, tgt: Morphism, comp: Vec<Vec<u32>>) -> Res<Self> {
        same_functor_shape(&src, &tgt)?;
        let c = &src.dom;
        if comp.len() != c.n() || (0..c.n()).any(|k| comp[k].len() != c.count(k)) {
            return Err(CatError::Invalid("transformation components are not total".into()));
        }
        if (0..c.n()).any(|k| comp[k].iter().any(|&i| i as usize >= src.cod.count(k + 1))) {
            return Err(CatError::Invalid("component outside the codomain".into()));
        }
        Ok(Transf2 { src, tgt, comp })
    }

    pub fn identity(f: &Morphism) -> Self {
        let d = f.cod.clone();
        Transf2::from_fn(f.clone(), f.clone(), |x| Ok(d.unit(f.apply(x)))).expect("identity components")
    }

    pub fn dom_cat(&self) -> &Arc<NCat> {
        &self.src.dom
    }

    pub fn cod_cat(&self) -> &Arc<NCat> {
        &self.src.cod
    }

    pub fn n(&self) -> usize {
        self.src.n()
    }

    pub fn apply(&self, x: Cell) -> Cell {
        Cell::new(x.dim + 1, self.comp[x.dim][x.idx as usize])
    }

    pub fn try_apply(&self, x: Cell) -> Res<Cell> {
        if x.dim >= self.n() {
            return Err(CatError::OutOfRange(format!("no component at a {}-cell", x.dim)));
        }
        Ok(self.apply(x))
    }

    pub fn raw(&self) -> &[Vec<u32>] {
        &self.comp
    }

    pub fn ctx(&self) -> Ctx {
        Ctx::new(self.dom_cat().clone(), self.cod_cat().clone())
    }

    pub fn fx(&self) -> Fx<Cell> {
        let a = self.clone();
        Rc::new(move |x| a.try_apply(*x))
    }

    /// The bottom-level reading `Tr{F, G, α}`.
    pub fn tr(&self) -> Tr<Cell> {
        Tr { l: 0, f: fx_of_morphism(&self.src), g: fx_of_morphism(&self.tgt), a: self.fx() }
    }

    /// Source and target of every component at level `k`, i.e. the functors `F_k`, `G_k`.
    pub fn levels(&self) -> Vec<Tr<Cell>> {
        let cx = self.ctx();
        let mut out = vec![self.tr()];
        for _ in 0..self.n() {
            let next = out.last().unwrap().descend(&cx);
            out.push(next);
        }
        out
    }

    /// `ω •¹ α`: first `self`, then `other`.
    pub fn vcompose(&self, other: &Transf2) -> Res<Transf2> {
        if self.tgt != other.src {
            return Err(CatError::Boundary("target functor differs from the next source functor".into()));
        }
        let f = self.ctx().vc(0, &self.fx(), &other.fx());
        Transf2::from_fn(self.src.clone(), other.tgt.clone(), |x| f(&x))
    }

    /// `N •⁰ α` for `N: B → C`.
    pub fn whisker_left(n: &Morphism, a: &Transf2) -> Res<Transf2> {
        Transf2::from_fn(n.then(&a.src)?, n.then(&a.tgt)?, |x| Ok(a.apply(n.apply(x))))
    }

    /// `α •⁰ L` for `L: D → E`.
    pub fn whisker_right(a: &Transf2, l: &Morphism) -> Res<Transf2> {
        Transf2::from_fn(a.src.then(l)?, a.tgt.then(l)?, |x| Ok(l.apply(a.apply(x))))
    }

    /// All components above objects are identities.
    pub fn is_strict(&self) -> bool {
        let d = self.cod_cat();
        (1..self.n()).all(|k| self.dom_cat().cells(k).all(|x| d.is_identity(self.apply(x))))
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && *self == Transf2::identity(&self.src)
    }

    /// Pointed: the component at the base point is its identity.
    pub fn is_pointed(&self) -> bool {
        match self.dom_cat().point() {
            Some(p) if self.n() > 0 => self.apply(p) == self.cod_cat().unit(self.src.apply(p)),
            Some(_) => true,
            None => false,
        }
    }
}

/// Checks boundaries, the top law, units and functoriality of a transformation.
pub fn validate_transf2(a: &Transf2) -> Report {
    let mut r = Report::new();
    let (c, d) = (a.dom_cat().clone(), a.cod_cat().clone());
    let n = c.n();
    let cx = a.ctx();
    let lv = a.levels();
    for k in 0..=n {
        for x in c.cells(k) {
            let fk = (lv[k].f)(&x);
            let gk = (lv[k].g)(&x);
            if k < n {
                let y = a.apply(x);
                let ok = matches!((&fk, &gk), (Ok(f), Ok(g)) if d.src(y) == *f && d.tgt(y) == *g);
                r.check(
                    ok,
                    "transf-boundary",
                    || vec![wname(&c, x)],
                    || format!("component {} has the wrong boundary ({:?}, {:?})", d.name(y), fk, gk),
                );
            } else {
                let ok = matches!((&fk, &gk), (Ok(f), Ok(g)) if f == g);
                r.check(ok, "transf-top", || vec![wname(&c, x)], || "naturality fails at the top".into());
            }
        }
    }
    for k in 0..n.saturating_sub(1) {
        for x in c.cells(k) {
            r.check(
                a.apply(c.unit(x)) == d.unit(a.apply(x)),
                "transf-unit",
                || vec![wname(&c, x)],
                || "component at an identity is not an identity".into(),
            );
        }
    }
    for k in 1..n {
        for m in 0..k {
            let av = a.fx();
            let lvl = &lv[m];
            let ap = cx.pw(m, &on0(&av), &on1(&lvl.g));
            let bp = cx.pw(m, &on0(&lvl.f), &on1(&av));
            let rhs = cx.vc(m + 1, &ap, &bp);
            let mut entries: Vec<_> = c.comp_entries(k, m).collect();
            entries.sort();
            for (x, y, xy) in entries {
                let v = rhs(&(x, y));
                r.check(
                    v.as_ref().ok() == Some(&a.apply(xy)),
                    "transf-comp",
                    || vec![wname(&c, x), wname(&c, y)],
                    || format!("component at a composite along {m} is not the pasted composite ({v:?})"),
                );
            }
        }
    }
    r
}

/// A lax n-modification `Λ: α ⇛ β` between transformations `F ⇒ G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transf3 {
    pub src: Transf2,
    pub tgt: Transf2,
    comp: Vec<Vec<u32>>,
}

impl Transf3 {
    pub fn from_fn(src: Transf2, tgt: Transf2, mut f: impl FnMut(Cell) -> Res<Cell>) -> Res<Self> {
        if src.src != tgt.src || src.tgt != tgt.tgt {
            return Err(CatError::Boundary("transformations do not share source and target functors".into()));
        }
        let c = src.dom_cat().clone();
        let mut comp = Vec::new();
        for k in 0..c.n().saturating_sub(1) {
            let mut row = Vec::new();
            for x in c.cells(k) {
                let y = f(x)?;
                if y.dim != k + 2 {
                    return Err(CatError::DimMismatch(format!("component at {} has dimension {}", c.name(x), y.dim)));
                }
                row.push(y.idx);
            }
            comp.push(row);
        }
        Ok(Transf3 { src, tgt, comp })
    }

    pub fn from_raw(src: Transf2, tgt: Transf2, comp: Vec<Vec<u32>>) -> Res<Self> {
        let rows = src.n().saturating_sub(1);
        let c = src.dom_cat().clone();
        if comp.len() != rows || (0..rows).any(|k| comp[k].len() != c.count(k)) {
            return Err(CatError::Invalid("modification components are not total".into()));
        }
        let d = src.cod_cat().clone();
        if (0..rows).any(|k| comp[k].iter().any(|&i| i as usize >= d.count(k + 2))) {
            return Err(CatError::Invalid("component outside the codomain".into()));
        }
        let mut it = comp.into_iter().flatten();
        Transf3::from_fn(src, tgt, |x| Ok(Cell::new(x.dim + 2, it.next().unwrap())))
    }

    pub fn identity(a: &Transf2) -> Self {
        let d = a.cod_cat().clone();
        Transf3::from_fn(a.clone(), a.clone(), |x| Ok(d.unit(a.apply(x)))).expect("identity components")
    }

    pub fn n(&self) -> usize {
        self.src.n()
    }

    pub fn dom_cat(&self) -> &Arc<NCat> {
        self.src.dom_cat()
    }

    pub fn cod_cat(&self) -> &Arc<NCat> {
        self.src.cod_cat()
    }

    pub fn apply(&self, x: Cell) -> Cell {
        Cell::new(x.dim + 2, self.comp[x.dim][x.idx as usize])
    }

    pub fn try_apply(&self, x: Cell) -> Res<Cell> {
        if x.dim + 1 >= self.n() {
            return Err(CatError::OutOfRange(format!("no component at a {}-cell", x.dim)));
        }
        Ok(self.apply(x))
    }

    pub fn raw(&self) -> &[Vec<u32>] {
        &self.comp
    }

    pub fn fx(&self) -> Fx<Cell> {
        let a = self.clone();
        Rc::new(move |x| a.try_apply(*x))
    }

    pub fn md(&self) -> Md<Cell> {
        Md {
            l: 0,
            f: fx_of_morphism(&self.src.src),
            g: fx_of_morphism(&self.src.tgt),
            s: self.src.fx(),
            t: self.tgt.fx(),
            m: self.fx(),
        }
    }

    fn build(src: Transf2, tgt: Transf2, m: &Fx<Cell>) -> Res<Transf3> {
        Transf3::from_fn(src, tgt, |x| m(&x))
    }

    /// `Λ •² Σ`.
    pub fn compose2(&self, other: &Transf3) -> Res<Transf3> {
        if self.tgt != other.src {
            return Err(CatError::Boundary("modifications are not composable".into()));
        }
        let cx = self.src.ctx();
        let md = compose2_md(&cx, &self.md(), &other.md());
        Transf3::build(self.src.clone(), other.tgt.clone(), &md.m)
    }

    /// `ω •¹ Λ`.
    pub fn whisker1_left(w: &Transf2, lam: &Transf3) -> Res<Transf3> {
        let cx = w.ctx();
        let md = wl_md(&cx, &w.tr(), &lam.md());
        Transf3::build(w.vcompose(&lam.src)?, w.vcompose(&lam.tgt)?, &md.m)
    }

    /// `Λ •¹ σ`.
    pub fn whisker1_right(lam: &Transf3, s: &Transf2) -> Res<Transf3> {
        let cx = s.ctx();
        let md = wr_md(&cx, &lam.md(), &s.tr());
        Transf3::build(lam.src.vcompose(s)?, lam.tgt.vcompose(s)?, &md.m)
    }

    /// `E •⁰ Λ`.
    pub fn whisker0_left(e: &Morphism, lam: &Transf3) -> Res<Transf3> {
        Transf3::from_fn(Transf2::whisker_left(e, &lam.src)?, Transf2::whisker_left(e, &lam.tgt)?, |x| {
            Ok(lam.apply(e.apply(x)))
        })
    }

    /// `Λ •⁰ H`.
    pub fn whisker0_right(lam: &Transf3, h: &Morphism) -> Res<Transf3> {
        Transf3::from_fn(Transf2::whisker_right(&lam.src, h)?, Transf2::whisker_right(&lam.tgt, h)?, |x| {
            Ok(h.apply(lam.apply(x)))
        })
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && *self == Transf3::identity(&self.src)
    }
}

/// Dimension-raising composite `α * β` of `α: F ⇒ G: C → D` and `β: H ⇒ K: D → E`,
/// a modification from `(F•β)•¹(α•K)` to `(α•H)•¹(G•β)`.
pub fn star(a: &Transf2, b: &Transf2) -> Res<Transf3> {
    if a.cod_cat() != b.dom_cat() {
        return Err(CatError::Boundary(
            "codomain of the first transformation differs from the domain of the second".into(),
        ));
    }
    let src = Transf2::whisker_left(&a.src, b)?.vcompose(&Transf2::whisker_right(a, &b.tgt)?)?;
    let tgt = Transf2::whisker_right(a, &b.src)?.vcompose(&Transf2::whisker_left(&a.tgt, b)?)?;
    Transf3::from_fn(src, tgt, |x| b.try_apply(a.apply(x)))
}

/// Checks boundaries, the top law, units and functoriality of a modification.
pub fn validate_transf3(lam: &Transf3) -> Report {
    let mut r = Report::new();
    let (c, d) = (lam.dom_cat().clone(), lam.cod_cat().clone());
    let n = c.n();
    r.merge_prefixed("source ", validate_transf2(&lam.src));
    r.merge_prefixed("target ", validate_transf2(&lam.tgt));
    if n == 0 {
        return r;
    }
    let cx = lam.src.ctx();
    let mut mds = vec![lam.md()];
    for _ in 1..n {
        let next = mds.last().unwrap().descend(&cx);
        mds.push(next);
    }
    for k in 0..n {
        for x in c.cells(k) {
            let s = (mds[k].s)(&x);
            let t = (mds[k].t)(&x);
            if k + 2 <= n {
                let y = lam.apply(x);
                let ok = matches!((&s, &t), (Ok(s), Ok(t)) if d.src(y) == *s && d.tgt(y) == *t);
                r.check(
                    ok,
                    "mod-boundary",
                    || vec![wname(&c, x)],
                    || format!("component {} has the wrong boundary ({s:?}, {t:?})", d.name(y)),
                );
            } else {
                let ok = matches!((&s, &t), (Ok(s), Ok(t)) if s == t);
                r.check(ok, "mod-top", || vec![wname(&c, x)], || format!("top law fails ({s:?}, {t:?})"));
            }
        }
    }
    for k in 0..n.saturating_sub(2) {
        for x in c.cells(k) {
            r.check(
                lam.apply(c.unit(x)) == d.unit(lam.apply(x)),
                "mod-unit",
                || vec![wname(&c, x)],
                || "component at an identity is not an identity".into(),
            );
        }
    }
    for k in 1..n.saturating_sub(1) {
        for m in 0..k {
            let rhs = mod_comp_rhs(&cx, &mds[m], &mds[m + 1], &lam.fx());
            let mut entries: Vec<_> = c.comp_entries(k, m).collect();
            entries.sort();
            for (x, y, xy) in entries {
                let v = rhs(&(x, y));
                r.check(
                    v.as_ref().ok() == Some(&lam.apply(xy)),
                    "mod-comp",
                    || vec![wname(&c, x), wname(&c, y)],
                    || format!("component at a composite along {m} is not the pasted composite ({v:?})"),
                );
            }
        }
    }
    r
}

/// The pasting that a modification must equal on `x ⋆_m y`.
fn mod_comp_rhs(cx: &Ctx, md: &Md<Cell>, md1: &Md<Cell>, lam: &Fx<Cell>) -> Fx<(Cell, Cell)> {
    let m = md.l;
    let pw = |a: &Fx<Cell>, b: &Fx<Cell>, first: bool| -> Fx<(Cell, Cell)> {
        if first {
            cx.pw(m, &on0(a), &on1(b))
        } else {
            cx.pw(m, &on0(b), &on1(a))
        }
    };
    let m1 = Md {
        l: m + 1,
        f: pw(&md1.f, &md.g, true),
        g: pw(&md1.g, &md.g, true),
        s: pw(&md1.s, &md.g, true),
        t: pw(&md1.t, &md.g, true),
        m: pw(lam, &md.g, true),
    };
    let m2 = Md {
        l: m + 1,
        f: pw(&md1.f, &md.f, false),
        g: pw(&md1.g, &md.f, false),
        s: pw(&md1.s, &md.f, false),
        t: pw(&md1.t, &md.f, false),
        m: pw(lam, &md.f, false),
    };
    let td = md.tgt_tr().descend(cx);
    let tb = Tr { l: m + 1, f: pw(&td.f, &md.f, false), g: pw(&td.g, &md.f, false), a: pw(&md.t, &md.f, false) };
    let sd = md.src_tr().descend(cx);
    let ta = Tr { l: m + 1, f: pw(&sd.f, &md.g, true), g: pw(&sd.g, &md.g, true), a: pw(&md.s, &md.g, true) };
    let left = wr_md(cx, &m1, &tb);
    let right = wl_md(cx, &ta, &m2);
    compose2_md(cx, &left, &right).m
}
