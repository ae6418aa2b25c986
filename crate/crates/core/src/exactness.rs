//! Groupoid and equivalence predicates, exact triples, the connecting data
//! `∇`, `σ`, the fibration sequence and the Ziqqurath.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{Cell, NCat};
use crate::error::{CatError, Res};
use crate::fixtures;
use crate::functors::{
    omega, omega_mor, omega_transf, path_space, pi0, pi0_mor, pi0_transf, pi1, pi1_as_pi0_omega, pi1_mor, pi1_transf,
    LoopSpace,
};
use crate::limits::{h_fiber, Cone, FiberKind, HFiber};
use crate::morphism::Morphism;
use crate::search::Budget;
use crate::transf::{star, validate_transf2, wname, Transf2, Transf3};
use crate::validate::Report;

/// Memoized search for weakly invertible cells.
pub struct Equivs<'a> {
    c: &'a NCat,
    par: Vec<HashMap<(u32, u32), Vec<u32>>>,
    memo: HashMap<Cell, bool>,
}

impl<'a> Equivs<'a> {
    pub fn new(c: &'a NCat) -> Self {
        let par = (0..=c.n()).map(|k| if k == 0 { HashMap::new() } else { c.parallel_index(k) }).collect();
        Equivs { c, par, memo: HashMap::new() }
    }

    /// The (k+1)-cells from `s` to `t`.
    pub fn between(&self, s: Cell, t: Cell) -> Vec<Cell> {
        self.par
            .get(s.dim + 1)
            .and_then(|m| m.get(&(s.idx, t.idx)))
            .map(|v| v.iter().map(|&i| Cell::new(s.dim + 1, i)).collect())
            .unwrap_or_default()
    }

    /// Joined by a weakly invertible cell in either direction; equal at the top.
    pub fn joined(&mut self, a: Cell, b: Cell) -> bool {
        if a.dim == self.c.n() {
            return a == b;
        }
        let mut cands = self.between(a, b);
        cands.extend(self.between(b, a));
        cands.into_iter().any(|z| self.is_equiv(z))
    }

    /// A weak inverse of `z`, if any.
    pub fn inverse(&mut self, z: Cell) -> Option<Cell> {
        if z.dim == 0 {
            return Some(z);
        }
        let c = self.c;
        let (p, q) = (c.src(z), c.tgt(z));
        let (ep, eq) = (c.unit(p), c.unit(q));
        for w in self.between(q, p) {
            let (Ok(zw), Ok(wz)) = (c.comp(z.dim - 1, z, w), c.comp(z.dim - 1, w, z)) else { continue };
            if self.joined(zw, ep) && self.joined(wz, eq) {
                return Some(w);
            }
        }
        None
    }

    pub fn is_equiv(&mut self, z: Cell) -> bool {
        if z.dim == 0 {
            return true;
        }
        if let Some(&v) = self.memo.get(&z) {
            return v;
        }
        let ok = self.inverse(z).is_some();
        self.memo.insert(z, ok);
        ok
    }
}

/// Every cell of positive dimension is weakly invertible.
pub fn is_ngroupoid(c: &NCat) -> Report {
    let mut eq = Equivs::new(c);
    let mut r = Report::new();
    for k in 1..=c.n() {
        for z in c.cells(k) {
            let ok = eq.is_equiv(z);
            r.check(ok, "not-invertible", || vec![wname(c, z)], || format!("{} has no weak inverse", c.name(z)));
        }
    }
    r
}

/// The groupoid condition as exhaustive solvability of the equations `x a = b`
/// and `a x = b` in every dimension.
pub fn kv_condition(c: &NCat, budget: &mut Budget) -> Res<Report> {
    let n = c.n();
    let mut r = Report::new();
    let eq = Equivs::new(c);
    // a (k+1)-cell from p to q, or p = q at the top
    let reach = |p: Cell, q: Cell| if p.dim == n { p == q } else { !eq.between(p, q).is_empty() };
    let w = |x: Cell| wname(c, x);
    for k in 1..=n {
        for i in 0..k - 1 {
            for a in c.cells(i + 1) {
                for b in c.cells(k) {
                    if c.t_at(a, i) != c.t_at(b, i) && c.s_at(a, i) != c.s_at(b, i) {
                        continue;
                    }
                    for right in [true, false] {
                        // right: x ⋆i a = b with u ⋆i a = s b, v ⋆i a = t b
                        let side = |u: Cell| if right { c.comp(i, u, a) } else { c.comp(i, a, u) };
                        let us: Vec<Cell> = c.cells(k - 1).filter(|&u| side(u).ok() == Some(c.src(b))).collect();
                        let vs: Vec<Cell> = c.cells(k - 1).filter(|&v| side(v).ok() == Some(c.tgt(b))).collect();
                        for &u in &us {
                            for &v in &vs {
                                budget.tick()?;
                                if k >= 2 && (c.src(u) != c.src(v) || c.tgt(u) != c.tgt(v)) {
                                    continue;
                                }
                                let ok =
                                    eq.between(u, v).into_iter().any(|x| matches!(side(x), Ok(xa) if reach(xa, b)));
                                let axiom = if right { "GR'" } else { "GR''" };
                                r.check(
                                    ok,
                                    axiom,
                                    || vec![w(a), w(b), w(u), w(v)],
                                    || format!("no solution at i={i}, k={k}"),
                                );
                            }
                        }
                    }
                }
            }
        }
        let i = k - 1;
        for a in c.cells(k) {
            for b in c.cells(k) {
                budget.tick()?;
                if c.tgt(a) == c.tgt(b) {
                    let ok = c.cells(k).any(|x| matches!(c.comp(i, x, a), Ok(xa) if reach(xa, b)));
                    r.check(ok, "GR'", || vec![w(a), w(b)], || format!("x ⋆{i} a = b has no solution"));
                }
                if c.src(a) == c.src(b) {
                    let ok = c.cells(k).any(|x| matches!(c.comp(i, a, x), Ok(ax) if reach(ax, b)));
                    r.check(ok, "GR''", || vec![w(a), w(b)], || format!("a ⋆{i} x = b has no solution"));
                }
            }
        }
    }
    Ok(r)
}

/// A chosen weak inverse of one cell with its invertibility cells, before and
/// after adjointification.
#[derive(Clone, Debug)]
pub struct InverseEntry {
    pub cell: Cell,
    pub inverse: Cell,
    /// `i: 1 ⇒ z z*`
    pub unit: Option<Cell>,
    /// `e: z* z ⇒ 1`
    pub counit: Option<Cell>,
    /// `i' = i • (z e* z*) • (i* z z*)`
    pub adjoint_unit: Option<Cell>,
    /// `(i' z) • (z e)` is joined to the identity on `z`
    pub triangle: bool,
}

#[derive(Clone, Debug)]
pub struct InverseSystem {
    pub entries: Vec<InverseEntry>,
    pub report: Report,
}

fn directed(eq: &mut Equivs, from: Cell, to: Cell) -> Option<Cell> {
    for z in eq.between(from, to) {
        if eq.is_equiv(z) {
            return Some(z);
        }
    }
    for z in eq.between(to, from) {
        if let Some(w) = eq.inverse(z) {
            return Some(w);
        }
    }
    None
}

pub fn weak_inverses(c: &NCat) -> Res<InverseSystem> {
    let mut eq = Equivs::new(c);
    let mut r = Report::new();
    let mut entries = Vec::new();
    let n = c.n();
    for k in 1..=n {
        for z in c.cells(k) {
            let Some(w) = eq.inverse(z) else {
                r.push("search-failure", vec![wname(c, z)], "no weak inverse found");
                continue;
            };
            let mut e =
                InverseEntry { cell: z, inverse: w, unit: None, counit: None, adjoint_unit: None, triangle: true };
            if k < n {
                let (p, q) = (c.src(z), c.tgt(z));
                let zw = c.comp(k - 1, z, w)?;
                let wz = c.comp(k - 1, w, z)?;
                let i = directed(&mut eq, c.unit(p), zw);
                let ec = directed(&mut eq, wz, c.unit(q));
                let (Some(i), Some(ec)) = (i, ec) else {
                    r.push("search-failure", vec![wname(c, z)], "no invertibility cells found");
                    continue;
                };
                e.unit = Some(i);
                e.counit = Some(ec);
                let (Some(is), Some(es)) = (eq.inverse(i), eq.inverse(ec)) else {
                    r.push("search-failure", vec![wname(c, z)], "invertibility cells are not invertible");
                    continue;
                };
                let h = |a: Cell, b: Cell| c.comp(k - 1, a, b);
                let mid = h(h(z, es)?, w)?;
                let last = h(h(is, z)?, w)?;
                let adj = c.comp(k, c.comp(k, i, mid)?, last)?;
                e.adjoint_unit = Some(adj);
                let tri = c.comp(k, h(adj, z)?, h(z, ec)?)?;
                e.triangle = eq.joined(tri, c.unit(z));
                r.check(
                    e.triangle,
                    "triangle",
                    || vec![wname(c, z)],
                    || format!("(i' z)(z e) = {} is not joined to the identity", c.name(tri)),
                );
            }
            entries.push(e);
        }
    }
    Ok(InverseSystem { entries, report: r })
}

/// The three recursive predicates on a morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub h_surjective: bool,
    pub faithful: bool,
    pub equivalence: bool,
    pub witness: Option<String>,
}

/// The first target cell that is not reached up to an invertible cell, as
/// `(dimension, cell)`.
pub fn h_surjective_witness(f: &Morphism) -> Option<Cell> {
    let (c, d) = (&*f.dom, &*f.cod);
    let n = c.n();
    let mut eq = Equivs::new(d);
    for k in 0..=n {
        let cpar = if k > 0 { c.parallel_index(k) } else { HashMap::new() };
        let dpar = if k > 0 { d.parallel_index(k) } else { HashMap::new() };
        let pairs: Vec<Option<(Cell, Cell)>> = match k {
            0 => vec![None],
            1 => c.objects().flat_map(|u| c.objects().map(move |v| Some((u, v)))).collect(),
            _ => {
                let mut out = Vec::new();
                for group in c.parallel_index(k - 1).values() {
                    for &u in group {
                        for &v in group {
                            out.push(Some((Cell::new(k - 1, u), Cell::new(k - 1, v))));
                        }
                    }
                }
                out.sort();
                out
            }
        };
        for pr in pairs {
            let cells = |par: &HashMap<(u32, u32), Vec<u32>>, s: Cell, t: Cell| -> Vec<Cell> {
                par.get(&(s.idx, t.idx)).map(|v| v.iter().map(|&i| Cell::new(k, i)).collect()).unwrap_or_default()
            };
            let (xs, ys) = match pr {
                None => (c.objects().collect::<Vec<_>>(), d.objects().collect::<Vec<_>>()),
                Some((u, v)) => (cells(&cpar, u, v), cells(&dpar, f.apply(u), f.apply(v))),
            };
            for y in ys {
                let hit = xs.iter().any(|&x| {
                    let fx = f.apply(x);
                    if k == n {
                        fx == y
                    } else {
                        eq.joined(fx, y)
                    }
                });
                if !hit {
                    return Some(y);
                }
            }
        }
    }
    None
}

/// Two distinct parallel top cells with the same image.
pub fn faithful_witness(f: &Morphism) -> Option<(Cell, Cell)> {
    let c = &*f.dom;
    let n = c.n();
    let groups: Vec<Vec<u32>> = if n == 0 {
        vec![(0..c.count(0) as u32).collect()]
    } else {
        let mut g: Vec<Vec<u32>> = c.parallel_index(n).into_values().collect();
        g.sort();
        g
    };
    for g in groups {
        let mut seen: HashMap<Cell, Cell> = HashMap::new();
        for i in g {
            let x = Cell::new(n, i);
            if let Some(&prev) = seen.get(&f.apply(x)) {
                return Some((prev, x));
            }
            seen.insert(f.apply(x), x);
        }
    }
    None
}

pub fn classify(f: &Morphism) -> Classification {
    let hs = h_surjective_witness(f);
    let fw = faithful_witness(f);
    let witness = match (&hs, &fw) {
        (Some(y), _) => Some(format!("not reached: {}", wname(&f.cod, *y))),
        (None, Some((a, b))) => Some(format!("identified: {}, {}", wname(&f.dom, *a), wname(&f.dom, *b))),
        _ => None,
    };
    let (h, fa) = (hs.is_none(), fw.is_none());
    Classification { h_surjective: h, faithful: fa, equivalence: h && fa, witness }
}

/// Star-surjectivity of a functor of 1-groupoids: every arrow out of `F b` lifts
/// to an arrow out of `b`. Returns the first arrow with no lift.
pub fn star_surjective(f: &Morphism) -> Res<Option<(Cell, Cell)>> {
    if f.n() != 1 {
        return Err(CatError::DimMismatch("star-surjectivity is defined for 1-groupoids".into()));
    }
    let (c, d) = (&*f.dom, &*f.cod);
    for b in c.objects() {
        let lifts: Vec<Cell> = c.cells(1).filter(|&x| c.src(x) == b).map(|x| f.apply(x)).collect();
        if let Some(y) = d.cells(1).find(|&y| d.src(y) == f.apply(b) && !lifts.contains(&y)) {
            return Ok(Some((b, y)));
        }
    }
    Ok(None)
}

/// `Down`: `φ: 0 ⇒ F•G`, compared with the h-kernel of `G`.
/// `Up`: `φ: F•G ⇒ 0`, compared with the future fiber of `G`; this is what Ω and
/// π1 produce from a `Down` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Down,
    Up,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Down => Orientation::Up,
            Orientation::Up => Orientation::Down,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExactTriple {
    pub f: Morphism,
    pub phi: Transf2,
    pub g: Morphism,
    pub orientation: Orientation,
    pub kernel: HFiber,
    pub comparison: Morphism,
    pub exact: bool,
    pub witness: Option<String>,
}

/// The map to the terminal n-category.
pub fn bang(c: &Arc<NCat>) -> Res<Morphism> {
    Morphism::constant(c.clone(), Arc::new(fixtures::terminal(c.n())), Cell::new(0, 0))
}

pub fn is_exact_oriented(f: &Morphism, phi: &Transf2, g: &Morphism, o: Orientation) -> Res<ExactTriple> {
    if f.cod != g.dom {
        return Err(CatError::Boundary("the two morphisms are not composable".into()));
    }
    if !f.is_pointed() || !g.is_pointed() {
        return Err(CatError::Unpointed);
    }
    let zero = Morphism::zero(f.dom.clone(), g.cod.clone())?;
    let fg = f.then(g)?;
    let p = g.cod.require_point()?;
    let (want_src, want_tgt, kind) = match o {
        Orientation::Down => (&zero, &fg, FiberKind::Past),
        Orientation::Up => (&fg, &zero, FiberKind::Future),
    };
    if phi.src != *want_src || phi.tgt != *want_tgt {
        return Err(CatError::Boundary("the 2-morphism does not connect the zero morphism and the composite".into()));
    }
    let kernel = h_fiber(g, p, kind)?;
    let b = bang(&f.dom)?;
    let cone = match o {
        Orientation::Down => Cone { m: b, n: f.clone(), w: phi.clone() },
        Orientation::Up => Cone { m: f.clone(), n: b, w: phi.clone() },
    };
    let comparison = kernel.pb.mediate(&cone)?;
    let wit = h_surjective_witness(&comparison);
    let witness = wit.map(|y| format!("not reached: {}", wname(&kernel.pb.apex, y)));
    Ok(ExactTriple {
        f: f.clone(),
        phi: phi.clone(),
        g: g.clone(),
        orientation: o,
        kernel,
        comparison,
        exact: wit.is_none(),
        witness,
    })
}

/// Exactness with the orientation read off the 2-morphism.
pub fn is_exact(f: &Morphism, phi: &Transf2, g: &Morphism) -> Res<ExactTriple> {
    let zero = Morphism::zero(f.dom.clone(), g.cod.clone())?;
    let o = if phi.src == zero { Orientation::Down } else { Orientation::Up };
    is_exact_oriented(f, phi, g, o)
}

/// The connecting data of `F: B → C` at objects `β`, `β'` of `B`.
#[derive(Clone, Debug)]
pub struct Connecting {
    /// past fiber of `F` over `Fβ`
    pub kernel: HFiber,
    /// `P_{β,β'}(B)`
    pub source: LoopSpace,
    /// `P_{Fβ,Fβ'}(C)`
    pub target: LoopSpace,
    /// `∇: P_{Fβ,Fβ'}(C) → K`
    pub nabla: Morphism,
    /// `P(F): P_{β,β'}(B) → P_{Fβ,Fβ'}(C)`
    pub pf: Morphism,
    /// `σ: L1 ⇒ P(F)•∇`, with `L1` constant at `(*, 1, β)`
    pub sigma: Transf2,
    pub report: Report,
}

pub fn connecting(f: &Morphism, beta: Cell, beta2: Cell) -> Res<Connecting> {
    let (b, c) = (f.dom.clone(), f.cod.clone());
    if beta.dim != 0 || beta2.dim != 0 {
        return Err(CatError::NotObject);
    }
    let (fb, fb2) = (f.apply(beta), f.apply(beta2));
    let kernel = h_fiber(f, fb, FiberKind::Past)?;
    let target = path_space(&c, fb, fb2)?;
    let source = path_space(&b, beta, beta2)?;
    let x = target.apex().clone();
    let nabla = kernel.pb.mediate(&Cone {
        m: target.pb.proj_left.clone(),
        n: Morphism::constant(x, b.clone(), beta2)?,
        w: target.pb.eps.clone(),
    })?;
    let xb = source.apex().clone();
    let eps_f = Transf2::whisker_right(&source.pb.eps, f)?;
    let pf = target.pb.mediate(&Cone {
        m: source.pb.proj_left.clone(),
        n: source.pb.proj_right.clone(),
        w: eps_f.clone(),
    })?;
    let cone1 = Cone {
        m: source.pb.proj_left.clone(),
        n: Morphism::constant(xb.clone(), b.clone(), beta)?,
        w: Transf2::identity(&Morphism::constant(xb.clone(), c.clone(), fb)?),
    };
    let cone2 =
        Cone { m: source.pb.proj_left.clone(), n: Morphism::constant(xb.clone(), b.clone(), beta2)?, w: eps_f.clone() };
    let beta_part = Transf2::from_raw(cone1.n.clone(), cone2.n.clone(), source.pb.eps.raw().to_vec())?;
    let sigma =
        kernel.pb.mediate2(&cone1, &cone2, &Transf2::identity(&cone1.m), &beta_part, &Transf3::identity(&eps_f))?;
    let mut r = Report::new();
    let l2 = kernel.pb.mediate(&cone2)?;
    r.check(l2 == pf.then(&nabla)?, "connecting-factor", Vec::new, || "L2 differs from P(F)•∇".into());
    r.check(Transf2::whisker_right(&sigma, kernel.leg())? == beta_part, "sigma-leg", Vec::new, || {
        "σ•K differs from ε_B".into()
    });
    let st = star(&sigma, &kernel.pb.eps)?;
    r.check(st.is_identity(), "sigma-star", Vec::new, || "σ * φ is not an identity".into());
    r.merge_prefixed("sigma", validate_transf2(&sigma));
    let pointed = b.point() == Some(beta) && beta == beta2 && f.is_pointed();
    if pointed {
        let kl = kernel.leg().clone();
        let zero = Morphism::zero(nabla.dom.clone(), b.clone())?;
        let t1 = is_exact_oriented(&nabla, &Transf2::identity(&zero), &kl, Orientation::Down)?;
        let t2 = is_exact_oriented(&pf, &sigma, &nabla, Orientation::Down)?;
        let t3 = is_exact_oriented(&kl, &kernel.pb.eps, f, Orientation::Down)?;
        for (nm, t) in [("exact-nabla-K", t1), ("exact-PF-nabla", t2), ("exact-K-F", t3)] {
            r.check(
                t.exact,
                nm,
                || t.witness.clone().into_iter().collect(),
                || "comparison is not h-surjective".into(),
            );
        }
    }
    Ok(Connecting { kernel, source, target, nabla, pf, sigma, report: r })
}

/// A labelled chain of pointed morphisms with a 2-morphism between consecutive
/// pairs.
#[derive(Clone, Debug)]
pub struct Chain {
    pub labels: Vec<String>,
    pub nodes: Vec<Arc<NCat>>,
    pub maps: Vec<Morphism>,
    pub cells: Vec<Transf2>,
    pub orient: Vec<Orientation>,
    pub triples: Vec<ExactTriple>,
}

impl Chain {
    fn check(&mut self, r: &mut Report, prefix: &str) -> Res<()> {
        self.triples.clear();
        for j in 0..self.cells.len() {
            let t = is_exact_oriented(&self.maps[j], &self.cells[j], &self.maps[j + 1], self.orient[j])?;
            r.check(
                t.exact,
                "exact",
                || vec![format!("{prefix}{}", self.labels[j + 1])],
                || t.witness.clone().unwrap_or_default(),
            );
            self.triples.push(t);
        }
        Ok(())
    }

    pub fn all_exact(&self) -> bool {
        self.triples.iter().all(|t| t.exact)
    }
}

#[derive(Clone, Debug)]
pub struct FibrationSequence {
    pub chain: Chain,
    pub connecting: Connecting,
    pub report: Report,
}

/// `Ω²B → Ω²C → ΩK → ΩB → ΩC → K → B → C` for a pointed morphism `F: B → C`.
pub fn fibration_sequence(f: &Morphism) -> Res<FibrationSequence> {
    let p = f.dom.require_point()?;
    if !f.is_pointed() {
        return Err(CatError::Unpointed);
    }
    let conn = connecting(f, p, p)?;
    let kl = conn.kernel.leg().clone();
    let kappa = conn.kernel.pb.eps.clone();
    let zero = Morphism::zero(conn.nabla.dom.clone(), f.dom.clone())?;
    let id0 = Transf2::identity(&zero);
    let kc = conn.kernel.pb.apex.clone();
    let nodes = vec![
        omega(conn.source.apex())?.apex().clone(),
        omega(conn.target.apex())?.apex().clone(),
        omega(&kc)?.apex().clone(),
        conn.source.apex().clone(),
        conn.target.apex().clone(),
        kc,
        f.dom.clone(),
        f.cod.clone(),
    ];
    let labels = ["Ω²B", "Ω²C", "ΩK", "ΩB", "ΩC", "K", "B", "C"].map(String::from).to_vec();
    let maps = vec![
        omega_mor(&conn.pf)?,
        omega_mor(&conn.nabla)?,
        omega_mor(&kl)?,
        conn.pf.clone(),
        conn.nabla.clone(),
        kl,
        f.clone(),
    ];
    let cells =
        vec![omega_transf(&conn.sigma)?, omega_transf(&id0)?, omega_transf(&kappa)?, conn.sigma.clone(), id0, kappa];
    use Orientation::{Down, Up};
    let orient = vec![Up, Up, Up, Down, Down, Down];
    let mut chain = Chain { labels, nodes, maps, cells, orient, triples: Vec::new() };
    let mut r = conn.report.clone();
    chain.check(&mut r, "")?;
    Ok(FibrationSequence { chain, connecting: conn, report: r })
}

/// One row of the tower, over d-groupoids.
#[derive(Clone, Debug)]
pub struct Row {
    pub level: usize,
    pub chain: Chain,
}

/// Algebraic structure found on a bottom-row pointed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annotation {
    pub label: String,
    pub size: usize,
    pub group: bool,
    pub commutative: bool,
}

#[derive(Clone, Debug)]
pub struct Ziqqurath {
    pub rows: Vec<Row>,
    pub annotations: Vec<Annotation>,
    pub report: Report,
}

impl Ziqqurath {
    pub fn bottom(&self) -> &Row {
        self.rows.last().unwrap()
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.chain.nodes.len()).collect()
    }

    pub fn all_exact(&self) -> bool {
        self.rows.iter().all(|r| r.chain.all_exact())
    }
}

/// The same 2-morphism read against structurally equal endpoints.
pub fn retarget_transf(a: &Transf2, dom: Arc<NCat>, cod: Arc<NCat>) -> Res<Transf2> {
    let src = a.src.retarget(dom.clone(), cod.clone())?;
    let tgt = a.tgt.retarget(dom.clone(), cod.clone())?;
    let (d0, c0) = (a.dom_cat().clone(), a.cod_cat().clone());
    Transf2::from_fn(src, tgt, |x| {
        let y = a.apply(d0.get(x.dim, dom.name(x))?);
        cod.get(y.dim, c0.name(y))
    })
}

fn step(row: &Row, r: &mut Report) -> Res<Row> {
    let ch = &row.chain;
    let len = ch.nodes.len();
    let lvl = format!("level {}: ", row.level - 1);
    let e1: Vec<Arc<NCat>> = ch.nodes[..3].iter().map(|x| pi1(x)).collect::<Res<_>>()?;
    let e0: Vec<Arc<NCat>> = ch.nodes.iter().map(|x| pi0(x)).collect::<Res<_>>()?;
    for j in 0..3 {
        let glued = pi1(&ch.nodes[j + 3])?;
        r.check(
            glued.same_as(&e0[j]),
            "pi0-pi1-commute",
            || vec![format!("{lvl}{}", ch.labels[j])],
            || "π1π0 differs from π0π1".into(),
        );
    }
    let mut maps = vec![pi1_mor(&ch.maps[0])?, pi1_mor(&ch.maps[1])?];
    maps.push(pi1_mor(&ch.maps[2])?.retarget(e1[2].clone(), e0[0].clone())?);
    for j in 0..len - 1 {
        let m = pi0_mor(&ch.maps[j])?;
        if j + 3 < len - 1 {
            let lifted = pi1_mor(&ch.maps[j + 3])?.retarget(e0[j].clone(), e0[j + 1].clone())?;
            r.check(
                lifted == m,
                "pi0-pi1-commute",
                || vec![format!("{lvl}{}→", ch.labels[j])],
                || "π1π0 differs from π0π1 on a map".into(),
            );
        }
        maps.push(m);
    }
    let mut cells = vec![
        pi1_transf(&ch.cells[0])?,
        retarget_transf(&pi1_transf(&ch.cells[1])?, e1[1].clone(), e0[0].clone())?,
        retarget_transf(&pi1_transf(&ch.cells[2])?, e1[2].clone(), e0[1].clone())?,
    ];
    let mut orient: Vec<Orientation> = ch.orient[..3].iter().map(|o| o.flip()).collect();
    for j in 0..ch.cells.len() {
        cells.push(pi0_transf(&ch.cells[j])?);
        orient.push(ch.orient[j]);
    }
    let mut labels: Vec<String> = ch.labels[..3].iter().map(|l| format!("π1({l})")).collect();
    labels.extend(ch.labels.iter().map(|l| format!("π0({l})")));
    let mut nodes = e1;
    nodes.extend(e0);
    let mut chain = Chain { labels, nodes, maps, cells, orient, triples: Vec::new() };
    chain.check(r, &lvl)?;
    Ok(Row { level: row.level - 1, chain })
}

/// The tower of exact sequences of a pointed morphism of n-groupoids.
pub fn ziqqurath(f: &Morphism) -> Res<Ziqqurath> {
    for c in [&f.dom, &f.cod] {
        let g = is_ngroupoid(c);
        if let Some(v) = g.violations.first() {
            return Err(CatError::NotGroupoid(v.witness.join(", ")));
        }
    }
    let p = f.dom.require_point()?;
    if !f.is_pointed() {
        return Err(CatError::Unpointed);
    }
    let n = f.n();
    let mut r = Report::new();
    let kernel = h_fiber(f, f.cod.require_point()?, FiberKind::Past)?;
    let kl = kernel.leg().clone();
    let mut top = Chain {
        labels: vec!["K".into(), "B".into(), "C".into()],
        nodes: vec![kernel.pb.apex.clone(), f.dom.clone(), f.cod.clone()],
        maps: vec![kl.clone(), f.clone()],
        cells: vec![kernel.pb.eps.clone()],
        orient: vec![Orientation::Down],
        triples: Vec::new(),
    };
    top.check(&mut r, &format!("level {n}: "))?;
    let mut rows = vec![Row { level: n, chain: top }];
    if n >= 1 {
        let conn = connecting(f, p, p)?;
        r.merge_prefixed("connecting", conn.report.clone());
        let (b, c) = (&f.dom, &f.cod);
        let kc = kernel.pb.apex.clone();
        let sb = pi1_as_pi0_omega(b)?;
        let sc = pi1_as_pi0_omega(c)?;
        let delta_map = sc.then(&pi0_mor(&conn.nabla)?)?;
        let ps = pi0_transf(&conn.sigma)?;
        let w = Transf2::whisker_left(&sb, &ps)?;
        let pi1f = pi1_mor(f)?;
        let dsrc = Morphism::zero(sb.dom.clone(), delta_map.cod.clone())?;
        let dtgt = pi1f.then(&delta_map)?;
        if w.src.map() != dsrc.map() || w.tgt.map() != dtgt.map() {
            return Err(CatError::Check("𝔖 is not natural against F".into()));
        }
        let delta = Transf2::from_raw(dsrc, dtgt, w.raw().to_vec())?;
        let pk = pi0(&kc)?;
        let id0 = Transf2::identity(&Morphism::zero(sc.dom.clone(), pi0(b)?)?);
        let mut chain = Chain {
            labels: ["π1(K)", "π1(B)", "π1(C)", "π0(K)", "π0(B)", "π0(C)"].map(String::from).to_vec(),
            nodes: vec![pi1(&kc)?, pi1(b)?, pi1(c)?, pk, pi0(b)?, pi0(c)?],
            maps: vec![pi1_mor(&kl)?, pi1f, delta_map, pi0_mor(&kl)?, pi0_mor(f)?],
            cells: vec![pi1_transf(&kernel.pb.eps)?, delta, id0, pi0_transf(&kernel.pb.eps)?],
            orient: vec![Orientation::Up, Orientation::Down, Orientation::Down, Orientation::Down],
            triples: Vec::new(),
        };
        chain.check(&mut r, &format!("level {}: ", n - 1))?;
        rows.push(Row { level: n - 1, chain });
    }
    while rows.last().unwrap().level > 0 {
        let next = step(rows.last().unwrap(), &mut r)?;
        rows.push(next);
    }
    let annotations = annotate(&rows);
    Ok(Ziqqurath { rows, annotations, report: r })
}

/// Group structure on the bottom row: entry `j` is π1 of entry `j` one row up
/// whenever that entry exists.
fn annotate(rows: &[Row]) -> Vec<Annotation> {
    let bottom = &rows.last().unwrap().chain;
    let above = rows.len().checked_sub(2).map(|i| &rows[i].chain);
    bottom
        .nodes
        .iter()
        .enumerate()
        .map(|(j, x)| {
            let mut a =
                Annotation { label: bottom.labels[j].clone(), size: x.count(0), group: false, commutative: false };
            if let Some(y) = above.and_then(|ch| ch.nodes.get(j)) {
                if let Some(pt) = y.point() {
                    let loops = y.between(pt, pt);
                    let mul = |u: Cell, v: Cell| y.comp(0, u, v).ok();
                    let e = y.unit(pt);
                    a.group =
                        loops.iter().all(|&u| loops.iter().any(|&v| mul(u, v) == Some(e) && mul(v, u) == Some(e)));
                    a.commutative = loops.iter().all(|&u| loops.iter().all(|&v| mul(u, v) == mul(v, u)));
                }
            }
            a
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, Monoid};

    fn b(k: usize, m: usize) -> Arc<NCat> {
        Arc::new(fixtures::delooping(&Monoid::cyclic(k), m).unwrap())
    }

    #[test]
    fn groupoid_predicates() {
        for (label, c) in fixtures::standard_fixtures() {
            assert!(is_ngroupoid(&c).ok, "{label}");
            let kv = kv_condition(&c, &mut Budget::new(10_000_000)).unwrap();
            assert!(kv.ok, "{label}: {kv}");
        }
        let a = fixtures::arrow(1);
        let r = is_ngroupoid(&a);
        assert!(!r.ok);
        assert_eq!(r.violations[0].witness, ["1:f"]);
        assert!(!kv_condition(&a, &mut Budget::new(1_000_000)).unwrap().ok);
        let and = fixtures::delooping(&Monoid::and_monoid(), 1).unwrap();
        assert!(!is_ngroupoid(&and).ok);
        assert!(!kv_condition(&and, &mut Budget::new(1_000_000)).unwrap().ok);
        let cod = fixtures::codiscrete(&Monoid::and_monoid()).unwrap();
        assert!(is_ngroupoid(&cod).ok);
        assert!(kv_condition(&cod, &mut Budget::new(1_000_000)).unwrap().ok);
    }

    #[test]
    fn classify_basics() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let c = classify(&q);
        assert!(c.h_surjective && !c.faithful && !c.equivalence);
        let id = Morphism::identity(b(3, 2));
        assert!(classify(&id).equivalence);
        let i = Arc::new(fixtures::interval(1));
        let t = Arc::new(fixtures::terminal(1));
        let inc = Morphism::constant(t, i, Cell::new(0, 0)).unwrap();
        assert!(classify(&inc).equivalence);
    }

    #[test]
    fn inverses_in_codiscrete() {
        let c = fixtures::codiscrete(&Monoid::and_monoid()).unwrap();
        let s = weak_inverses(&c).unwrap();
        assert!(s.report.ok, "{}", s.report);
        let zero = c.get(1, "zero").unwrap();
        let e = s.entries.iter().find(|e| e.cell == zero).unwrap();
        assert!(e.adjoint_unit.is_some() && e.triangle);
        let s = weak_inverses(&b(4, 1)).unwrap();
        let g1 = Cell::new(1, 1);
        assert_eq!(s.entries.iter().find(|e| e.cell == g1).unwrap().inverse, Cell::new(1, 3));
    }

    #[test]
    fn star_surjectivity() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        assert_eq!(star_surjective(&q).unwrap(), None);
        let i = Arc::new(fixtures::interval(1));
        let t = Arc::new(fixtures::terminal(1));
        let inc = Morphism::constant(t, i, Cell::new(0, 0)).unwrap();
        assert!(star_surjective(&inc).unwrap().is_some());
    }

    #[test]
    fn kernel_triple_is_exact() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let k = crate::limits::h_kernel(&q).unwrap();
        let t = is_exact(k.leg(), &k.pb.eps, &q).unwrap();
        assert!(t.exact);
        assert!(t.comparison.is_identity());
    }

    #[test]
    fn exactness_around_identities() {
        let c = b(2, 1);
        let z = Morphism::zero(c.clone(), c.clone()).unwrap();
        let id = Morphism::identity(c.clone());
        assert!(is_exact(&z, &Transf2::identity(&z), &id).unwrap().exact);
        let t = is_exact(&id, &Transf2::identity(&z), &z).unwrap();
        assert!(!t.exact);
        assert!(t.witness.is_some());
    }

    #[test]
    fn connecting_for_quotient() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let p = q.dom.point().unwrap();
        let c = connecting(&q, p, p).unwrap();
        assert!(c.report.ok, "{}", c.report);
        assert_eq!(c.nabla.dom.count(0), 2);
        let id = Morphism::identity(q.cod.clone());
        let p = id.dom.point().unwrap();
        assert!(connecting(&id, p, p).unwrap().report.ok);
    }

    #[test]
    fn fibration_sequence_of_quotient() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let s = fibration_sequence(&q).unwrap();
        assert!(s.report.ok, "{}", s.report);
        assert_eq!(s.chain.nodes.len(), 8);
    }

    #[test]
    fn brown_six_term() {
        let q = fixtures::quotient(4, 2, 1).unwrap();
        let z = ziqqurath(&q).unwrap();
        assert!(z.report.ok, "{}", z.report);
        assert_eq!(z.row_lengths(), [3, 6]);
        let sizes: Vec<usize> = z.bottom().chain.nodes.iter().map(|x| x.count(0)).collect();
        assert_eq!(sizes, [2, 4, 2, 1, 1, 1]);
    }

    #[test]
    fn two_dimensional_tower() {
        let q = fixtures::quotient(4, 2, 2).unwrap();
        let z = ziqqurath(&q).unwrap();
        assert!(z.report.ok, "{}", z.report);
        assert_eq!(z.row_lengths(), [3, 6, 9]);
        assert!(z.annotations[..3].iter().all(|a| a.group && a.commutative));
    }
}
