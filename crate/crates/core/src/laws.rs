//! Executable law suites for whiskering, vertical composition, products and the
//! star composite, checked on composable tuples drawn from three categories.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cat::NCat;
use crate::construct::{product, product_map, product_transf};
use crate::error::Res;
use crate::morphism::Morphism;
use crate::search::{functors, modifications, transformations};
use crate::transf::{star, validate_transf2, validate_transf3, Transf2, Transf3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// the budget ran out before every instance was checked
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub law: String,
    pub status: Status,
    pub instances: usize,
    pub failures: usize,
    pub witness: Option<Vec<String>>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub laws: Vec<LawResult>,
    pub instances: usize,
}

impl LawReport {
    /// No law failed; skipped laws do not count as failures.
    pub fn ok(&self) -> bool {
        self.laws.iter().all(|l| l.status != Status::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.status == Status::Pass)
    }

    pub fn failures(&self) -> usize {
        self.laws.iter().filter(|l| l.status == Status::Fail).count()
    }

    pub fn get(&self, law: &str) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.law == law)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        for l in &self.laws {
            write!(f, "{:<24} {:<8} {:>6}", l.law, l.status, l.instances)?;
            if let Some(w) = &l.witness {
                write!(f, "  [{}]", w.join(", "))?;
            }
            if let Some(d) = &l.detail {
                write!(f, "  {d}")?;
            }
            writeln!(f)?;
        }
        write!(f, "{} instances, {} failed laws", self.instances, self.failures())
    }
}

/// The reduced whiskerings of 2-morphisms under test. Replacing them lets a
/// harness check that the suite catches a broken implementation.
#[derive(Clone, Copy)]
pub struct Ops {
    pub whisker_left: fn(&Morphism, &Transf2) -> Res<Transf2>,
    pub whisker_right: fn(&Transf2, &Morphism) -> Res<Transf2>,
}

impl Default for Ops {
    fn default() -> Self {
        Ops { whisker_left: Transf2::whisker_left, whisker_right: Transf2::whisker_right }
    }
}

/// Caps on the enumerated universe of morphisms between each pair of categories.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub functors: usize,
    pub transformations: usize,
    pub modifications: usize,
    pub search: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { functors: 8, transformations: 2, modifications: 2, search: 200_000 }
    }
}

const NAMES: [&str; 3] = ["C", "D", "E"];

struct Uni {
    cats: Vec<Arc<NCat>>,
    funs: Vec<Vec<Vec<Morphism>>>,
    trs: Vec<Vec<Vec<Transf2>>>,
    mods: Vec<Vec<Vec<Transf3>>>,
    prods: HashMap<(usize, usize), Arc<NCat>>,
}

fn arrow(i: usize, j: usize) -> String {
    format!("{}→{}", NAMES[i], NAMES[j])
}

fn fl(i: usize, j: usize, k: usize) -> String {
    format!("F{k}:{}", arrow(i, j))
}

fn tl(i: usize, j: usize, k: usize) -> String {
    format!("α{k}:{}", arrow(i, j))
}

fn ml(i: usize, j: usize, k: usize) -> String {
    format!("Λ{k}:{}", arrow(i, j))
}

impl Uni {
    fn build(cats: [&Arc<NCat>; 3], caps: Caps) -> Res<Uni> {
        let cats: Vec<Arc<NCat>> = cats.into_iter().cloned().collect();
        let mut funs = vec![vec![Vec::new(); 3]; 3];
        let mut trs = vec![vec![Vec::new(); 3]; 3];
        let mut mods = vec![vec![Vec::new(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut fs = functors(&cats[i], &cats[j], caps.search)?;
                fs.truncate(caps.functors);
                let mut ts = Vec::new();
                for f in &fs {
                    for g in &fs {
                        ts.extend(transformations(f, g, caps.transformations, caps.search)?);
                    }
                }
                let mut ms = Vec::new();
                for a in &ts {
                    for b in &ts {
                        if a.src == b.src && a.tgt == b.tgt {
                            ms.extend(modifications(a, b, caps.modifications, caps.search)?);
                        }
                    }
                }
                funs[i][j] = fs;
                trs[i][j] = ts;
                mods[i][j] = ms;
            }
        }
        let mut prods = HashMap::new();
        for i in 0..3 {
            for j in 0..3 {
                prods.insert((i, j), product(&cats[i], &cats[j])?.0);
            }
        }
        Ok(Uni { cats, funs, trs, mods, prods })
    }

    fn id(&self, i: usize) -> Morphism {
        Morphism::identity(self.cats[i].clone())
    }
}

struct Law {
    res: LawResult,
    left: usize,
    complete: bool,
}

impl Law {
    fn new(name: &str, budget: usize) -> Law {
        let res = LawResult {
            law: name.into(),
            status: Status::Pass,
            instances: 0,
            failures: 0,
            witness: None,
            detail: None,
        };
        Law { res, left: budget, complete: true }
    }

    fn live(&self) -> bool {
        self.left > 0
    }

    /// Checks one instance; the first failing instance in enumeration order is
    /// kept as the witness.
    fn run(&mut self, w: impl FnOnce() -> Vec<String>, f: impl FnOnce() -> Res<bool>) {
        if self.left == 0 {
            self.complete = false;
            return;
        }
        self.left -= 1;
        self.res.instances += 1;
        let detail = match f() {
            Ok(true) => return,
            Ok(false) => "the two sides differ".to_string(),
            Err(e) => e.to_string(),
        };
        self.res.failures += 1;
        if self.res.witness.is_none() {
            self.res.witness = Some(w());
            self.res.detail = Some(detail);
        }
    }

    fn finish(mut self) -> LawResult {
        self.res.status = if self.res.failures > 0 {
            Status::Fail
        } else if !self.complete {
            Status::Skipped
        } else {
            Status::Pass
        };
        self.res
    }
}

/// All three-index chains `a → b → c` over the category indices.
fn chains3() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..3).flat_map(|a| (0..3).flat_map(move |b| (0..3).map(move |c| (a, b, c))))
}

fn chains4() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    chains3().flat_map(|(a, b, c)| (0..3).map(move |d| (a, b, c, d)))
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..3).flat_map(|a| (0..3).map(move |b| (a, b)))
}

/// Runs every law with the standard operations and caps; `budget` bounds the
/// instances checked per law.
pub fn law_suite(c: &Arc<NCat>, d: &Arc<NCat>, e: &Arc<NCat>, budget: usize) -> Res<LawReport> {
    law_suite_with(Ops::default(), Caps::default(), [c, d, e], budget)
}

pub fn law_suite_with(ops: Ops, caps: Caps, cats: [&Arc<NCat>; 3], budget: usize) -> Res<LawReport> {
    let u = Uni::build(cats, caps)?;
    let mut out = Vec::new();
    sesqui(&u, ops, budget, &mut out)?;
    primed(&u, budget, &mut out);
    double_primed(&u, budget, &mut out);
    star_laws(&u, budget, &mut out);
    sesqui2(&u, budget, &mut out);
    let instances = out.iter().map(|l| l.instances).sum();
    Ok(LawReport { laws: out, instances })
}

fn sesqui(u: &Uni, ops: Ops, budget: usize, out: &mut Vec<LawResult>) -> Res<()> {
    let (wl, wr) = (ops.whisker_left, ops.whisker_right);
    let vc = |a: &Transf2, b: &Transf2| a.vcompose(b);

    let mut l = Law::new("(L1)", budget);
    let mut r = Law::new("(R1)", budget);
    let mut cl = Law::new("vcompose closure", budget);
    for (i, j) in pairs() {
        for (k, a) in u.trs[i][j].iter().enumerate() {
            l.run(|| vec![tl(i, j, k)], || Ok(wl(&u.id(i), a)? == *a));
            r.run(|| vec![tl(i, j, k)], || Ok(wr(a, &u.id(j))? == *a));
            for (k2, b) in u.trs[i][j].iter().enumerate() {
                if a.tgt == b.src && cl.live() {
                    cl.run(|| vec![tl(i, j, k), tl(i, j, k2)], || Ok(validate_transf2(&vc(a, b)?).ok));
                }
            }
        }
    }
    out.extend([l.finish(), r.finish(), cl.finish()]);

    let mut l = Law::new("(L2)", budget);
    let mut lr = Law::new("(LR5)", budget);
    let mut r = Law::new("(R2)", budget);
    for (h, m, i, j) in chains4() {
        for (p, a2) in u.funs[h][m].iter().enumerate() {
            for (q, a) in u.funs[m][i].iter().enumerate() {
                for (k, al) in u.trs[i][j].iter().enumerate() {
                    l.run(
                        || vec![fl(h, m, p), fl(m, i, q), tl(i, j, k)],
                        || Ok(wl(&a2.then(a)?, al)? == wl(a2, &wl(a, al)?)?),
                    );
                }
            }
        }
        // reading the chain as a, α, b
        for (p, a) in u.funs[h][m].iter().enumerate() {
            for (k, al) in u.trs[m][i].iter().enumerate() {
                for (q, b) in u.funs[i][j].iter().enumerate() {
                    lr.run(
                        || vec![fl(h, m, p), tl(m, i, k), fl(i, j, q)],
                        || Ok(wr(&wl(a, al)?, b)? == wl(a, &wr(al, b)?)?),
                    );
                }
            }
        }
        for (k, al) in u.trs[h][m].iter().enumerate() {
            for (p, b) in u.funs[m][i].iter().enumerate() {
                for (q, b2) in u.funs[i][j].iter().enumerate() {
                    r.run(
                        || vec![tl(h, m, k), fl(m, i, p), fl(i, j, q)],
                        || Ok(wr(al, &b.then(b2)?)? == wr(&wr(al, b)?, b2)?),
                    );
                }
            }
        }
    }
    out.extend([l.finish(), r.finish()]);

    let mut l3 = Law::new("(L3)", budget);
    let mut r3 = Law::new("(R3)", budget);
    let mut l4 = Law::new("(L4)", budget);
    let mut r4 = Law::new("(R4)", budget);
    for (h, i, j) in chains3() {
        for (p, a) in u.funs[h][i].iter().enumerate() {
            for (q, f) in u.funs[i][j].iter().enumerate() {
                l3.run(
                    || vec![fl(h, i, p), fl(i, j, q)],
                    || Ok(wl(a, &Transf2::identity(f))? == Transf2::identity(&a.then(f)?)),
                );
                r3.run(
                    || vec![fl(h, i, p), fl(i, j, q)],
                    || Ok(wr(&Transf2::identity(a), f)? == Transf2::identity(&a.then(f)?)),
                );
            }
            for (k, al) in u.trs[i][j].iter().enumerate() {
                for (k2, be) in u.trs[i][j].iter().enumerate() {
                    if al.tgt != be.src {
                        continue;
                    }
                    l4.run(
                        || vec![fl(h, i, p), tl(i, j, k), tl(i, j, k2)],
                        || Ok(wl(a, &vc(al, be)?)? == vc(&wl(a, al)?, &wl(a, be)?)?),
                    );
                }
            }
        }
        for (k, al) in u.trs[h][i].iter().enumerate() {
            for (k2, be) in u.trs[h][i].iter().enumerate() {
                if al.tgt != be.src {
                    continue;
                }
                for (p, b) in u.funs[i][j].iter().enumerate() {
                    r4.run(
                        || vec![tl(h, i, k), tl(h, i, k2), fl(i, j, p)],
                        || Ok(wr(&vc(al, be)?, b)? == vc(&wr(al, b)?, &wr(be, b)?)?),
                    );
                }
            }
        }
    }
    out.extend([l3.finish(), r3.finish(), l4.finish(), r4.finish(), lr.finish()]);

    // α: f ⇒ g: A → B, β: h ⇒ k: C → D
    let mut pi = Law::new("product interchange", budget);
    for (i, j, m, n) in chains4() {
        let (ac, ad, bd) = (&u.prods[&(i, m)], &u.prods[&(i, n)], &u.prods[&(j, n)]);
        for (k1, al) in u.trs[i][j].iter().enumerate() {
            for (k2, be) in u.trs[m][n].iter().enumerate() {
                pi.run(
                    || vec![tl(i, j, k1), tl(m, n, k2)],
                    || {
                        let (ida, idd) = (u.id(i), u.id(n));
                        let (ia, id_) = (Transf2::identity(&ida), Transf2::identity(&idd));
                        let one_be = product_transf(ac, ad, &ia, be)?;
                        let al_one = product_transf(ad, bd, al, &id_)?;
                        let f1 = product_map(ad, bd, &al.src, &idd)?;
                        let g1 = product_map(ad, bd, &al.tgt, &idd)?;
                        let one_h = product_map(ac, ad, &ida, &be.src)?;
                        let one_k = product_map(ac, ad, &ida, &be.tgt)?;
                        let lhs = vc(&wr(&one_be, &f1)?, &wl(&one_k, &al_one)?)?;
                        let rhs = vc(&wl(&one_h, &al_one)?, &wr(&one_be, &g1)?)?;
                        let both = product_transf(ac, bd, al, be)?;
                        Ok(lhs == both && rhs == both)
                    },
                );
            }
        }
    }
    out.push(pi.finish());
    Ok(())
}

fn primed(u: &Uni, budget: usize, out: &mut Vec<LawResult>) {
    let vc = |a: &Transf2, b: &Transf2| a.vcompose(b);
    let wl1 = Transf3::whisker1_left;
    let wr1 = Transf3::whisker1_right;
    let mut laws: Vec<Law> = ["(L1)'", "(R1)'", "(L2)'", "(R2)'", "(L3)'", "(R3)'", "(L4)'", "(R4)'", "(LR5)'"]
        .iter()
        .map(|n| Law::new(n, budget))
        .collect();
    for (i, j) in pairs() {
        let (trs, mods) = (&u.trs[i][j], &u.mods[i][j]);
        for (p, lam) in mods.iter().enumerate() {
            let lw = || vec![ml(i, j, p)];
            laws[0].run(lw, || Ok(wl1(&Transf2::identity(&lam.src.src), lam)? == *lam));
            laws[1].run(lw, || Ok(wr1(lam, &Transf2::identity(&lam.src.tgt))? == *lam));
            for (q, w) in trs.iter().enumerate().filter(|(_, w)| w.tgt == lam.src.src) {
                for (q2, w2) in trs.iter().enumerate().filter(|(_, w2)| w2.tgt == w.src) {
                    laws[2].run(
                        || vec![tl(i, j, q2), tl(i, j, q), ml(i, j, p)],
                        || Ok(wl1(&vc(w2, w)?, lam)? == wl1(w2, &wl1(w, lam)?)?),
                    );
                }
                for (q2, s) in trs.iter().enumerate().filter(|(_, s)| s.src == lam.src.tgt) {
                    laws[8].run(
                        || vec![tl(i, j, q), ml(i, j, p), tl(i, j, q2)],
                        || Ok(wr1(&wl1(w, lam)?, s)? == wl1(w, &wr1(lam, s)?)?),
                    );
                }
                for (p2, sg) in mods.iter().enumerate().filter(|(_, sg)| sg.src == lam.tgt) {
                    laws[6].run(
                        || vec![tl(i, j, q), ml(i, j, p), ml(i, j, p2)],
                        || Ok(wl1(w, &lam.compose2(sg)?)? == wl1(w, lam)?.compose2(&wl1(w, sg)?)?),
                    );
                }
            }
            for (q, s) in trs.iter().enumerate().filter(|(_, s)| s.src == lam.src.tgt) {
                for (q2, s2) in trs.iter().enumerate().filter(|(_, s2)| s2.src == s.tgt) {
                    laws[3].run(
                        || vec![ml(i, j, p), tl(i, j, q), tl(i, j, q2)],
                        || Ok(wr1(lam, &vc(s, s2)?)? == wr1(&wr1(lam, s)?, s2)?),
                    );
                }
                for (p2, sg) in mods.iter().enumerate().filter(|(_, sg)| sg.src == lam.tgt) {
                    laws[7].run(
                        || vec![ml(i, j, p), ml(i, j, p2), tl(i, j, q)],
                        || Ok(wr1(&lam.compose2(sg)?, s)? == wr1(lam, s)?.compose2(&wr1(sg, s)?)?),
                    );
                }
            }
        }
        for (k, a) in trs.iter().enumerate() {
            let ida = Transf3::identity(a);
            for (q, w) in trs.iter().enumerate().filter(|(_, w)| w.tgt == a.src) {
                laws[4].run(|| vec![tl(i, j, q), tl(i, j, k)], || Ok(wl1(w, &ida)? == Transf3::identity(&vc(w, a)?)));
            }
            for (q, s) in trs.iter().enumerate().filter(|(_, s)| s.src == a.tgt) {
                laws[5].run(|| vec![tl(i, j, k), tl(i, j, q)], || Ok(wr1(&ida, s)? == Transf3::identity(&vc(a, s)?)));
            }
        }
    }
    out.extend(laws.into_iter().map(Law::finish));
}

fn double_primed(u: &Uni, budget: usize, out: &mut Vec<LawResult>) {
    let wl0 = Transf3::whisker0_left;
    let wr0 = Transf3::whisker0_right;
    let mut laws: Vec<Law> = [
        "(L1)''", "(R1)''", "(L2)''", "(R2)''", "(L3)''", "(R3)''", "(L4)''", "(R4)''", "(LR5)''", "(LRW)^1", "(LRW)^2",
    ]
    .iter()
    .map(|n| Law::new(n, budget))
    .collect();
    for (i, j) in pairs() {
        for (p, lam) in u.mods[i][j].iter().enumerate() {
            laws[0].run(|| vec![ml(i, j, p)], || Ok(wl0(&u.id(i), lam)? == *lam));
            laws[1].run(|| vec![ml(i, j, p)], || Ok(wr0(lam, &u.id(j))? == *lam));
        }
    }
    for (g, h, i, j) in chains4() {
        for (p, e) in u.funs[h][i].iter().enumerate() {
            for (k, lam) in u.mods[i][j].iter().enumerate() {
                for (p2, e2) in u.funs[g][h].iter().enumerate() {
                    laws[2].run(
                        || vec![fl(g, h, p2), fl(h, i, p), ml(i, j, k)],
                        || Ok(wl0(&e2.then(e)?, lam)? == wl0(e2, &wl0(e, lam)?)?),
                    );
                }
            }
        }
        for (k, lam) in u.mods[g][h].iter().enumerate() {
            for (p, hh) in u.funs[h][i].iter().enumerate() {
                for (p2, h2) in u.funs[i][j].iter().enumerate() {
                    laws[3].run(
                        || vec![ml(g, h, k), fl(h, i, p), fl(i, j, p2)],
                        || Ok(wr0(lam, &hh.then(h2)?)? == wr0(&wr0(lam, hh)?, h2)?),
                    );
                }
            }
        }
        // E, Λ, H along g → h → i → j
        for (p, e) in u.funs[g][h].iter().enumerate() {
            for (k, lam) in u.mods[h][i].iter().enumerate() {
                for (p2, hh) in u.funs[i][j].iter().enumerate() {
                    laws[8].run(
                        || vec![fl(g, h, p), ml(h, i, k), fl(i, j, p2)],
                        || Ok(wr0(&wl0(e, lam)?, hh)? == wl0(e, &wr0(lam, hh)?)?),
                    );
                }
            }
            // the interchange law, split into its two one-sided halves
            let (trs, mods) = (&u.trs[h][i], &u.mods[h][i]);
            let ew = |t: &Transf2, hh: &Morphism| Transf2::whisker_right(&Transf2::whisker_left(e, t)?, hh);
            let e3 = |l: &Transf3, hh: &Morphism| wr0(&wl0(e, l)?, hh);
            for (k, lam) in mods.iter().enumerate() {
                for (p2, hh) in u.funs[i][j].iter().enumerate() {
                    for (q, w) in trs.iter().enumerate().filter(|(_, w)| w.tgt == lam.src.src) {
                        laws[9].run(
                            || vec![fl(g, h, p), tl(h, i, q), ml(h, i, k), fl(i, j, p2)],
                            || {
                                let lhs = e3(&Transf3::whisker1_left(w, lam)?, hh)?;
                                Ok(lhs == Transf3::whisker1_left(&ew(w, hh)?, &e3(lam, hh)?)?)
                            },
                        );
                    }
                    for (q, s) in trs.iter().enumerate().filter(|(_, s)| s.src == lam.src.tgt) {
                        laws[10].run(
                            || vec![fl(g, h, p), ml(h, i, k), tl(h, i, q), fl(i, j, p2)],
                            || {
                                let lhs = e3(&Transf3::whisker1_right(lam, s)?, hh)?;
                                Ok(lhs == Transf3::whisker1_right(&e3(lam, hh)?, &ew(s, hh)?)?)
                            },
                        );
                    }
                }
            }
        }
    }
    for (h, i, j) in chains3() {
        for (p, e) in u.funs[h][i].iter().enumerate() {
            for (k, a) in u.trs[i][j].iter().enumerate() {
                laws[4].run(
                    || vec![fl(h, i, p), tl(i, j, k)],
                    || Ok(wl0(e, &Transf3::identity(a))? == Transf3::identity(&Transf2::whisker_left(e, a)?)),
                );
            }
            for (k, lam) in u.mods[i][j].iter().enumerate() {
                for (k2, sg) in u.mods[i][j].iter().enumerate().filter(|(_, s)| s.src == lam.tgt) {
                    laws[6].run(
                        || vec![fl(h, i, p), ml(i, j, k), ml(i, j, k2)],
                        || Ok(wl0(e, &lam.compose2(sg)?)? == wl0(e, lam)?.compose2(&wl0(e, sg)?)?),
                    );
                }
            }
        }
        for (k, a) in u.trs[h][i].iter().enumerate() {
            for (p, hh) in u.funs[i][j].iter().enumerate() {
                laws[5].run(
                    || vec![tl(h, i, k), fl(i, j, p)],
                    || Ok(wr0(&Transf3::identity(a), hh)? == Transf3::identity(&Transf2::whisker_right(a, hh)?)),
                );
            }
        }
        for (k, lam) in u.mods[h][i].iter().enumerate() {
            for (k2, sg) in u.mods[h][i].iter().enumerate().filter(|(_, s)| s.src == lam.tgt) {
                for (p, hh) in u.funs[i][j].iter().enumerate() {
                    laws[7].run(
                        || vec![ml(h, i, k), ml(h, i, k2), fl(i, j, p)],
                        || Ok(wr0(&lam.compose2(sg)?, hh)? == wr0(lam, hh)?.compose2(&wr0(sg, hh)?)?),
                    );
                }
            }
        }
    }
    out.extend(laws.into_iter().map(Law::finish));
}

fn star_laws(u: &Uni, budget: usize, out: &mut Vec<LawResult>) {
    let wl = Transf2::whisker_left;
    let wr = Transf2::whisker_right;
    let vc = |a: &Transf2, b: &Transf2| a.vcompose(b);
    let mut laws: Vec<Law> = [
        "(L*A)",
        "(R*A)",
        "*-associativity 2",
        "*-identity (L)",
        "*-identity (R)",
        "*-functoriality (a)",
        "*-functoriality (b)",
        "*-strict",
    ]
    .iter()
    .map(|n| Law::new(n, budget))
    .collect();
    for (g, h, i, j) in chains4() {
        for (p, e) in u.funs[g][h].iter().enumerate() {
            for (k, a) in u.trs[h][i].iter().enumerate() {
                for (k2, b) in u.trs[i][j].iter().enumerate() {
                    laws[0].run(
                        || vec![fl(g, h, p), tl(h, i, k), tl(i, j, k2)],
                        || Ok(star(&wl(e, a)?, b)? == Transf3::whisker0_left(e, &star(a, b)?)?),
                    );
                }
            }
        }
        for (k, a) in u.trs[g][h].iter().enumerate() {
            for (k2, b) in u.trs[h][i].iter().enumerate() {
                for (p, l) in u.funs[i][j].iter().enumerate() {
                    laws[1].run(
                        || vec![tl(g, h, k), tl(h, i, k2), fl(i, j, p)],
                        || Ok(star(a, &wr(b, l)?)? == Transf3::whisker0_right(&star(a, b)?, l)?),
                    );
                }
            }
            for (p, m) in u.funs[h][i].iter().enumerate() {
                for (k2, b) in u.trs[i][j].iter().enumerate() {
                    laws[2].run(
                        || vec![tl(g, h, k), fl(h, i, p), tl(i, j, k2)],
                        || Ok(star(a, &wl(m, b)?)? == star(&wr(a, m)?, b)?),
                    );
                }
            }
        }
    }
    for (h, i, j) in chains3() {
        for (p, e) in u.funs[h][i].iter().enumerate() {
            for (k, a) in u.trs[i][j].iter().enumerate() {
                laws[3].run(
                    || vec![fl(h, i, p), tl(i, j, k)],
                    || Ok(star(&Transf2::identity(e), a)? == Transf3::identity(&wl(e, a)?)),
                );
            }
        }
        for (k, a) in u.trs[h][i].iter().enumerate() {
            for (p, hh) in u.funs[i][j].iter().enumerate() {
                laws[4].run(
                    || vec![tl(h, i, k), fl(i, j, p)],
                    || Ok(star(a, &Transf2::identity(hh))? == Transf3::identity(&wr(a, hh)?)),
                );
            }
            for (k2, b) in u.trs[i][j].iter().enumerate().filter(|(_, b)| b.is_strict()) {
                laws[7].run(
                    || vec![tl(h, i, k), tl(i, j, k2)],
                    || {
                        let s = star(a, b)?;
                        Ok(s.src == s.tgt && s.is_identity())
                    },
                );
            }
        }
        // α, β: F ⇒ G ⇒ H: h → i, γ: K ⇒ L: i → j
        for (k, a) in u.trs[h][i].iter().enumerate() {
            for (k2, b) in u.trs[h][i].iter().enumerate().filter(|(_, b)| b.src == a.tgt) {
                for (k3, c) in u.trs[i][j].iter().enumerate() {
                    laws[5].run(
                        || vec![tl(h, i, k), tl(h, i, k2), tl(i, j, k3)],
                        || {
                            let lhs = star(&vc(a, b)?, c)?;
                            let first = Transf3::whisker1_right(&star(a, c)?, &wr(b, &c.tgt)?)?;
                            let second = Transf3::whisker1_left(&wr(a, &c.src)?, &star(b, c)?)?;
                            Ok(lhs == first.compose2(&second)?)
                        },
                    );
                }
            }
        }
        // ω: D ⇒ E: h → i, α, β: F ⇒ G ⇒ H: i → j
        for (k, w) in u.trs[h][i].iter().enumerate() {
            for (k2, a) in u.trs[i][j].iter().enumerate() {
                for (k3, b) in u.trs[i][j].iter().enumerate().filter(|(_, b)| b.src == a.tgt) {
                    laws[6].run(
                        || vec![tl(h, i, k), tl(i, j, k2), tl(i, j, k3)],
                        || {
                            let lhs = star(w, &vc(a, b)?)?;
                            let first = Transf3::whisker1_left(&wl(&w.src, a)?, &star(w, b)?)?;
                            let second = Transf3::whisker1_right(&star(w, a)?, &wl(&w.tgt, b)?)?;
                            Ok(lhs == first.compose2(&second)?)
                        },
                    );
                }
            }
        }
    }
    out.extend(laws.into_iter().map(Law::finish));
}

fn sesqui2(u: &Uni, budget: usize, out: &mut Vec<LawResult>) {
    let wl = Transf2::whisker_left;
    let wr = Transf2::whisker_right;
    let vc = |a: &Transf2, b: &Transf2| a.vcompose(b);
    let mut laws: Vec<Law> = ["(iv)(a)", "(iv)(b)", "(iv)(c)", "(vi)"].iter().map(|n| Law::new(n, budget)).collect();
    for (h, i, j) in chains3() {
        // α: F ⇒ G, β: H ⇒ K
        for (k, a) in u.trs[h][i].iter().enumerate() {
            for (k2, b) in u.trs[i][j].iter().enumerate() {
                laws[0].run(
                    || vec![tl(h, i, k), tl(i, j, k2)],
                    || {
                        let s = star(a, b)?;
                        let src = vc(&wl(&a.src, b)?, &wr(a, &b.tgt)?)?;
                        let tgt = vc(&wr(a, &b.src)?, &wl(&a.tgt, b)?)?;
                        Ok(s.src == src && s.tgt == tgt && validate_transf3(&s).ok)
                    },
                );
            }
        }
        // Λ: α ⇛ ω: F ⇒ G, β: H ⇒ K
        for (k, lam) in u.mods[h][i].iter().enumerate() {
            for (k2, b) in u.trs[i][j].iter().enumerate() {
                laws[1].run(
                    || vec![ml(h, i, k), tl(i, j, k2)],
                    || {
                        let (a, w) = (&lam.src, &lam.tgt);
                        let lhs = star(a, b)?.compose2(&Transf3::whisker1_right(
                            &Transf3::whisker0_right(lam, &b.src)?,
                            &wl(&a.tgt, b)?,
                        )?)?;
                        let rhs = Transf3::whisker1_left(&wl(&a.src, b)?, &Transf3::whisker0_right(lam, &b.tgt)?)?
                            .compose2(&star(w, b)?)?;
                        Ok(lhs == rhs)
                    },
                );
            }
        }
        // ε: L ⇒ M, Λ: α ⇛ ω: F ⇒ G
        for (k, e) in u.trs[h][i].iter().enumerate() {
            for (k2, lam) in u.mods[i][j].iter().enumerate() {
                laws[2].run(
                    || vec![tl(h, i, k), ml(i, j, k2)],
                    || {
                        let (a, w) = (&lam.src, &lam.tgt);
                        let lhs = Transf3::whisker1_right(&Transf3::whisker0_left(&e.src, lam)?, &wr(e, &a.tgt)?)?
                            .compose2(&star(e, w)?)?;
                        let rhs = star(e, a)?.compose2(&Transf3::whisker1_left(
                            &wr(e, &a.src)?,
                            &Transf3::whisker0_left(&e.tgt, lam)?,
                        )?)?;
                        Ok(lhs == rhs)
                    },
                );
            }
        }
    }
    for (g, h, i, j) in chains4() {
        for (p, f) in u.funs[g][h].iter().enumerate() {
            for (p2, gg) in u.funs[h][i].iter().enumerate() {
                for (p3, hh) in u.funs[i][j].iter().enumerate() {
                    laws[3].run(
                        || vec![fl(g, h, p), fl(h, i, p2), fl(i, j, p3)],
                        || Ok(f.then(gg)?.then(hh)? == f.then(&gg.then(hh)?)?),
                    );
                }
            }
        }
    }
    out.extend(laws.into_iter().map(Law::finish));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, Monoid};

    fn b(k: usize, m: usize) -> Arc<NCat> {
        Arc::new(fixtures::delooping(&Monoid::cyclic(k), m).unwrap())
    }

    #[test]
    fn terminal_passes() {
        let t = Arc::new(fixtures::terminal(1));
        let r = law_suite(&t, &t, &t, 1000).unwrap();
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn deloopings_pass() {
        let r = law_suite(&b(2, 1), &b(4, 1), &b(2, 1), 5000).unwrap();
        assert!(r.all_pass(), "{r}");
        assert!(r.instances >= 1000);
        assert!(r.get("(LRW)^2").unwrap().instances > 0);
    }

    /// Shifts every component to the next parallel cell.
    fn shifted_left(a: &Morphism, al: &Transf2) -> Res<Transf2> {
        let good = Transf2::whisker_left(a, al)?;
        let d = good.cod_cat().clone();
        Transf2::from_fn(good.src.clone(), good.tgt.clone(), |x| {
            let y = good.apply(x);
            let par = d.between(d.src(y), d.tgt(y));
            let at = par.iter().position(|&z| z == y).unwrap();
            Ok(par[(at + 1) % par.len()])
        })
    }

    #[test]
    fn fault_injection_is_caught() {
        let ops = Ops { whisker_left: shifted_left, ..Ops::default() };
        let (c, d) = (b(2, 1), b(4, 1));
        let r = law_suite_with(ops, Caps::default(), [&c, &d, &c], 5000).unwrap();
        let lr5 = r.get("(LR5)").unwrap();
        assert_eq!(lr5.status, Status::Fail);
        let w = lr5.witness.as_ref().unwrap();
        assert_eq!(w.len(), 3);
        assert!(!r.ok());
    }

    #[test]
    fn small_budget_skips() {
        let r = law_suite(&b(2, 1), &b(2, 1), &b(2, 1), 3).unwrap();
        assert!(r.ok());
        assert!(r.laws.iter().any(|l| l.status == Status::Skipped));
        assert!(r.laws.iter().all(|l| l.instances <= 3));
    }
}
