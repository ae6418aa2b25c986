//! Backtracking enumeration of functors, isomorphisms, transformations and
//! modifications between small categories.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{Cell, NCat};
use crate::error::{CatError, Res};
use crate::morphism::Morphism;
use crate::transf::{validate_transf2, validate_transf3, Transf2, Transf3};

/// Counts search nodes against a budget.
pub struct Budget {
    left: usize,
}

impl Budget {
    pub fn new(n: usize) -> Self {
        Budget { left: n }
    }

    pub fn tick(&mut self) -> Res<()> {
        if self.left == 0 {
            return Err(CatError::Inconclusive);
        }
        self.left -= 1;
        Ok(())
    }
}

struct FunctorSearch<'a> {
    c: &'a NCat,
    d: &'a NCat,
    order: Vec<Cell>,
    par: HashMap<(usize, u32, u32), Vec<Cell>>,
    checks: HashMap<Cell, Vec<(usize, Cell, Cell, Cell)>>,
    injective: bool,
    assign: Vec<Vec<Option<u32>>>,
    used: Vec<Vec<bool>>,
    fixed: &'a dyn Fn(Cell) -> Option<Cell>,
    out: Vec<Vec<Vec<u32>>>,
    limit: usize,
}

impl FunctorSearch<'_> {
    fn get(&self, x: Cell) -> Option<Cell> {
        self.assign[x.dim][x.idx as usize].map(|i| Cell::new(x.dim, i))
    }

    fn candidates(&self, x: Cell) -> Vec<Cell> {
        if let Some(y) = (self.fixed)(x) {
            return vec![y];
        }
        if x.dim > 0 && self.c.is_identity(x) {
            return self.get(self.c.src(x)).map(|y| vec![self.d.unit(y)]).unwrap_or_default();
        }
        if x.dim == 0 {
            return self.d.cells(0).collect();
        }
        let (s, t) = (self.get(self.c.src(x)).unwrap(), self.get(self.c.tgt(x)).unwrap());
        self.par.get(&(x.dim, s.idx, t.idx)).cloned().unwrap_or_default()
    }

    fn consistent(&self, x: Cell) -> bool {
        if let Some(list) = self.checks.get(&x) {
            for &(m, a, b, r) in list {
                if let (Some(fa), Some(fb), Some(fr)) = (self.get(a), self.get(b), self.get(r)) {
                    if self.d.comp_raw(m, fa, fb) != Some(fr) {
                        return false;
                    }
                }
            }
        }
        if x.dim < self.c.n() {
            // identities of already assigned cells
            if let Some(e) = self.get(self.c.unit(x)) {
                if e != self.d.unit(self.get(x).unwrap()) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, i: usize, budget: &mut Budget) -> Res<()> {
        if self.out.len() >= self.limit {
            return Ok(());
        }
        if i == self.order.len() {
            self.out.push(self.assign.iter().map(|row| row.iter().map(|v| v.unwrap()).collect()).collect());
            return Ok(());
        }
        let x = self.order[i];
        for y in self.candidates(x) {
            budget.tick()?;
            if self.injective && self.used[y.dim][y.idx as usize] {
                continue;
            }
            self.assign[x.dim][x.idx as usize] = Some(y.idx);
            self.used[y.dim][y.idx as usize] = true;
            if self.consistent(x) {
                self.run(i + 1, budget)?;
            }
            self.used[y.dim][y.idx as usize] = false;
            self.assign[x.dim][x.idx as usize] = None;
        }
        Ok(())
    }
}

/// All functors `C → D` whose value on a cell agrees with `fixed` when it answers.
pub fn functors_with(
    c: &Arc<NCat>,
    d: &Arc<NCat>,
    fixed: &dyn Fn(Cell) -> Option<Cell>,
    injective: bool,
    limit: usize,
    budget: &mut Budget,
) -> Res<Vec<Morphism>> {
    if c.n() != d.n() {
        return Err(CatError::DimMismatch("functor search between different dimensions".into()));
    }
    let n = c.n();
    let order: Vec<Cell> = (0..=n).flat_map(|k| c.cells(k).collect::<Vec<_>>()).collect();
    let mut checks: HashMap<Cell, Vec<(usize, Cell, Cell, Cell)>> = HashMap::new();
    for k in 1..=n {
        for m in 0..k {
            for (a, b, r) in c.comp_entries(k, m) {
                for x in [a, b, r] {
                    checks.entry(x).or_default().push((m, a, b, r));
                }
            }
        }
    }
    let mut par: HashMap<(usize, u32, u32), Vec<Cell>> = HashMap::new();
    for k in 1..=n {
        for y in d.cells(k) {
            par.entry((k, d.src(y).idx, d.tgt(y).idx)).or_default().push(y);
        }
    }
    let mut s = FunctorSearch {
        c,
        d,
        order,
        par,
        checks,
        injective,
        assign: (0..=n).map(|k| vec![None; c.count(k)]).collect(),
        used: (0..=n).map(|k| vec![false; d.count(k)]).collect(),
        fixed,
        out: Vec::new(),
        limit,
    };
    s.run(0, budget)?;
    s.out.into_iter().map(|m| Morphism::from_map(c.clone(), d.clone(), m)).collect()
}

pub fn functors(c: &Arc<NCat>, d: &Arc<NCat>, budget: usize) -> Res<Vec<Morphism>> {
    functors_with(c, d, &|_| None, false, usize::MAX, &mut Budget::new(budget))
}

/// A structure-preserving bijection `C → D`, if one exists.
///
/// Returns `Err(Inconclusive)` when the search budget runs out first.
pub fn iso_search(c: &Arc<NCat>, d: &Arc<NCat>, budget: usize) -> Res<Option<Morphism>> {
    if c.n() != d.n() || (0..=c.n()).any(|k| c.count(k) != d.count(k)) {
        return Ok(None);
    }
    if let (Some(p), Some(q)) = (c.point(), d.point()) {
        let fixed = move |x: Cell| (x == p).then_some(q);
        let found = functors_with(c, d, &fixed, true, 1, &mut Budget::new(budget))?;
        return Ok(found.into_iter().next());
    }
    let found = functors_with(c, d, &|_| None, true, 1, &mut Budget::new(budget))?;
    Ok(found.into_iter().next())
}

/// All transformations `F ⇒ G`, built level by level with boundary filtering.
pub fn transformations(f: &Morphism, g: &Morphism, limit: usize, budget: usize) -> Res<Vec<Transf2>> {
    let c = f.dom.clone();
    let d = f.cod.clone();
    let n = c.n();
    let mut budget = Budget::new(budget);
    let mut out = Vec::new();
    let mut comp: Vec<Vec<u32>> = (0..n).map(|k| vec![0; c.count(k)]).collect();
    fill_levels(&c, &d, f, g, 0, &mut comp, &mut out, limit, &mut budget)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill_levels(
    c: &Arc<NCat>,
    d: &Arc<NCat>,
    f: &Morphism,
    g: &Morphism,
    k: usize,
    comp: &mut Vec<Vec<u32>>,
    out: &mut Vec<Transf2>,
    limit: usize,
    budget: &mut Budget,
) -> Res<()> {
    if out.len() >= limit {
        return Ok(());
    }
    let n = c.n();
    if k == n {
        let t = Transf2::from_raw(f.clone(), g.clone(), comp.clone())?;
        if validate_transf2(&t).ok {
            out.push(t);
        }
        return Ok(());
    }
    // The boundary of a level-k component only involves components below k.
    let probe = Transf2::from_raw(f.clone(), g.clone(), comp.clone())?;
    let lv = probe.levels();
    let mut options: Vec<Vec<u32>> = Vec::new();
    for x in c.cells(k) {
        let (Ok(s), Ok(t)) = ((lv[k].f)(&x), (lv[k].g)(&x)) else { return Ok(()) };
        let opts: Vec<u32> = if k + 1 < n && c.is_identity(x) {
            vec![d.unit(probe.apply(c.src(x))).idx]
        } else {
            d.between(s, t).into_iter().map(|y| y.idx).collect()
        };
        if opts.is_empty() {
            return Ok(());
        }
        options.push(opts);
    }
    let mut pick = vec![0usize; options.len()];
    loop {
        budget.tick()?;
        for (i, &p) in pick.iter().enumerate() {
            comp[k][i] = options[i][p];
        }
        fill_levels(c, d, f, g, k + 1, comp, out, limit, budget)?;
        if out.len() >= limit {
            return Ok(());
        }
        let mut i = 0;
        loop {
            if i == pick.len() {
                return Ok(());
            }
            pick[i] += 1;
            if pick[i] < options[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// All modifications `α ⇛ β`.
pub fn modifications(a: &Transf2, b: &Transf2, limit: usize, budget: usize) -> Res<Vec<Transf3>> {
    let c = a.dom_cat().clone();
    let d = a.cod_cat().clone();
    let n = c.n();
    let rows = n.saturating_sub(1);
    let mut budget = Budget::new(budget);
    let mut out = Vec::new();
    let mut comp: Vec<Vec<u32>> = (0..rows).map(|k| vec![0; c.count(k)]).collect();
    let mut options: Vec<(Cell, Vec<u32>)> = Vec::new();
    for k in 0..rows {
        for x in c.cells(k) {
            let opts: Vec<u32> = d
                .cells(k + 2)
                .filter(|&y| d.s_at(y, 0) == d.s_at(a.apply(x), 0) && d.t_at(y, 0) == d.t_at(a.apply(x), 0))
                .map(|y| y.idx)
                .collect();
            if opts.is_empty() {
                return Ok(out);
            }
            options.push((x, opts));
        }
    }
    let mut pick = vec![0usize; options.len()];
    loop {
        budget.tick()?;
        for (i, &p) in pick.iter().enumerate() {
            let (x, ref o) = options[i];
            comp[x.dim][x.idx as usize] = o[p];
        }
        let t = Transf3::from_raw(a.clone(), b.clone(), comp.clone())?;
        if validate_transf3(&t).ok {
            out.push(t);
            if out.len() >= limit {
                return Ok(out);
            }
        }
        let mut i = 0;
        loop {
            if i == pick.len() {
                return Ok(out);
            }
            pick[i] += 1;
            if pick[i] < options[i].1.len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::product;
    use crate::fixtures::{self, Monoid};

    fn b(k: usize, m: usize) -> Arc<NCat> {
        Arc::new(fixtures::delooping(&Monoid::cyclic(k), m).unwrap())
    }

    #[test]
    fn endomorphisms_of_z4() {
        let c = b(4, 1);
        assert_eq!(functors(&c, &c, 10_000).unwrap().len(), 4);
        assert_eq!(functors(&b(2, 1), &c, 10_000).unwrap().len(), 2);
    }

    #[test]
    fn iso_search_cases() {
        let c = b(4, 1);
        let found = iso_search(&c, &c, 10_000).unwrap().unwrap();
        assert_eq!(found.cod.count(1), 4);
        let (k, _, _) = product(&b(2, 1), &b(2, 1)).unwrap();
        assert!(iso_search(&c, &k, 10_000).unwrap().is_none());
        let (p, _, _) = product(&c, &Arc::new(fixtures::terminal(1))).unwrap();
        assert!(iso_search(&p, &c, 10_000).unwrap().is_some());
        assert_eq!(iso_search(&c, &c, 1).unwrap_err(), CatError::Inconclusive);
    }

    #[test]
    fn central_transformations() {
        let c = b(4, 1);
        let id = Morphism::identity(c.clone());
        assert_eq!(transformations(&id, &id, 100, 10_000).unwrap().len(), 4);
        let c2 = b(2, 2);
        let id2 = Morphism::identity(c2.clone());
        let ts = transformations(&id2, &id2, 100, 10_000).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(modifications(&ts[0], &ts[0], 100, 10_000).unwrap().len(), 2);
    }
}
