//! Flat globular storage for finite strict n-categories.

use std::collections::HashMap;
use std::fmt;

use crate::error::{CatError, Res};

/// A cell reference: dimension plus index into that dimension's cell list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub dim: usize,
    pub idx: u32,
}

impl Cell {
    pub fn new(dim: usize, idx: u32) -> Self {
        Cell { dim, idx }
    }
}

/// A finite n-truncated reflexive globular set with composition tables.
///
/// `comp[k][m]` holds the partial map `cells[k] x cells[k] -> cells[k]` for `m < k`.
/// The source, target and identity maps are total by construction; composition
/// tables may be incomplete, which `validate` reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCat {
    n: usize,
    names: Vec<Vec<String>>,
    lookup: Vec<HashMap<String, u32>>,
    src: Vec<Vec<u32>>,
    tgt: Vec<Vec<u32>>,
    ident: Vec<Vec<u32>>,
    comp: Vec<Vec<HashMap<(u32, u32), u32>>>,
    point: Option<u32>,
}

impl NCat {
    /// The empty n-category.
    pub fn empty(n: usize) -> Self {
        NCat {
            n,
            names: vec![Vec::new(); n + 1],
            lookup: vec![HashMap::new(); n + 1],
            src: vec![Vec::new(); n + 1],
            tgt: vec![Vec::new(); n + 1],
            ident: vec![Vec::new(); n + 1],
            comp: (0..=n).map(|k| vec![HashMap::new(); k]).collect(),
            point: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, k: usize) -> usize {
        self.names.get(k).map_or(0, |v| v.len())
    }

    pub fn total_cells(&self) -> usize {
        (0..=self.n).map(|k| self.count(k)).sum()
    }

    pub fn cells(&self, k: usize) -> impl Iterator<Item = Cell> + '_ {
        (0..self.count(k) as u32).map(move |i| Cell::new(k, i))
    }

    pub fn objects(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells(0)
    }

    pub fn name(&self, c: Cell) -> &str {
        &self.names[c.dim][c.idx as usize]
    }

    pub fn names(&self, k: usize) -> &[String] {
        &self.names[k]
    }

    pub fn find(&self, dim: usize, name: &str) -> Option<Cell> {
        self.lookup.get(dim)?.get(name).map(|&i| Cell::new(dim, i))
    }

    pub fn get(&self, dim: usize, name: &str) -> Res<Cell> {
        self.find(dim, name).ok_or_else(|| CatError::UnknownCell { dim, name: name.to_string() })
    }

    pub fn point(&self) -> Option<Cell> {
        self.point.map(|i| Cell::new(0, i))
    }

    pub fn set_point(&mut self, p: Option<Cell>) {
        self.point = p.map(|c| c.idx);
    }

    pub fn with_point(mut self, p: Cell) -> Self {
        self.point = Some(p.idx);
        self
    }

    pub fn require_point(&self) -> Res<Cell> {
        self.point().ok_or(CatError::Unpointed)
    }

    /// Adds a cell; `bnd` is `(source, target)` indices in dimension `dim - 1`.
    pub fn add_cell(&mut self, dim: usize, name: impl Into<String>, bnd: Option<(u32, u32)>) -> Res<Cell> {
        let name = name.into();
        if dim > self.n {
            return Err(CatError::OutOfRange(format!("dimension {dim} exceeds {}", self.n)));
        }
        if self.lookup[dim].contains_key(&name) {
            return Err(CatError::Duplicate { dim, name });
        }
        let idx = self.names[dim].len() as u32;
        if dim > 0 {
            let (s, t) = bnd.ok_or_else(|| CatError::Invalid(format!("cell {name} needs a boundary")))?;
            if s as usize >= self.count(dim - 1) || t as usize >= self.count(dim - 1) {
                return Err(CatError::Invalid(format!("boundary of {name} out of range")));
            }
            self.src[dim].push(s);
            self.tgt[dim].push(t);
        }
        self.lookup[dim].insert(name.clone(), idx);
        self.names[dim].push(name);
        Ok(Cell::new(dim, idx))
    }

    /// Records `ident(c) = e`; the identity table must be filled for every cell below the top.
    pub fn set_ident(&mut self, c: Cell, e: Cell) {
        debug_assert_eq!(e.dim, c.dim + 1);
        let v = &mut self.ident[c.dim];
        if v.len() <= c.idx as usize {
            v.resize(c.idx as usize + 1, u32::MAX);
        }
        v[c.idx as usize] = e.idx;
    }

    pub fn set_comp(&mut self, m: usize, a: Cell, b: Cell, r: Cell) {
        debug_assert!(a.dim == b.dim && b.dim == r.dim && m < a.dim);
        self.comp[a.dim][m].insert((a.idx, b.idx), r.idx);
    }

    pub fn remove_comp(&mut self, m: usize, a: Cell, b: Cell) -> Option<Cell> {
        self.comp[a.dim][m].remove(&(a.idx, b.idx)).map(|i| Cell::new(a.dim, i))
    }

    pub fn set_src(&mut self, c: Cell, s: Cell) {
        self.src[c.dim][c.idx as usize] = s.idx;
    }

    pub fn set_tgt(&mut self, c: Cell, t: Cell) {
        self.tgt[c.dim][c.idx as usize] = t.idx;
    }

    /// True when every identity slot is filled.
    pub fn identities_complete(&self) -> bool {
        (0..self.n).all(|k| {
            self.ident[k].len() == self.count(k) && self.ident[k].iter().all(|&e| (e as usize) < self.count(k + 1))
        })
    }

    pub fn src(&self, c: Cell) -> Cell {
        assert!(c.dim > 0, "objects have no source");
        Cell::new(c.dim - 1, self.src[c.dim][c.idx as usize])
    }

    pub fn tgt(&self, c: Cell) -> Cell {
        assert!(c.dim > 0, "objects have no target");
        Cell::new(c.dim - 1, self.tgt[c.dim][c.idx as usize])
    }

    /// Iterated source `s_m`; the identity when `m >= dim`.
    pub fn s_at(&self, mut c: Cell, m: usize) -> Cell {
        while c.dim > m {
            c = self.src(c);
        }
        c
    }

    pub fn t_at(&self, mut c: Cell, m: usize) -> Cell {
        while c.dim > m {
            c = self.tgt(c);
        }
        c
    }

    pub fn unit(&self, c: Cell) -> Cell {
        assert!(c.dim < self.n, "top cells have no identity");
        Cell::new(c.dim + 1, self.ident[c.dim][c.idx as usize])
    }

    pub fn unit_opt(&self, c: Cell) -> Option<Cell> {
        let e = *self.ident.get(c.dim)?.get(c.idx as usize)?;
        ((e as usize) < self.count(c.dim + 1)).then(|| Cell::new(c.dim + 1, e))
    }

    /// Iterated identity `e_k(c)`.
    pub fn unit_to(&self, mut c: Cell, k: usize) -> Cell {
        while c.dim < k {
            c = self.unit(c);
        }
        c
    }

    pub fn unit_cell(&self, c: Cell, k: usize) -> Res<Cell> {
        if k < c.dim || k > self.n {
            return Err(CatError::OutOfRange(format!("cannot raise a {}-cell to dimension {k}", c.dim)));
        }
        Ok(self.unit_to(c, k))
    }

    pub fn is_identity(&self, c: Cell) -> bool {
        c.dim > 0 && self.unit(self.src(c)) == c
    }

    /// Raw table lookup for two cells of equal dimension.
    pub fn comp_raw(&self, m: usize, a: Cell, b: Cell) -> Option<Cell> {
        if a.dim != b.dim || m >= a.dim {
            return None;
        }
        self.comp[a.dim][m].get(&(a.idx, b.idx)).map(|&i| Cell::new(a.dim, i))
    }

    pub fn comp_entries(&self, k: usize, m: usize) -> impl Iterator<Item = (Cell, Cell, Cell)> + '_ {
        self.comp[k][m].iter().map(move |(&(a, b), &r)| (Cell::new(k, a), Cell::new(k, b), Cell::new(k, r)))
    }

    pub fn comp_len(&self, k: usize, m: usize) -> usize {
        self.comp[k][m].len()
    }

    pub fn composable(&self, m: usize, a: Cell, b: Cell) -> bool {
        m < a.dim.min(b.dim) && self.t_at(a, m) == self.s_at(b, m)
    }

    /// `a ⋆_m b`, whiskering the lower-dimensional argument by identities.
    pub fn comp(&self, m: usize, a: Cell, b: Cell) -> Res<Cell> {
        if m >= a.dim || m >= b.dim {
            return Err(CatError::DimMismatch(format!(
                "cannot compose a {}-cell and a {}-cell along {m}",
                a.dim, b.dim
            )));
        }
        if self.t_at(a, m) != self.s_at(b, m) {
            return Err(CatError::NotComposable { m, a: self.name(a).to_string(), b: self.name(b).to_string() });
        }
        let k = a.dim.max(b.dim);
        let (a2, b2) = (self.unit_to(a, k), self.unit_to(b, k));
        self.comp_raw(m, a2, b2).ok_or_else(|| CatError::Undefined {
            m,
            a: self.name(a2).to_string(),
            b: self.name(b2).to_string(),
        })
    }

    /// Named variant of [`NCat::comp`] for callers holding identifiers.
    pub fn compose_cells(&self, m: usize, a: &str, da: usize, b: &str, db: usize) -> Res<Cell> {
        let a = self.get(da, a)?;
        let b = self.get(db, b)?;
        self.comp(m, a, b)
    }

    /// Cells of dimension `k` with the given source and target.
    pub fn parallel_index(&self, k: usize) -> HashMap<(u32, u32), Vec<u32>> {
        let mut out: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
        if k == 0 {
            return out;
        }
        for c in self.cells(k) {
            out.entry((self.src[k][c.idx as usize], self.tgt[k][c.idx as usize])).or_default().push(c.idx);
        }
        out
    }

    pub fn between(&self, s: Cell, t: Cell) -> Vec<Cell> {
        let k = s.dim + 1;
        if k > self.n {
            return Vec::new();
        }
        self.cells(k).filter(|&c| self.src(c) == s && self.tgt(c) == t).collect()
    }

    /// Fills composites forced by the unit law when they are missing.
    pub fn fill_unit_entries(&mut self) {
        if !self.identities_complete() {
            return;
        }
        for k in 1..=self.n {
            for m in 0..k {
                for b in 0..self.count(k) as u32 {
                    let b = Cell::new(k, b);
                    let l = self.unit_to(self.s_at(b, m), k);
                    self.comp[k][m].entry((l.idx, b.idx)).or_insert(b.idx);
                    let r = self.unit_to(self.t_at(b, m), k);
                    self.comp[k][m].entry((b.idx, r.idx)).or_insert(b.idx);
                }
            }
        }
    }

    /// Whether the table entry `(a, b) -> r` is implied by the unit law.
    pub fn is_unit_entry(&self, m: usize, a: Cell, b: Cell, r: Cell) -> bool {
        let k = a.dim;
        (a == self.unit_to(self.s_at(b, m), k) && r == b) || (b == self.unit_to(self.t_at(a, m), k) && r == a)
    }

    /// Structural equality up to cell order: compares by identifiers.
    pub fn same_as(&self, other: &NCat) -> bool {
        if self.n != other.n || self.point().map(|p| self.name(p)) != other.point().map(|p| other.name(p)) {
            return false;
        }
        for k in 0..=self.n {
            if self.count(k) != other.count(k) {
                return false;
            }
            let tr = |c: Cell| other.find(c.dim, self.name(c));
            for c in self.cells(k) {
                let Some(d) = tr(c) else { return false };
                if k > 0 && (tr(self.src(c)) != Some(other.src(d)) || tr(self.tgt(c)) != Some(other.tgt(d))) {
                    return false;
                }
                if k < self.n && tr(self.unit(c)) != Some(other.unit(d)) {
                    return false;
                }
            }
            for m in 0..k {
                if self.comp_len(k, m) != other.comp_len(k, m) {
                    return false;
                }
                for (a, b, r) in self.comp_entries(k, m) {
                    let (Some(a2), Some(b2)) = (tr(a), tr(b)) else { return false };
                    if other.comp_raw(m, a2, b2) != tr(r) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Renames every cell through `f`, keeping the structure.
    pub fn renamed(&self, mut f: impl FnMut(Cell, &str) -> String) -> Res<NCat> {
        let mut out = self.clone();
        for k in 0..=self.n {
            out.lookup[k].clear();
            for i in 0..self.count(k) {
                let c = Cell::new(k, i as u32);
                let nm = f(c, self.name(c));
                if out.lookup[k].insert(nm.clone(), i as u32).is_some() {
                    return Err(CatError::Duplicate { dim: k, name: nm });
                }
                out.names[k][i] = nm;
            }
        }
        Ok(out)
    }

    /// The hom (n-1)-category between two objects.
    pub fn hom(&self, x: Cell, y: Cell) -> Res<NCat> {
        if self.n == 0 {
            return Err(CatError::OutOfRange("hom of a 0-category".into()));
        }
        if x.dim != 0 || y.dim != 0 {
            return Err(CatError::NotObject);
        }
        let mut out = NCat::empty(self.n - 1);
        let mut map: Vec<HashMap<u32, Cell>> = vec![HashMap::new(); self.n + 1];
        for k in 1..=self.n {
            for c in self.cells(k) {
                if self.s_at(c, 0) != x || self.t_at(c, 0) != y {
                    continue;
                }
                let bnd = if k > 1 {
                    Some((map[k - 1][&self.src(c).idx].idx, map[k - 1][&self.tgt(c).idx].idx))
                } else {
                    None
                };
                let h = out.add_cell(k - 1, self.name(c), bnd)?;
                map[k].insert(c.idx, h);
            }
        }
        for k in 1..self.n {
            for (&i, &h) in &map[k] {
                let e = self.unit(Cell::new(k, i));
                out.set_ident(h, map[k + 1][&e.idx]);
            }
        }
        for k in 2..=self.n {
            for m in 1..k {
                for (a, b, r) in self.comp_entries(k, m) {
                    if let (Some(&a2), Some(&b2), Some(&r2)) =
                        (map[k].get(&a.idx), map[k].get(&b.idx), map[k].get(&r.idx))
                    {
                        out.set_comp(m - 1, a2, b2, r2);
                    }
                }
            }
        }
        if x == y && self.n >= 1 {
            if let Some(p) = self.point() {
                if p == x {
                    out.set_point(map[1].get(&self.unit(x).idx).copied());
                }
            }
        }
        Ok(out)
    }

    /// Adds a top dimension of formal identities, named after their base cells.
    pub fn discretized(&self) -> NCat {
        let n = self.n;
        let mut out = self.clone();
        out.n = n + 1;
        out.names.push(self.names[n].clone());
        out.lookup.push(self.lookup[n].clone());
        let all: Vec<u32> = (0..self.count(n) as u32).collect();
        out.src.push(all.clone());
        out.tgt.push(all.clone());
        out.ident[n] = all;
        out.ident.push(Vec::new());
        let mut top = vec![HashMap::new(); n + 1];
        for (m, row) in top.iter_mut().enumerate().take(n) {
            for (&(a, b), &r) in &self.comp[n][m] {
                row.insert((a, b), r);
            }
        }
        for i in 0..self.count(n) as u32 {
            top[n].insert((i, i), i);
        }
        out.comp.push(top);
        out
    }

    pub fn summary(&self) -> String {
        let counts: Vec<String> = (0..=self.n).map(|k| self.count(k).to_string()).collect();
        format!("{}-category with cells [{}]", self.n, counts.join(", "))
    }
}

impl fmt::Display for NCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for k in 0..=self.n {
            let mut line = Vec::new();
            for c in self.cells(k) {
                if k == 0 {
                    line.push(self.name(c).to_string());
                } else {
                    line.push(format!("{}: {} -> {}", self.name(c), self.name(self.src(c)), self.name(self.tgt(c))));
                }
            }
            writeln!(f, "  dim {k}: {}", line.join("; "))?;
        }
        Ok(())
    }
}

/// Generates every composable pair `(a, b)` along `m` in dimension `k`.
pub fn composable_pairs(c: &NCat, k: usize, m: usize) -> Vec<(Cell, Cell)> {
    let mut by_src: HashMap<Cell, Vec<Cell>> = HashMap::new();
    for b in c.cells(k) {
        by_src.entry(c.s_at(b, m)).or_default().push(b);
    }
    let mut out = Vec::new();
    for a in c.cells(k) {
        if let Some(bs) = by_src.get(&c.t_at(a, m)) {
            out.extend(bs.iter().map(|&b| (a, b)));
        }
    }
    out
}

/// Builds an n-category from cells and boundaries, then fills identities and
/// composition tables from the supplied closures.
pub struct Generated<'a> {
    pub cat: NCat,
    pub unit: Box<dyn FnMut(&NCat, Cell) -> Res<Cell> + 'a>,
    pub compose: Box<dyn FnMut(&NCat, usize, Cell, Cell) -> Res<Cell> + 'a>,
}

impl Generated<'_> {
    pub fn finish(mut self) -> Res<NCat> {
        let n = self.cat.n;
        for k in 0..n {
            for c in self.cat.cells(k).collect::<Vec<_>>() {
                let e = (self.unit)(&self.cat, c)?;
                self.cat.set_ident(c, e);
            }
        }
        for k in 1..=n {
            for m in 0..k {
                for (a, b) in composable_pairs(&self.cat, k, m) {
                    let r = (self.compose)(&self.cat, m, a, b)?;
                    self.cat.set_comp(m, a, b, r);
                }
            }
        }
        Ok(self.cat)
    }
}
