//! Products, terminal object and the suspension used by the loop comparison.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{Cell, Generated, NCat};
use crate::error::{CatError, Res};
use crate::morphism::Morphism;
use crate::transf::Transf2;

pub fn pair_name(a: &str, b: &str) -> String {
    format!("({a}|{b})")
}

/// `C × D` with both projections.
pub fn product(c: &Arc<NCat>, d: &Arc<NCat>) -> Res<(Arc<NCat>, Morphism, Morphism)> {
    if c.n() != d.n() {
        return Err(CatError::DimMismatch(format!("product of a {}-category and a {}-category", c.n(), d.n())));
    }
    let n = c.n();
    let mut p = NCat::empty(n);
    let mut idx: Vec<HashMap<(u32, u32), Cell>> = vec![HashMap::new(); n + 1];
    let mut back: Vec<Vec<(Cell, Cell)>> = vec![Vec::new(); n + 1];
    for k in 0..=n {
        for x in c.cells(k) {
            for y in d.cells(k) {
                let bnd = if k > 0 {
                    let s = idx[k - 1][&(c.src(x).idx, d.src(y).idx)];
                    let t = idx[k - 1][&(c.tgt(x).idx, d.tgt(y).idx)];
                    Some((s.idx, t.idx))
                } else {
                    None
                };
                let cell = p.add_cell(k, pair_name(c.name(x), d.name(y)), bnd)?;
                idx[k].insert((x.idx, y.idx), cell);
                back[k].push((x, y));
            }
        }
    }
    if let (Some(a), Some(b)) = (c.point(), d.point()) {
        p.set_point(Some(idx[0][&(a.idx, b.idx)]));
    }
    let (c2, d2) = (c.clone(), d.clone());
    let (idx2, back2) = (idx.clone(), back.clone());
    let gen = Generated {
        cat: p,
        unit: Box::new(|_, x| {
            let (a, b) = back[x.dim][x.idx as usize];
            Ok(idx[x.dim + 1][&(c.unit(a).idx, d.unit(b).idx)])
        }),
        compose: Box::new(move |_, m, x, y| {
            let (a, b) = back2[x.dim][x.idx as usize];
            let (a2, b2) = back2[y.dim][y.idx as usize];
            let r1 = c2.comp(m, a, a2)?;
            let r2 = d2.comp(m, b, b2)?;
            Ok(idx2[x.dim][&(r1.idx, r2.idx)])
        }),
    };
    let p = Arc::new(gen.finish()?);
    let bk = back.clone();
    let pi1 = Morphism::from_fn(p.clone(), c.clone(), |x| Ok(bk[x.dim][x.idx as usize].0))?;
    let pi2 = Morphism::from_fn(p.clone(), d.clone(), |x| Ok(back[x.dim][x.idx as usize].1))?;
    Ok((p, pi1, pi2))
}

/// The pairing `⟨F, G⟩: X → C × D` into a product built by [`product`].
pub fn pairing(p: &Arc<NCat>, f: &Morphism, g: &Morphism) -> Res<Morphism> {
    if f.dom != g.dom {
        return Err(CatError::Boundary("pairing of functors with different domains".into()));
    }
    let (f2, g2) = (f.clone(), g.clone());
    let p2 = p.clone();
    Morphism::from_fn(f.dom.clone(), p.clone(), move |x| {
        let a = f2.apply(x);
        let b = g2.apply(x);
        p2.get(x.dim, &pair_name(f2.cod.name(a), g2.cod.name(b)))
    })
}

/// `F × G: A × C → B × D` between products built by [`product`].
pub fn product_map(src: &Arc<NCat>, tgt: &Arc<NCat>, f: &Morphism, g: &Morphism) -> Res<Morphism> {
    let (_, p1, p2) = product(&f.dom, &g.dom)?;
    let p1 = p1.retarget(src.clone(), f.dom.clone())?;
    let p2 = p2.retarget(src.clone(), g.dom.clone())?;
    pairing(tgt, &p1.then(f)?, &p2.then(g)?)
}

/// `α × β` between products built by [`product`].
pub fn product_transf(src: &Arc<NCat>, tgt: &Arc<NCat>, a: &Transf2, b: &Transf2) -> Res<Transf2> {
    let f = product_map(src, tgt, &a.src, &b.src)?;
    let g = product_map(src, tgt, &a.tgt, &b.tgt)?;
    let (c, d) = (a.dom_cat().clone(), b.dom_cat().clone());
    let (e1, e2) = (a.cod_cat().clone(), b.cod_cat().clone());
    let (s2, t2) = (src.clone(), tgt.clone());
    Transf2::from_fn(f, g, move |x| {
        let nm = s2.name(x);
        // split "(p|q)" at the bar where both halves are cells
        let inner = &nm[1..nm.len() - 1];
        for (i, _) in inner.match_indices('|') {
            let (Ok(u), Ok(v)) = (c.get(x.dim, &inner[..i]), d.get(x.dim, &inner[i + 1..])) else { continue };
            let (au, bv) = (a.apply(u), b.apply(v));
            return t2.get(x.dim + 1, &pair_name(e1.name(au), e2.name(bv)));
        }
        Err(CatError::Invalid(format!("{nm} is not a pair")))
    })
}

/// The (n+1)-category with two objects `*0`, `*1`, hom `(*0, *1) = C`, and terminal
/// endo-homs.
pub fn suspension_tilde(c: &NCat) -> Res<NCat> {
    let n = c.n() + 1;
    let mut s = NCat::empty(n);
    let o0 = s.add_cell(0, "*0", None)?;
    let o1 = s.add_cell(0, "*1", None)?;
    let mut ids = [vec![o0], vec![o1]];
    for k in 1..=n {
        for (j, chain) in ids.iter_mut().enumerate() {
            let prev = *chain.last().unwrap();
            let e = s.add_cell(k, format!("*{j}"), Some((prev.idx, prev.idx)))?;
            s.set_ident(prev, e);
            chain.push(e);
        }
    }
    let mut map: Vec<Vec<Cell>> = vec![Vec::new(); n + 1];
    for k in 0..c.n() + 1 {
        for x in c.cells(k) {
            let bnd = if k == 0 {
                (o0.idx, o1.idx)
            } else {
                (map[k - 1][c.src(x).idx as usize].idx, map[k - 1][c.tgt(x).idx as usize].idx)
            };
            let y = s.add_cell(k + 1, c.name(x), Some(bnd))?;
            map[k].push(y);
        }
    }
    for k in 0..c.n() {
        for x in c.cells(k) {
            s.set_ident(map[k][x.idx as usize], map[k + 1][c.unit(x).idx as usize]);
        }
    }
    for k in 1..=n {
        for m in 1..k {
            for chain in &ids {
                s.set_comp(m, chain[k], chain[k], chain[k]);
            }
            for (a, b, r) in c.comp_entries(k - 1, m - 1) {
                let f = |x: Cell| map[k - 1][x.idx as usize];
                s.set_comp(m, f(a), f(b), f(r));
            }
        }
        for chain in &ids {
            s.set_comp(0, chain[k], chain[k], chain[k]);
        }
        for x in c.cells(k - 1) {
            let y = map[k - 1][x.idx as usize];
            s.set_comp(0, ids[0][k], y, y);
            s.set_comp(0, y, ids[1][k], y);
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, Monoid};
    use crate::validate::validate;

    #[test]
    fn klein_four() {
        let b = Arc::new(fixtures::delooping(&Monoid::cyclic(2), 1).unwrap());
        let (p, _, _) = product(&b, &b).unwrap();
        assert_eq!(p.count(0), 1);
        assert_eq!(p.count(1), 4);
        assert!(validate(&p).ok);
        let x = p.get(1, "(g1|g0)").unwrap();
        assert_eq!(p.comp(0, x, x).unwrap(), p.get(1, "(g0|g0)").unwrap());
    }

    #[test]
    fn product_homs_are_products() {
        let c = Arc::new(fixtures::interval(2));
        let d = Arc::new(fixtures::delooping(&Monoid::cyclic(2), 2).unwrap());
        let (p, _, _) = product(&c, &d).unwrap();
        let a = c.get(0, "a").unwrap();
        let b = c.get(0, "b").unwrap();
        let st = d.get(0, "*").unwrap();
        let h = p.hom(p.get(0, "(a|*)").unwrap(), p.get(0, "(b|*)").unwrap()).unwrap();
        let (q, _, _) = product(&Arc::new(c.hom(a, b).unwrap()), &Arc::new(d.hom(st, st).unwrap())).unwrap();
        assert!(h.same_as(&q));
    }

    #[test]
    fn suspension_shapes() {
        let s = suspension_tilde(&NCat::empty(0)).unwrap();
        assert_eq!(s.count(0), 2);
        assert_eq!(s.count(1), 2);
        assert!(validate(&s).ok);
        let d = fixtures::discrete_named(&["g0", "g1"], 0);
        let s = suspension_tilde(&d).unwrap();
        assert!(validate(&s).ok);
        let h = s.hom(s.get(0, "*0").unwrap(), s.get(0, "*1").unwrap()).unwrap();
        assert!(h.same_as(&d));
        let b = fixtures::delooping(&Monoid::cyclic(3), 2).unwrap();
        let s = suspension_tilde(&b).unwrap();
        assert!(validate(&s).ok, "{}", validate(&s));
    }
}
