//! Graphviz export of the low dimensions.
//!
//! Objects are nodes and 1-cells are edges. With 2-cells requested, every drawn
//! 1-cell gets a small midpoint node and each 2-cell is a dashed edge between
//! the midpoints of its source and target.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::cat::{Cell, NCat};
use crate::error::{CatError, Res};

#[derive(Clone, Debug)]
pub struct DotOptions {
    pub dims: BTreeSet<usize>,
    pub identities: bool,
}

impl Default for DotOptions {
    fn default() -> Self {
        DotOptions { dims: [0, 1].into_iter().collect(), identities: true }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(c: &NCat, opts: &DotOptions) -> Res<String> {
    if let Some(&d) = opts.dims.iter().find(|&&d| d > 2) {
        return Err(CatError::Invalid(format!("cannot draw dimension {d}; use a subset of 0,1,2")));
    }
    let show1 = opts.dims.contains(&1) || opts.dims.contains(&2);
    let show2 = opts.dims.contains(&2) && c.n() >= 2;
    let shown = |x: Cell| opts.identities || !c.is_identity(x);
    let mut out = String::from("digraph {\n  rankdir=LR;\n");
    for x in c.objects() {
        let style = if c.point() == Some(x) { " peripheries=2" } else { "" };
        writeln!(out, "  {} [label={}{style}];", quote(&format!("0:{}", c.name(x))), quote(c.name(x))).unwrap();
    }
    if show1 && c.n() >= 1 {
        for f in c.cells(1).filter(|&f| shown(f)) {
            let (s, t) = (quote(&format!("0:{}", c.name(c.src(f)))), quote(&format!("0:{}", c.name(c.tgt(f)))));
            let label = quote(c.name(f));
            let dashed = if c.is_identity(f) { " style=dotted" } else { "" };
            if show2 {
                let mid = quote(&format!("1:{}", c.name(f)));
                writeln!(out, "  {mid} [shape=point label={label} xlabel={label}];").unwrap();
                writeln!(out, "  {s} -> {mid} [arrowhead=none{dashed}];").unwrap();
                writeln!(out, "  {mid} -> {t} [{}];", dashed.trim()).unwrap();
            } else {
                writeln!(out, "  {s} -> {t} [label={label}{dashed}];").unwrap();
            }
        }
    }
    if show2 {
        for a in c.cells(2).filter(|&a| shown(a)) {
            let (s, t) = (c.src(a), c.tgt(a));
            if !shown(s) || !shown(t) {
                continue;
            }
            writeln!(
                out,
                "  {} -> {} [label={} style=dashed constraint=false];",
                quote(&format!("1:{}", c.name(s))),
                quote(&format!("1:{}", c.name(t))),
                quote(c.name(a))
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, Monoid};

    fn count(s: &str) -> (usize, usize) {
        let nodes = s.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
        let edges = s.lines().filter(|l| l.contains("->")).count();
        (nodes, edges)
    }

    #[test]
    fn examples() {
        let d = DotOptions::default();
        let t = export_dot(&fixtures::terminal(1), &d).unwrap();
        assert_eq!(count(&t), (1, 1));
        assert!(t.contains("\"0:*\" -> \"0:*\""));
        let b = fixtures::delooping(&Monoid::cyclic(2), 1).unwrap();
        assert_eq!(count(&export_dot(&b, &d).unwrap()), (1, 2));
        let no_id = DotOptions { identities: false, ..DotOptions::default() };
        let i = export_dot(&fixtures::interval(1), &no_id).unwrap();
        assert_eq!(count(&i), (2, 2));
        assert!(i.contains("\"0:a\" -> \"0:b\" [label=\"f\"]"));
        assert!(i.contains("\"0:b\" -> \"0:a\" [label=\"g\"]"));
    }

    #[test]
    fn two_cells_and_errors() {
        let b = fixtures::delooping(&Monoid::cyclic(2), 2).unwrap();
        let opts = DotOptions { dims: [0, 1, 2].into_iter().collect(), identities: true };
        let s = export_dot(&b, &opts).unwrap();
        assert_eq!(s.lines().filter(|l| l.contains("style=dashed")).count(), 2);
        assert_eq!(s, export_dot(&b, &opts).unwrap());
        let bad = DotOptions { dims: [0, 3].into_iter().collect(), identities: true };
        assert!(export_dot(&b, &bad).is_err());
    }
}
