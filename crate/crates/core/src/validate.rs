//! Exhaustive axiom checking and the shared `Report` type.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cat::{composable_pairs, Cell, NCat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
    pub detail: String,
    /// How many instances of this axiom failed; the witness is the least one.
    pub count: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Report { ok: true, violations: Vec::new() }
    }

    pub fn fail(axiom: &str, witness: Vec<String>, detail: impl Into<String>) -> Self {
        let mut r = Report::new();
        r.push(axiom, witness, detail);
        r
    }

    /// Records a failure; repeated failures of one axiom keep the least witness.
    pub fn push(&mut self, axiom: &str, witness: Vec<String>, detail: impl Into<String>) {
        self.ok = false;
        if let Some(v) = self.violations.iter_mut().find(|v| v.axiom == axiom) {
            v.count += 1;
            if witness < v.witness {
                v.witness = witness;
                v.detail = detail.into();
            }
            return;
        }
        self.violations.push(Violation { axiom: axiom.to_string(), witness, detail: detail.into(), count: 1 });
    }

    pub fn check(
        &mut self,
        cond: bool,
        axiom: &str,
        witness: impl FnOnce() -> Vec<String>,
        detail: impl FnOnce() -> String,
    ) {
        if !cond {
            self.push(axiom, witness(), detail());
        }
    }

    pub fn merge(&mut self, other: Report) {
        for v in other.violations {
            self.ok = false;
            match self.violations.iter_mut().find(|w| w.axiom == v.axiom) {
                Some(w) => {
                    w.count += v.count;
                    if v.witness < w.witness {
                        w.witness = v.witness;
                        w.detail = v.detail;
                    }
                }
                None => self.violations.push(v),
            }
        }
    }

    /// Merges with every axiom name prefixed.
    pub fn merge_prefixed(&mut self, prefix: &str, other: Report) {
        for mut v in other.violations {
            v.axiom = format!("{prefix}{}", v.axiom);
            self.ok = false;
            self.violations.push(v);
        }
    }

    pub fn has(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn get(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "FAIL {} x{}: [{}] {}", v.axiom, v.count, v.witness.join(", "), v.detail)?;
        }
        Ok(())
    }
}

fn names(c: &NCat, cells: &[Cell]) -> Vec<String> {
    cells.iter().map(|&x| format!("{}:{}", x.dim, c.name(x))).collect()
}

fn sorted_entries(c: &NCat, k: usize, m: usize) -> Vec<(Cell, Cell, Cell)> {
    let mut v: Vec<_> = c.comp_entries(k, m).collect();
    v.sort();
    v
}

/// Checks globular identities, the composition domain and axioms 1 to 5.
pub fn validate(c: &NCat) -> Report {
    let mut r = Report::new();
    let n = c.n();
    if !c.identities_complete() {
        for k in 0..n {
            for x in c.cells(k) {
                r.check(c.unit_opt(x).is_some(), "structure", || names(c, &[x]), || "missing identity".into());
            }
        }
        return r;
    }
    if let Some(p) = c.point() {
        r.check((p.idx as usize) < c.count(0), "structure", || vec![], || "point out of range".into());
    }
    for k in 2..=n {
        for x in c.cells(k) {
            let (s, t) = (c.src(x), c.tgt(x));
            r.check(
                c.src(s) == c.src(t) && c.tgt(s) == c.tgt(t),
                "globular",
                || names(c, &[x]),
                || "source and target are not parallel".into(),
            );
        }
    }
    for k in 0..n {
        for x in c.cells(k) {
            let e = c.unit(x);
            r.check(
                c.src(e) == x && c.tgt(e) == x,
                "unit-boundary",
                || names(c, &[x, e]),
                || "identity has the wrong boundary".into(),
            );
        }
    }
    for k in 1..=n {
        for m in 0..k {
            for (a, b, _) in sorted_entries(c, k, m) {
                r.check(
                    c.t_at(a, m) == c.s_at(b, m),
                    "comp-domain",
                    || names(c, &[a, b]),
                    || format!("entry along {m} for a non-composable pair"),
                );
            }
            for (a, b) in composable_pairs(c, k, m) {
                r.check(
                    c.comp_raw(m, a, b).is_some(),
                    "comp-domain",
                    || names(c, &[a, b]),
                    || format!("composable pair along {m} has no composite"),
                );
            }
        }
    }
    if !r.ok {
        return r;
    }
    check_axioms(c, &mut r);
    r
}

fn check_axioms(c: &NCat, r: &mut Report) {
    let n = c.n();
    for k in 1..=n {
        for m in 0..k {
            let entries = sorted_entries(c, k, m);
            for &(a, b, x) in &entries {
                // axiom 1
                let (sx, tx) = if m + 1 == k {
                    (Some(c.src(a)), Some(c.tgt(b)))
                } else {
                    (c.comp_raw(m, c.src(a), c.src(b)), c.comp_raw(m, c.tgt(a), c.tgt(b)))
                };
                if k > 0 {
                    r.check(
                        Some(c.src(x)) == sx && Some(c.tgt(x)) == tx,
                        "axiom-1",
                        || names(c, &[a, b, x]),
                        || format!("boundary of the composite along {m} is wrong"),
                    );
                }
            }
            for b in c.cells(k) {
                // axiom 2
                let l = c.unit_to(c.s_at(b, m), k);
                let rr = c.unit_to(c.t_at(b, m), k);
                r.check(
                    c.comp_raw(m, l, b) == Some(b) && c.comp_raw(m, b, rr) == Some(b),
                    "axiom-2",
                    || names(c, &[b]),
                    || format!("identities along {m} are not neutral"),
                );
            }
            if k < n {
                // axiom 3
                for &(a, b, x) in &entries {
                    let e = c.comp_raw(m, c.unit(a), c.unit(b));
                    r.check(
                        e == Some(c.unit(x)),
                        "axiom-3",
                        || names(c, &[a, b]),
                        || format!("identity of the composite along {m} differs from the composite of identities"),
                    );
                }
            }
            // axiom 4
            let mut by_first: BTreeMap<Cell, Vec<(Cell, Cell)>> = BTreeMap::new();
            for &(a, b, x) in &entries {
                by_first.entry(a).or_default().push((b, x));
            }
            for &(a, b, ab) in &entries {
                let Some(next) = by_first.get(&b) else { continue };
                for &(cc, bc) in next {
                    let left = c.comp_raw(m, ab, cc);
                    let right = c.comp_raw(m, a, bc);
                    r.check(
                        left.is_some() && left == right,
                        "axiom-4",
                        || names(c, &[a, b, cc]),
                        || format!("composition along {m} is not associative"),
                    );
                }
            }
        }
        // axiom 5: p < q < k
        for q in 1..k {
            let qpairs = sorted_entries(c, k, q);
            let mut by_first: BTreeMap<Cell, Vec<(Cell, Cell)>> = BTreeMap::new();
            for &(a, a2, x) in &qpairs {
                by_first.entry(a).or_default().push((a2, x));
            }
            for p in 0..q {
                for (a, b, ab) in sorted_entries(c, k, p) {
                    let (Some(la), Some(lb)) = (by_first.get(&a), by_first.get(&b)) else { continue };
                    for &(a2, aa2) in la {
                        for &(b2, bb2) in lb {
                            let Some(a2b2) = c.comp_raw(p, a2, b2) else { continue };
                            let left = c.comp_raw(p, aa2, bb2);
                            let right = c.comp_raw(q, ab, a2b2);
                            r.check(
                                left.is_some() && left == right,
                                "axiom-5",
                                || names(c, &[a, a2, b, b2]),
                                || format!("interchange fails for {p} < {q}"),
                            );
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn terminal_and_deloopings_validate() {
        assert!(validate(&fixtures::terminal(2)).ok);
        assert!(validate(&fixtures::delooping(&fixtures::Group::cyclic(3), 1).unwrap()).ok);
        assert!(validate(&fixtures::delooping(&fixtures::Group::cyclic(2), 3).unwrap()).ok);
    }

    #[test]
    fn corrupted_entry_is_witnessed() {
        let mut c = fixtures::delooping(&fixtures::Group::cyclic(3), 1).unwrap();
        let g1 = c.get(1, "g1").unwrap();
        let g0 = c.get(1, "g0").unwrap();
        c.set_comp(0, g1, g1, g0);
        let r = validate(&c);
        assert!(!r.ok);
        let v = r.get("axiom-4").expect("associativity must fail");
        assert!(v.witness.iter().any(|w| w == "1:g1"));
    }

    #[test]
    fn missing_entry_reported_as_domain() {
        let mut c = fixtures::delooping(&fixtures::Group::cyclic(3), 1).unwrap();
        let g1 = c.get(1, "g1").unwrap();
        c.remove_comp(0, g1, g1);
        let r = validate(&c);
        assert_eq!(r.get("comp-domain").unwrap().witness, vec!["1:g1", "1:g1"]);
    }
}
