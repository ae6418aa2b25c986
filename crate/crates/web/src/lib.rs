//! Browser bindings: generate a fixture, draw it, and compute the tower of a
//! quotient map.

use std::sync::Arc;

use serde_json::json;
use wasm_bindgen::prelude::*;

use ziqqurath_core::dot::{export_dot, DotOptions};
use ziqqurath_core::exactness::ziqqurath;
use ziqqurath_core::fixtures::{self, Fixture};
use ziqqurath_core::io::{self, Options, Value};
use ziqqurath_core::validate;

fn words(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

/// `line` is a fixture line such as `delooping Z/4 1`. Returns
/// `{ "summary", "ok", "report", "document" }` as JSON text.
#[wasm_bindgen]
pub fn generate(line: &str) -> Result<String, String> {
    let w = words(line);
    let (name, params) = w.split_first().ok_or("empty fixture line")?;
    let v = match fixtures::gen(name, params).map_err(|e| e.to_string())? {
        Fixture::Cat(c) => Value::Cat(Arc::new(c)),
        Fixture::Mor(f) => Value::Mor(f),
    };
    let (summary, report) = match &v {
        Value::Cat(c) => (c.summary(), validate(c)),
        Value::Mor(f) => {
            (format!("morphism from {} to {}", f.dom.summary(), f.cod.summary()), ziqqurath_core::validate_functor(f))
        }
        _ => unreachable!(),
    };
    let out = json!({
        "summary": summary,
        "ok": report.ok,
        "report": report.to_string(),
        "document": io::to_json(&v, Options::default()),
    });
    Ok(out.to_string())
}

/// DOT text for a category document. `dims` is a list like `"0,1,2"`.
#[wasm_bindgen]
pub fn dot(document: &str, dims: &str, identities: bool) -> Result<String, String> {
    let c = match io::parse(document, std::path::Path::new("."), Options::default()).map_err(|e| e.to_string())? {
        Value::Cat(c) => c,
        other => return Err(format!("expected an ncat document, found {}", other.kind())),
    };
    let dims = dims
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>().map_err(|_| format!("bad dimension {s:?}")))
        .collect::<Result<_, _>>()?;
    export_dot(&c, &DotOptions { dims, identities }).map_err(|e| e.to_string())
}

/// Row lengths, term sizes and exactness of the tower of `Z/k → Z/d` delooped `m` times.
#[wasm_bindgen]
pub fn tower(k: usize, d: usize, m: usize) -> Result<String, String> {
    let f = fixtures::quotient(k, d, m).map_err(|e| e.to_string())?;
    let z = ziqqurath(&f).map_err(|e| e.to_string())?;
    let rows: Vec<_> = z
        .rows
        .iter()
        .map(|r| {
            let terms: Vec<_> = r
                .chain
                .labels
                .iter()
                .zip(&r.chain.nodes)
                .map(|(l, c)| json!({ "label": l, "top": c.count(c.n()), "objects": c.count(0) }))
                .collect();
            json!({ "level": r.level, "terms": terms, "exact": r.chain.all_exact() })
        })
        .collect();
    let ann: Vec<_> = z
        .annotations
        .iter()
        .map(|a| json!({ "label": a.label, "size": a.size, "group": a.group, "abelian": a.commutative }))
        .collect();
    Ok(json!({ "rows": rows, "annotations": ann, "ok": z.report.ok }).to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generate_and_draw() {
        let g: serde_json::Value = serde_json::from_str(&generate("delooping Z/2").unwrap()).unwrap();
        assert_eq!(g["ok"], true);
        let s = dot(&g["document"].to_string(), "0,1", true).unwrap();
        assert_eq!(s.matches("->").count(), 2);
        assert!(generate("delooping S3 2").is_err());
        assert!(dot(&g["document"].to_string(), "0,5", true).is_err());
    }

    #[test]
    fn tower_rows() {
        let t: serde_json::Value = serde_json::from_str(&tower(4, 2, 1).unwrap()).unwrap();
        assert_eq!(t["ok"], true);
        assert_eq!(t["rows"][1]["terms"].as_array().unwrap().len(), 6);
    }
}
