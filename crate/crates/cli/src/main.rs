use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use ziqqurath_core::dot::{export_dot, DotOptions};
use ziqqurath_core::exactness::{self, Orientation};
use ziqqurath_core::io::{self, IoError, Options, Value};
use ziqqurath_core::search::Budget;
use ziqqurath_core::{construct, fixtures, functors, laws, limits, validate, validate_functor, validate_transf2};
use ziqqurath_core::{validate_transf3, CatError, Morphism, NCat, Report, Transf2};

#[derive(Parser)]
#[command(name = "ziqqurath", version, about = "Finite strict n-categories: limits, loop spaces and exact sequences")]
struct Cli {
    /// Print machine-readable JSON instead of a table
    #[arg(long, global = true)]
    json: bool,
    /// Search budget per check
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: usize,
    /// Load documents without checking the axioms
    #[arg(long, global = true)]
    no_validate: bool,
    /// Write unit entries of composition tables
    #[arg(long, global = true)]
    explicit_identities: bool,
    /// Write the resulting document to a file
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the axioms of any document
    Validate { file: PathBuf },
    /// Hom (n-1)-category between two objects
    Hom { file: PathBuf, x: String, y: String },
    /// Cartesian product of two categories
    Product { a: PathBuf, b: PathBuf },
    /// h-pullback of a cospan F, G
    Hpb { f: PathBuf, g: PathBuf },
    /// Strict pullback of a cospan F, G
    Pb { f: PathBuf, g: PathBuf },
    /// h-kernel of a pointed morphism
    Hkernel {
        g: PathBuf,
        /// Also write K.json, leg.json and kappa.json here
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Connected components of a groupoid, morphism or 2-morphism
    Pi0 { file: PathBuf },
    /// Fundamental (n-1)-groupoid at the base point
    Pi1 { file: PathBuf },
    /// Loop space at the base point
    Omega { file: PathBuf },
    /// Unit of the adjunction between components and discrete groupoids
    Eta { file: PathBuf },
    /// Run the law suites on three categories
    Laws { c: PathBuf, d: PathBuf, e: PathBuf },
    /// Check that every cell is invertible
    Groupoid { file: PathBuf },
    /// Check the lifting form of the groupoid condition
    Kv { file: PathBuf },
    /// Exactness of a triple F, phi, G
    Exact { f: PathBuf, phi: PathBuf, g: PathBuf },
    /// Connecting morphism of F between two objects (default: base point)
    Connect {
        f: PathBuf,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        beta2: Option<String>,
    },
    /// Fibration sequence of a pointed morphism
    Fibseq { f: PathBuf },
    /// Tower of exact sequences of a pointed morphism of groupoids
    Ziqqurath { f: PathBuf },
    /// Generate a fixture: terminal N, discrete K [N], interval [N], arrow [N],
    /// pair-groupoid K [N], delooping G M [N], codiscrete G, quotient K D [M], identity ...
    Gen { name: String, params: Vec<String> },
    /// Graphviz export of dimensions 0 to 2
    Dot {
        file: PathBuf,
        /// Dimensions to draw, from 0,1,2
        #[arg(long, value_delimiter = ',', default_values_t = [0usize, 1])]
        dims: Vec<usize>,
        /// Leave out identity cells
        #[arg(long)]
        no_identities: bool,
    },
}

/// A failed check, reported with exit status 1.
#[derive(Debug)]
struct CheckFailed;

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("check failed")
    }
}

impl std::error::Error for CheckFailed {}

struct Ctx {
    json: bool,
    budget: usize,
    opts: Options,
    out: Option<PathBuf>,
}

impl Ctx {
    fn load(&self, p: &Path) -> Result<Value> {
        Ok(io::load(p, self.opts)?)
    }

    fn cat(&self, p: &Path) -> Result<Arc<NCat>> {
        match self.load(p)? {
            Value::Cat(c) => Ok(c),
            v => bail!("{}: expected an ncat document, found {}", p.display(), v.kind()),
        }
    }

    fn mor(&self, p: &Path) -> Result<Morphism> {
        match self.load(p)? {
            Value::Mor(f) => Ok(f),
            v => bail!("{}: expected a morphism document, found {}", p.display(), v.kind()),
        }
    }

    fn transf2(&self, p: &Path) -> Result<Transf2> {
        match self.load(p)? {
            Value::Transf2(a) => Ok(a),
            v => bail!("{}: expected a transf2 document, found {}", p.display(), v.kind()),
        }
    }

    /// Prints a constructed value: a summary, or the document under --json.
    fn emit(&self, v: &Value) -> Result<()> {
        if let Some(p) = &self.out {
            io::save(p, v, self.opts)?;
        }
        if self.json {
            print!("{}", io::to_string(v, self.opts));
        } else {
            println!("{}", describe(v));
        }
        Ok(())
    }

    fn emit_many(&self, parts: Vec<(&str, Value)>) -> Result<()> {
        if let Some(p) = &self.out {
            io::save(p, &parts[0].1, self.opts)?;
        }
        if self.json {
            let m: serde_json::Map<String, serde_json::Value> =
                parts.iter().map(|(k, v)| (k.to_string(), io::to_json(v, self.opts))).collect();
            println!("{}", serde_json::to_string_pretty(&m)?);
        } else {
            for (k, v) in &parts {
                println!("{k}: {}", describe(v));
            }
        }
        Ok(())
    }

    /// Prints a report and turns failure into exit status 1.
    fn report(&self, title: &str, r: &Report) -> Result<()> {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&json!({ "check": title, "report": r }))?);
        } else {
            print!("{title}: {r}");
        }
        if r.ok {
            Ok(())
        } else {
            Err(CheckFailed.into())
        }
    }
}

fn describe(v: &Value) -> String {
    match v {
        Value::Cat(c) => {
            let pt = c.point().map(|p| format!(", point {}", c.name(p))).unwrap_or_default();
            format!("{}{pt}", c.summary())
        }
        Value::Mor(f) => format!("morphism {} -> {}", f.dom.summary(), f.cod.summary()),
        Value::Transf2(a) => {
            format!("2-morphism between morphisms {} -> {}", a.dom_cat().summary(), a.cod_cat().summary())
        }
        Value::Transf3(l) => {
            format!("3-morphism between morphisms {} -> {}", l.dom_cat().summary(), l.cod_cat().summary())
        }
    }
}

fn cat_sizes(c: &NCat) -> Vec<usize> {
    (0..=c.n()).map(|k| c.count(k)).collect()
}

fn run(cli: Cli) -> Result<()> {
    let cx = Ctx {
        json: cli.json,
        budget: cli.budget,
        opts: Options { no_validate: cli.no_validate, explicit_identities: cli.explicit_identities },
        out: cli.out,
    };
    match cli.cmd {
        Cmd::Validate { file } => {
            let lax = Options { no_validate: true, ..cx.opts };
            let v = io::load(&file, lax)?;
            let r = match &v {
                Value::Cat(c) => validate(c),
                Value::Mor(f) => {
                    let mut r = Report::new();
                    r.merge_prefixed("dom", validate(&f.dom));
                    r.merge_prefixed("cod", validate(&f.cod));
                    r.merge(validate_functor(f));
                    r
                }
                Value::Transf2(a) => validate_transf2(a),
                Value::Transf3(l) => validate_transf3(l),
            };
            cx.report(&format!("{} {}", v.kind(), file.display()), &r)
        }
        Cmd::Hom { file, x, y } => {
            let c = cx.cat(&file)?;
            let (x, y) = (c.get(0, &x)?, c.get(0, &y)?);
            cx.emit(&Value::Cat(Arc::new(c.hom(x, y)?)))
        }
        Cmd::Product { a, b } => {
            let (p, l, r) = construct::product(&cx.cat(&a)?, &cx.cat(&b)?)?;
            cx.emit_many(vec![("product", Value::Cat(p)), ("proj_left", Value::Mor(l)), ("proj_right", Value::Mor(r))])
        }
        Cmd::Hpb { f, g } => {
            let h = limits::h_pullback(&cx.mor(&f)?, &cx.mor(&g)?)?;
            cx.emit_many(vec![
                ("apex", Value::Cat(h.apex.clone())),
                ("proj_left", Value::Mor(h.proj_left.clone())),
                ("proj_right", Value::Mor(h.proj_right.clone())),
                ("eps", Value::Transf2(h.eps.clone())),
            ])
        }
        Cmd::Pb { f, g } => {
            let (p, l, r) = limits::strict_pullback(&cx.mor(&f)?, &cx.mor(&g)?)?;
            cx.emit_many(vec![("apex", Value::Cat(p)), ("proj_left", Value::Mor(l)), ("proj_right", Value::Mor(r))])
        }
        Cmd::Hkernel { g, out_dir } => {
            let k = limits::h_kernel(&cx.mor(&g)?)?;
            let parts = vec![
                ("K", Value::Cat(k.pb.apex.clone())),
                ("leg", Value::Mor(k.leg().clone())),
                ("kappa", Value::Transf2(k.pb.eps.clone())),
            ];
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(&dir).with_context(|| dir.display().to_string())?;
                for (nm, v) in &parts {
                    io::save(&dir.join(format!("{nm}.json")), v, cx.opts)?;
                }
            }
            cx.emit_many(parts)
        }
        Cmd::Pi0 { file } => cx.emit(&match cx.load(&file)? {
            Value::Cat(c) => Value::Cat(functors::pi0(&c)?),
            Value::Mor(f) => Value::Mor(functors::pi0_mor(&f)?),
            Value::Transf2(a) => Value::Transf2(functors::pi0_transf(&a)?),
            Value::Transf3(_) => bail!("pi0 applies to categories, morphisms and 2-morphisms"),
        }),
        Cmd::Pi1 { file } => cx.emit(&match cx.load(&file)? {
            Value::Cat(c) => Value::Cat(functors::pi1(&c)?),
            Value::Mor(f) => Value::Mor(functors::pi1_mor(&f)?),
            Value::Transf2(a) => Value::Transf2(functors::pi1_transf(&a)?),
            Value::Transf3(_) => bail!("pi1 applies to categories, morphisms and 2-morphisms"),
        }),
        Cmd::Omega { file } => cx.emit(&match cx.load(&file)? {
            Value::Cat(c) => Value::Cat(functors::omega(&c)?.apex().clone()),
            Value::Mor(f) => Value::Mor(functors::omega_mor(&f)?),
            Value::Transf2(a) => Value::Transf2(functors::omega_transf(&a)?),
            Value::Transf3(_) => bail!("omega applies to categories, morphisms and 2-morphisms"),
        }),
        Cmd::Eta { file } => {
            let c = cx.cat(&file)?;
            let (e, r) = functors::eta_and_triangles(&c, &[])?;
            if !r.ok {
                return cx.report("eta", &r);
            }
            cx.emit(&Value::Mor(e))
        }
        Cmd::Laws { c, d, e } => {
            let rep = laws::law_suite(&cx.cat(&c)?, &cx.cat(&d)?, &cx.cat(&e)?, cx.budget)?;
            if cx.json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!("{rep}");
            }
            if rep.all_pass() {
                Ok(())
            } else {
                Err(CheckFailed.into())
            }
        }
        Cmd::Groupoid { file } => cx.report("n-groupoid", &exactness::is_ngroupoid(&*cx.cat(&file)?)),
        Cmd::Kv { file } => {
            let r = exactness::kv_condition(&*cx.cat(&file)?, &mut Budget::new(cx.budget))?;
            cx.report("lifting condition", &r)
        }
        Cmd::Exact { f, phi, g } => {
            let t = exactness::is_exact(&cx.mor(&f)?, &cx.transf2(&phi)?, &cx.mor(&g)?)?;
            let o = match t.orientation {
                Orientation::Down => "down",
                Orientation::Up => "up",
            };
            if cx.json {
                let v = json!({
                    "exact": t.exact,
                    "orientation": o,
                    "kernel": cat_sizes(&t.kernel.pb.apex),
                    "witness": t.witness,
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("orientation {o}, kernel cells {:?}", cat_sizes(&t.kernel.pb.apex));
                match &t.witness {
                    None => println!("exact"),
                    Some(w) => println!("not exact: {w}"),
                }
            }
            if t.exact {
                Ok(())
            } else {
                Err(CheckFailed.into())
            }
        }
        Cmd::Connect { f, beta, beta2 } => {
            let f = cx.mor(&f)?;
            let obj = |s: Option<String>| -> Result<_> {
                Ok(match s {
                    Some(s) => f.dom.get(0, &s)?,
                    None => f.dom.require_point()?,
                })
            };
            let (b1, b2) = (obj(beta)?, obj(beta2)?);
            let c = exactness::connecting(&f, b1, b2)?;
            if cx.out.is_some() {
                cx.emit(&Value::Mor(c.nabla.clone()))?;
            } else if !cx.json {
                println!("nabla: {}", describe(&Value::Mor(c.nabla.clone())));
            }
            cx.report("connecting morphism", &c.report)
        }
        Cmd::Fibseq { f } => {
            let s = exactness::fibration_sequence(&cx.mor(&f)?)?;
            let ch = &s.chain;
            if cx.json {
                let v = json!({
                    "nodes": ch.labels.iter().zip(&ch.nodes).map(|(l, c)| json!({"label": l, "cells": cat_sizes(c)})).collect::<Vec<_>>(),
                    "exact": ch.triples.iter().map(|t| t.exact).collect::<Vec<_>>(),
                    "report": s.report,
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                for (j, (l, c)) in ch.labels.iter().zip(&ch.nodes).enumerate() {
                    let mark = match j.checked_sub(1).and_then(|i| ch.triples.get(i)) {
                        Some(t) if t.exact => "exact",
                        Some(_) => "NOT exact",
                        None => "",
                    };
                    println!("{l:<6} {:<20} {mark}", format!("{:?}", cat_sizes(c)));
                }
                print!("report: {}", s.report);
            }
            if s.report.ok {
                Ok(())
            } else {
                Err(CheckFailed.into())
            }
        }
        Cmd::Ziqqurath { f } => {
            let z = exactness::ziqqurath(&cx.mor(&f)?)?;
            if cx.json {
                let rows: Vec<_> = z
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "level": r.level,
                            "terms": r.chain.labels.iter().zip(&r.chain.nodes)
                                .map(|(l, c)| json!({"label": l, "cells": cat_sizes(c)})).collect::<Vec<_>>(),
                            "exact": r.chain.triples.iter().map(|t| t.exact).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                let ann: Vec<_> = z
                    .annotations
                    .iter()
                    .map(|a| json!({"label": a.label, "size": a.size, "group": a.group, "commutative": a.commutative}))
                    .collect();
                let v = json!({ "rows": rows, "annotations": ann, "report": z.report });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                for r in &z.rows {
                    let terms: Vec<String> = r
                        .chain
                        .labels
                        .iter()
                        .zip(&r.chain.nodes)
                        .map(|(l, c)| format!("{l}{:?}", cat_sizes(c)))
                        .collect();
                    println!("level {} ({} terms): {}", r.level, terms.len(), terms.join("  "));
                }
                for a in &z.annotations {
                    let kind = match (a.group, a.commutative) {
                        (true, true) => "abelian group",
                        (true, false) => "group",
                        _ => "pointed set",
                    };
                    println!("  {:<20} {:>3} elements, {kind}", a.label, a.size);
                }
                print!("report: {}", z.report);
            }
            if z.report.ok {
                Ok(())
            } else {
                Err(CheckFailed.into())
            }
        }
        Cmd::Gen { name, params } => {
            let ps: Vec<&str> = params.iter().map(String::as_str).collect();
            let v = match fixtures::gen(&name, &ps)? {
                fixtures::Fixture::Cat(c) => Value::Cat(Arc::new(c)),
                fixtures::Fixture::Mor(f) => Value::Mor(f),
            };
            if let Some(p) = &cx.out {
                io::save(p, &v, cx.opts)?;
            } else {
                print!("{}", io::to_string(&v, cx.opts));
            }
            Ok(())
        }
        Cmd::Dot { file, dims, no_identities } => {
            let c = cx.cat(&file)?;
            let opts = DotOptions { dims: dims.into_iter().collect::<BTreeSet<_>>(), identities: !no_identities };
            let s = export_dot(&c, &opts)?;
            match &cx.out {
                Some(p) => std::fs::write(p, s).with_context(|| p.display().to_string())?,
                None => print!("{s}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<CheckFailed>() => ExitCode::from(1),
        Err(e) => {
            let code = match e.downcast_ref::<IoError>() {
                Some(IoError::Invalid { .. }) => 1,
                _ if matches!(e.downcast_ref::<CatError>(), Some(CatError::Inconclusive)) => 1,
                _ => 2,
            };
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
