//! Subcommand pipelines and their text, JSON and DOT renderings.
//!
//! Cached commands build a JSON artifact first and render only from it.

use std::fmt;

use hopfcat::chartab::CharacterTable;
use hopfcat::coideal::{build_coideal, left_kernel, parse_triple};
use hopfcat::cyclotomic::Cyclo;
use hopfcat::error::Error;
use hopfcat::fusion::{centralizer, double_irreps, Category, FusionSubcategory, Lattice, Method};
use hopfcat::group::{parse_group_spec, Group};
use hopfcat::hopf::{build_double, QTAlgebra};
use hopfcat::verify::{verify_group, Report, Suite, VerifyConfig};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::{CentralizerArgs, Format, GlobalArgs, VerifyArgs};

/// Largest group order whose normal subgroups are enumerated.
const SUBGROUP_BOUND: usize = 64;

/// Groups covered by `verify --group catalog`.
const CATALOG: [&str; 9] = ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z6", "S3", "D4", "Q8"];

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(e) => match e {
                Error::BoundExceeded { .. } => 3,
                Error::Parse { .. }
                | Error::UnknownName(_)
                | Error::NotAGroup(_)
                | Error::PreconditionViolated(_)
                | Error::MethodPreconditionViolated(_)
                | Error::NotClosed(_)
                | Error::Io(_) => 2,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub struct Context {
    args: GlobalArgs,
    cache: Cache,
}

impl Context {
    pub fn new(args: &GlobalArgs, cache: Cache) -> Context {
        Context {
            args: args.clone(),
            cache,
        }
    }

    fn group(&self) -> Result<Group> {
        let spec = self
            .args
            .group
            .as_deref()
            .ok_or_else(|| CliError::Usage("--group is required for this command".into()))?;
        Ok(parse_group_spec(spec)?)
    }

    fn max_dim(&self) -> usize {
        usize::try_from(self.args.max_algebra_dim).unwrap_or(usize::MAX)
    }

    /// Checked before any cache lookup, so a hit never hides the bound.
    fn check_dim(&self, g: &Group) -> Result<()> {
        let dim = g.order() * g.order();
        if dim > self.max_dim() {
            return Err(Error::BoundExceeded {
                what: "algebra dimension",
                value: dim,
                limit: self.max_dim(),
            }
            .into());
        }
        Ok(())
    }

    fn double(&self, g: &Group) -> Result<QTAlgebra> {
        self.check_dim(g)?;
        Ok(build_double(g, self.max_dim())?)
    }

    fn category(&self, g: &Group) -> Result<Category> {
        Ok(Category::new(self.double(g)?)?)
    }

    /// Text or JSON; `dot` is accepted only where a command offers it.
    fn emit(&self, json: &Value, text: impl FnOnce() -> String) -> Result<bool> {
        match self.args.format {
            Format::Json => print!("{}", pretty(json)),
            Format::Text => print!("{}", text()),
            Format::Dot => return Err(CliError::Usage("--format dot is only available for `subcats lattice`".into())),
        }
        Ok(true)
    }

    fn cached(&self, kind: &str, g: &Group, compute: impl FnOnce() -> Result<Value>) -> Result<Value> {
        let mut inner = None;
        let r = self.cache.get_or_compute(kind, g, g.name(), || match compute() {
            Ok(v) => Ok(v),
            Err(CliError::Lib(e)) => Err(e),
            Err(other) => {
                inner = Some(other);
                Err(Error::InternalMismatch(String::new()))
            }
        });
        match (r, inner) {
            (_, Some(e)) => Err(e),
            (r, None) => Ok(r?),
        }
    }

    pub fn group_info(&self) -> Result<bool> {
        let g = self.group()?;
        let classes = g.conjugacy_classes();
        let normal = g.normal_subgroups(SUBGROUP_BOUND)?;
        let json = json!({
            "group": g.name(),
            "order": g.order(),
            "abelian": g.is_abelian(),
            "exponent": g.exponent(),
            "classes": classes.iter().map(|c| json!({
                "representative": c.representative,
                "size": c.size(),
                "members": c.members,
            })).collect::<Vec<_>>(),
            "normal_subgroups": normal.iter().map(|s| s.members().to_vec()).collect::<Vec<_>>(),
        });
        self.emit(&json, || {
            let mut s = format!(
                "group {}\norder {}\nabelian {}\nexponent {}\n{} conjugacy classes\n",
                g.name(),
                g.order(),
                g.is_abelian(),
                g.exponent(),
                classes.len()
            );
            for (i, c) in classes.iter().enumerate() {
                s.push_str(&format!("  class {i}: size {} {}\n", c.size(), set(&c.members)));
            }
            s.push_str(&format!("{} normal subgroups\n", normal.len()));
            for n in &normal {
                s.push_str(&format!("  order {:<3} {}\n", n.order(), set(n.members())));
            }
            s
        })
    }

    pub fn chartab(&self) -> Result<bool> {
        let g = self.group()?;
        let art = self.cached("chartab", &g, || {
            let mut v = CharacterTable::new(&g)?.to_json();
            v["group"] = json!(g.name());
            Ok(v)
        })?;
        self.emit(&art, || render_chartab(&art))
    }

    pub fn double_irreps(&self) -> Result<bool> {
        let g = self.group()?;
        let a = self.double(&g)?;
        let simples = double_irreps(&a)?;
        let records: Vec<Value> = simples
            .iter()
            .map(|s| {
                let mut v = s.to_json();
                v["name"] = json!(s.name());
                v
            })
            .collect();
        self.emit(&json!(records), || {
            let mut rows = vec![vec!["index".into(), "name".into(), "dim".into(), "class rep".into()]];
            for r in &records {
                rows.push(vec![
                    r["index"].to_string(),
                    r["name"].as_str().unwrap_or_default().to_string(),
                    r["dim"].to_string(),
                    r["a"].to_string(),
                ]);
            }
            format!("{} simple modules of D({})\n{}", records.len(), g.name(), table(&rows))
        })
    }

    pub fn double_smatrix(&self) -> Result<bool> {
        let g = self.group()?;
        self.check_dim(&g)?;
        let art = self.cached("smatrix", &g, || {
            let cat = self.category(&g)?;
            Ok(json!({
                "group": g.name(),
                "simples": cat.simples.iter().map(|s| s.name()).collect::<Vec<_>>(),
                "dims": cat.dims,
                "smatrix": cat.smatrix.to_json(),
            }))
        })?;
        self.emit(&art, || render_smatrix(&art))
    }

    pub fn double_fusion(&self) -> Result<bool> {
        let g = self.group()?;
        let cat = self.category(&g)?;
        let names: Vec<String> = cat.simples.iter().map(|s| s.name()).collect();
        let json = json!({ "group": g.name(), "simples": names, "fusion": cat.fusion.to_json() });
        self.emit(&json, || {
            let r = cat.len();
            let mut s = format!("fusion rules of Rep(D({}))\n", g.name());
            for i in 0..r {
                for j in i..r {
                    let terms: Vec<String> = (0..r)
                        .filter_map(|k| match cat.fusion.get(i, j, k) {
                            0 => None,
                            1 => Some(names[k].clone()),
                            m => Some(format!("{m}*{}", names[k])),
                        })
                        .collect();
                    s.push_str(&format!("{} x {} = {}\n", names[i], names[j], terms.join(" + ")));
                }
            }
            s
        })
    }

    fn lattice(&self, g: &Group) -> Result<Value> {
        self.check_dim(g)?;
        self.cached("lattice", g, || {
            let cat = self.category(g)?;
            let lat = Lattice::build(&cat, SUBGROUP_BOUND)?;
            let mut centralizers = Vec::with_capacity(lat.len());
            for d in &lat.subcats {
                let c = centralizer(&cat, d, Method::SMatrix, None)?;
                let j = lat
                    .index_of(&c.simples)
                    .ok_or_else(|| Error::InternalMismatch(format!("centralizer {:?} is not listed", c.simples)))?;
                centralizers.push(j);
            }
            let entries: Vec<Value> = lat
                .subcats
                .iter()
                .zip(&lat.coideals)
                .zip(&centralizers)
                .map(|((d, l), &c)| {
                    json!({
                        "label": d.label(),
                        "simples": d.simples,
                        "fpdim": d.fpdim,
                        "triple": d.triple.as_ref().map(|t| t.to_json()),
                        "coideal": l.label(),
                        "coideal_triple": l.tag().map(|t| t.to_json()),
                        "coideal_dim": l.dim(),
                        "centralizer": c,
                    })
                })
                .collect();
            Ok(json!({
                "group": g.name(),
                "subcategories": entries,
                "covers": lat.covers(),
                "dot": lat.to_dot(&format!("Rep(D({}))", g.name()), &centralizers),
            }))
        })
    }

    pub fn coideals_list(&self) -> Result<bool> {
        let g = self.group()?;
        let art = self.lattice(&g)?;
        let entries = art["subcategories"].as_array().cloned().unwrap_or_default();
        let records: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "label": e["coideal"],
                    "triple": e["coideal_triple"],
                    "dim": e["coideal_dim"],
                    "quotient": e["simples"],
                    "quotient_fpdim": e["fpdim"],
                })
            })
            .collect();
        self.emit(&json!({ "group": g.name(), "coideals": records }), || {
            let mut rows = vec![vec!["coideal".into(), "dim".into(), "Rep(A//L)".into()]];
            for r in &records {
                rows.push(vec![
                    r["label"].as_str().unwrap_or_default().to_string(),
                    r["dim"].to_string(),
                    compact(&r["quotient"]),
                ]);
            }
            format!("{} coideal subalgebras of D({})\n{}", records.len(), g.name(), table(&rows))
        })
    }

    pub fn coideal_integral(&self, triple: &str) -> Result<bool> {
        let g = self.group()?;
        let t = parse_triple(&g, triple)?;
        let a = self.double(&g)?;
        let l = build_coideal(&a, &t)?;
        let lam = l.integral(&a)?;
        let n = g.order();
        let terms: Vec<(usize, usize, &Cyclo)> = lam
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i / n, i % n, c))
            .collect();
        let json = json!({
            "group": g.name(),
            "coideal": l.label(),
            "dim": l.dim(),
            "integral": terms.iter().map(|(x, h, c)| json!({ "p": x, "g": h, "coef": c.to_json() })).collect::<Vec<_>>(),
        });
        self.emit(&json, || {
            let mut s = format!("integral of {} (dim {}), basis p_x#g\n", l.label(), l.dim());
            for (x, h, c) in &terms {
                s.push_str(&format!("  ({c}) p{x}#{h}\n"));
            }
            s
        })
    }

    pub fn subcats_list(&self) -> Result<bool> {
        let g = self.group()?;
        let art = self.lattice(&g)?;
        self.emit(&art["subcategories"], || {
            let entries = art["subcategories"].as_array().cloned().unwrap_or_default();
            let mut rows = vec![vec![
                "#".into(),
                "subcategory".into(),
                "simples".into(),
                "centralizer".into(),
            ]];
            for (i, e) in entries.iter().enumerate() {
                rows.push(vec![
                    i.to_string(),
                    e["label"].as_str().unwrap_or_default().to_string(),
                    compact(&e["simples"]),
                    e["centralizer"].to_string(),
                ]);
            }
            format!("{} fusion subcategories of Rep(D({}))\n{}", entries.len(), g.name(), table(&rows))
        })
    }

    pub fn subcats_lattice(&self) -> Result<bool> {
        let g = self.group()?;
        let art = self.lattice(&g)?;
        match self.args.format {
            Format::Dot => {
                print!("{}", art["dot"].as_str().unwrap_or_default());
                Ok(true)
            }
            Format::Json => {
                let mut v = art.clone();
                if let Some(o) = v.as_object_mut() {
                    o.remove("dot");
                }
                print!("{}", pretty(&v));
                Ok(true)
            }
            Format::Text => {
                let entries = art["subcategories"].as_array().cloned().unwrap_or_default();
                let mut s = format!("lattice of Rep(D({})): {} members\n", g.name(), entries.len());
                for (i, e) in entries.iter().enumerate() {
                    s.push_str(&format!("  {i}: {}\n", e["label"].as_str().unwrap_or_default()));
                }
                s.push_str("covers (lower < upper):\n");
                for c in art["covers"].as_array().into_iter().flatten() {
                    s.push_str(&format!("  {} < {}\n", c[0], c[1]));
                }
                s.push_str("centralizer pairs:\n");
                for (i, e) in entries.iter().enumerate() {
                    let j = e["centralizer"].as_u64().unwrap_or_default() as usize;
                    if i <= j {
                        s.push_str(&format!("  {i} <-> {j}\n"));
                    }
                }
                print!("{s}");
                Ok(true)
            }
        }
    }

    pub fn centralizer(&self, args: &CentralizerArgs) -> Result<bool> {
        let g = self.group()?;
        let methods: Vec<Method> = match args.method.as_str() {
            "all" => Method::ALL.to_vec(),
            m => vec![m.parse::<Method>()?],
        };
        let triple = args.triple.as_deref().map(|t| parse_triple(&g, t)).transpose()?;
        let simples = args.simples.as_deref().map(parse_simples).transpose()?;
        let cat = self.category(&g)?;
        let a = &cat.algebra;
        let (d, l) = match (triple, simples) {
            (Some(t), _) => {
                let d = cat.subcat_from_triple(&t)?;
                // Rep(A//C(M,H,lambda)) is S(M,H,lambda^-1), so reach `d`
                // through its left kernel rather than C(t).
                let mats: Vec<&[_]> = d.simples.iter().map(|&i| cat.simples[i].matrices.as_slice()).collect();
                (d, left_kernel(a, &mats)?)
            }
            (None, Some(s)) => {
                if let Some(&bad) = s.iter().find(|&&i| i >= cat.len()) {
                    return Err(CliError::Usage(format!(
                        "simple {bad} out of range; D({}) has {} simples",
                        g.name(),
                        cat.len()
                    )));
                }
                if !cat.is_closed(&s) {
                    return Err(Error::NotClosed(format!("{s:?} is not a fusion subcategory")).into());
                }
                let mats: Vec<&[_]> = s.iter().map(|&i| cat.simples[i].matrices.as_slice()).collect();
                (cat.subcategory(s, None), left_kernel(a, &mats)?)
            }
            (None, None) => return Err(CliError::Usage("give --triple or --simples".into())),
        };
        let results: Vec<(Method, FusionSubcategory)> = methods
            .iter()
            .map(|&m| Ok((m, centralizer(&cat, &d, m, Some(&l))?)))
            .collect::<Result<_>>()?;
        let agree = results.windows(2).all(|w| w[0].1.simples == w[1].1.simples);
        let json = json!({
            "group": g.name(),
            "subcategory": d.to_json(),
            "coideal_dim": l.dim(),
            "centralizers": results.iter().map(|(m, c)| json!({ "method": m.name(), "simples": c.simples, "fpdim": c.fpdim })).collect::<Vec<_>>(),
            "agree": agree,
        });
        self.emit(&json, || {
            let mut s = format!(
                "D = {} fpdim={} (left kernel dim {})\n",
                set(&d.simples),
                d.fpdim,
                l.dim()
            );
            for (m, c) in &results {
                s.push_str(&format!("{:<8} D' = {} fpdim={}\n", m.name(), set(&c.simples), c.fpdim));
            }
            s.push_str(if agree { "methods agree\n" } else { "METHODS DISAGREE\n" });
            s
        })?;
        Ok(agree)
    }

    pub fn verify(&self, args: &VerifyArgs) -> Result<bool> {
        let suite: Suite = args.suite.parse()?;
        let cfg = VerifyConfig {
            suite,
            seed: args.seed,
            max_algebra_dim: self.max_dim(),
            ..VerifyConfig::default()
        };
        let groups: Vec<Group> = match self.args.group.as_deref() {
            Some("catalog") => CATALOG
                .iter()
                .map(|n| parse_group_spec(n))
                .collect::<std::result::Result<_, _>>()?,
            _ => vec![self.group()?],
        };
        // Groups are independent; reports keep the input order.
        let reports: Vec<Report> = std::thread::scope(|s| {
            let handles: Vec<_> = groups
                .iter()
                .map(|g| {
                    let cfg = &cfg;
                    s.spawn(move || verify_group(g, cfg))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("verify thread panicked")).collect()
        });
        let ok = reports.iter().all(Report::ok);
        let json = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            json!(reports.iter().map(Report::to_json).collect::<Vec<_>>())
        };
        self.emit(&json, || {
            let tables: Vec<String> = reports.iter().map(Report::summary_table).collect();
            format!("{}{}\n", tables.join("\n"), if ok { "all checks passed" } else { "SOME CHECKS FAILED" })
        })?;
        Ok(ok)
    }

    pub fn cache_purge(&self) -> Result<bool> {
        let n = self
            .cache
            .purge()
            .map_err(|e| CliError::Lib(Error::Io(e.to_string())))?;
        match self.cache.dir() {
            Some(d) => println!("removed {n} cache entries from {}", d.display()),
            None => println!("cache disabled; nothing to remove"),
        }
        Ok(true)
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn set(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(" "))
}

/// `[0,1,2]` as `{0 1 2}`.
fn compact(v: &Value) -> String {
    let xs: Vec<usize> = v
        .as_array()
        .into_iter()
        .flatten()
        .filter_map(|x| x.as_u64().map(|x| x as usize))
        .collect();
    set(&xs)
}

fn cyclo_text(v: &Value) -> String {
    Cyclo::from_json(v).map_or_else(|| v.to_string(), |c| c.to_string())
}

/// Left-aligned first column, right-aligned rest.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|x| x.chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, x)| {
                if c == 0 {
                    format!("{x:<w$}", w = widths[c])
                } else {
                    format!("{x:>w$}", w = widths[c])
                }
            })
            .collect();
        s.push_str(cells.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn render_chartab(art: &Value) -> String {
    let list = |k: &str| art[k].as_array().cloned().unwrap_or_default();
    let reps = list("representatives");
    let sizes = list("classes");
    let mut rows = vec![
        std::iter::once("class".to_string())
            .chain((0..reps.len()).map(|i| i.to_string()))
            .collect::<Vec<_>>(),
        std::iter::once("rep".to_string()).chain(reps.iter().map(Value::to_string)).collect(),
        std::iter::once("size".to_string()).chain(sizes.iter().map(Value::to_string)).collect(),
    ];
    for (i, row) in list("chars").iter().enumerate() {
        rows.push(
            std::iter::once(format!("chi{i}"))
                .chain(row.as_array().into_iter().flatten().map(cyclo_text))
                .collect(),
        );
    }
    format!("character table of {}\n{}", art["group"].as_str().unwrap_or_default(), table(&rows))
}

fn render_smatrix(art: &Value) -> String {
    let names: Vec<String> = art["simples"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|n| n.as_str().unwrap_or_default().to_string())
        .collect();
    let mut rows = vec![std::iter::once(String::new()).chain(names.iter().cloned()).collect::<Vec<_>>()];
    for (i, row) in art["smatrix"].as_array().into_iter().flatten().enumerate() {
        rows.push(
            std::iter::once(names.get(i).cloned().unwrap_or_default())
                .chain(row.as_array().into_iter().flatten().map(cyclo_text))
                .collect(),
        );
    }
    format!("S-matrix of D({})\n{}", art["group"].as_str().unwrap_or_default(), table(&rows))
}

/// `0,2,5` into a sorted, deduplicated list.
fn parse_simples(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let lead = part.len() - part.trim_start().len();
        let v = part.trim().parse::<usize>().map_err(|_| {
            CliError::Lib(Error::Parse {
                offset: text[..offset + lead].chars().count(),
                message: format!("expected a simple index, found `{}`", part.trim()),
            })
        })?;
        out.push(v);
        offset += part.len() + 1;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simples_lists() {
        assert_eq!(parse_simples("3, 0,1,1").unwrap(), vec![0, 1, 3]);
        match parse_simples("0,x") {
            Err(CliError::Lib(Error::Parse { offset, .. })) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn exit_codes() {
        let bound = Error::BoundExceeded {
            what: "x",
            value: 2,
            limit: 1,
        };
        assert_eq!(CliError::Lib(bound).exit_code(), 3);
        assert_eq!(CliError::Lib(Error::UnknownName("Q".into())).exit_code(), 2);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Lib(Error::OracleMismatch("x".into())).exit_code(), 1);
    }

    #[test]
    fn tables_align() {
        let t = table(&[vec!["a".into(), "1".into()], vec!["bcd".into(), "22".into()]]);
        assert_eq!(t, "a     1\nbcd  22\n");
    }
}
