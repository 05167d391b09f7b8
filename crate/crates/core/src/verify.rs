//! Identity checks over one group. The double `D(kG)` and the triangular
//! group algebra `kG` are both examined; every check emits one record per
//! subject, and failures are records rather than errors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::chartab::CharacterTable;
use crate::coideal::{
    augmentation_ideal, build_coideal, coideal_checks, coideal_intersect, drinfeld_partner, enumerate_triples,
    inverse_triple, is_normal_hopf_subalgebra, left_kernel, quotient_dual, quotient_dual_by_equations,
    recover_from_dual, swapped_triple, CoidealSubalgebra,
};
use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::fusion::{centralizer, smatrix, Category, Lattice, Method};
use crate::group::Group;
use crate::hopf::{
    build_double, build_triangular, eval, scale, sub, Element, Functional, Kind, QTAlgebra, DEFAULT_MAX_ALGEBRA_DIM,
};
use crate::linalg::{kernel_of_columns, sv_from_dense, sv_to_dense, SparseVec, Subspace};

/// Which checks run. `Smoke` keeps the foundations and the centralizer
/// comparison; `Full` adds every structural identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Smoke,
    Full,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Smoke => "smoke",
            Suite::Full => "full",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "smoke" => Ok(Suite::Smoke),
            "full" => Ok(Suite::Full),
            _ => Err(Error::UnknownName(format!("suite {s}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    /// Seeds the randomized checks.
    pub seed: u64,
    pub max_algebra_dim: usize,
    /// Largest group order for which normal subgroups are enumerated.
    pub subgroup_bound: usize,
    /// Random functionals per randomized check.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suite: Suite::Full,
            seed: 0,
            max_algebra_dim: DEFAULT_MAX_ALGEBRA_DIM,
            subgroup_bound: 64,
            samples: 20,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: &'static str,
    pub subject: Value,
    pub outcome: Outcome,
    pub detail: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "subject": self.subject,
            "pass": self.passed(),
            "detail": self.detail,
        });
        if self.outcome == Outcome::Skipped {
            v["skipped"] = json!(true);
        }
        v
    }
}

pub struct Report {
    pub group: String,
    /// Sorted by id, then by the serialized subject.
    pub checks: Vec<Check>,
}

impl Report {
    /// No check failed. Skipped checks do not count as failures.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    pub fn by_id<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.id == id)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }

    /// One row per check id with pass, fail and skip counts.
    pub fn summary_table(&self) -> String {
        let mut rows: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
        for c in &self.checks {
            let slot = match c.outcome {
                Outcome::Pass => 0,
                Outcome::Fail => 1,
                Outcome::Skipped => 2,
            };
            rows.entry(c.id).or_default()[slot] += 1;
        }
        let width = rows.keys().map(|k| k.len()).max().unwrap_or(5).max(5);
        let mut s = format!("group {}\n{:<width$}  {:>6} {:>6} {:>6}\n", self.group, "check", "pass", "fail", "skip");
        let mut total = [0usize; 3];
        for (id, n) in &rows {
            s.push_str(&format!("{:<width$}  {:>6} {:>6} {:>6}\n", id, n[0], n[1], n[2]));
            for k in 0..3 {
                total[k] += n[k];
            }
        }
        s.push_str(&format!("{:<width$}  {:>6} {:>6} {:>6}\n", "total", total[0], total[1], total[2]));
        for c in self.failures() {
            s.push_str(&format!("FAIL {} {}: {}\n", c.id, c.subject, c.detail));
        }
        s
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn push(&mut self, id: &'static str, subject: Value, outcome: Outcome, detail: String) {
        self.checks.push(Check {
            id,
            subject,
            outcome,
            detail,
        });
    }

    fn check(&mut self, id: &'static str, subject: Value, pass: bool, detail: impl Into<String>) {
        let outcome = if pass { Outcome::Pass } else { Outcome::Fail };
        self.push(id, subject, outcome, detail.into());
    }

    /// Runs `f`; an error becomes a failed record.
    fn run(&mut self, id: &'static str, subject: Value, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((pass, detail)) => self.check(id, subject, pass, detail),
            Err(e) => self.check(id, subject, false, format!("error: {e}")),
        }
    }

    /// `Some(value)`, or a failed record for `id` and `None`.
    fn attempt<T>(&mut self, id: &'static str, subject: Value, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(id, subject, false, format!("error: {e}"));
                None
            }
        }
    }
}

/// Runs the configured suite on `D(kG)` and on the triangular `kG`.
pub fn verify_group(g: &Group, cfg: &VerifyConfig) -> Report {
    let mut rec = Recorder { checks: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    group_checks(&mut rec, g, cfg, &mut rng);
    match build_triangular(g, cfg.max_algebra_dim) {
        Ok(a) => instance_checks(&mut rec, a, cfg, &mut rng),
        Err(e) => skip_instance(&mut rec, &format!("k{}", g.name()), e),
    }
    match build_double(g, cfg.max_algebra_dim) {
        Ok(a) => instance_checks(&mut rec, a, cfg, &mut rng),
        Err(e) => skip_instance(&mut rec, &format!("D({})", g.name()), e),
    }
    let mut checks = rec.checks;
    checks.sort_by_cached_key(|c| (c.id, c.subject.to_string()));
    Report {
        group: g.name().to_string(),
        checks,
    }
}

fn skip_instance(rec: &mut Recorder, name: &str, e: Error) {
    let subject = json!({ "instance": name });
    match e {
        Error::BoundExceeded { .. } => rec.push("algebra", subject, Outcome::Skipped, format!("skipped: dim bound ({e})")),
        e => rec.check("algebra", subject, false, format!("error: {e}")),
    }
}

fn group_checks(rec: &mut Recorder, g: &Group, _cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    let subject = json!({ "instance": g.name() });
    let Some(tab) = rec.attempt("character-orthogonality", subject.clone(), CharacterTable::new(g)) else {
        return;
    };
    rec.run("character-orthogonality", subject.clone(), || {
        let k = tab.num_classes();
        let chars = tab.chars();
        let rows = (0..k).all(|i| {
            (0..k).all(|j| tab.inner_product(&chars[i], &chars[j]) == Cyclo::from_int((i == j) as i64))
        });
        // Column relations: sum_i chi_i(x) conj(chi_i(y)) = [x ~ y] |C_G(x)|.
        let classes = tab.classes();
        let cols = (0..k).all(|x| {
            (0..k).all(|y| {
                let mut acc = Cyclo::zero();
                for c in chars {
                    acc = &acc + &(&c[x] * &c[y].conj());
                }
                let want = if x == y { (g.order() / classes[x].size()) as i64 } else { 0 };
                acc == Cyclo::from_int(want)
            })
        });
        let squares: usize = tab.degrees().iter().map(|d| d * d).sum();
        Ok((
            rows && cols && squares == g.order(),
            format!("{k} characters, sum of squared degrees {squares}"),
        ))
    });
    // Field axioms on random combinations of character values.
    rec.run("cyclotomic-field-axioms", subject, || {
        let values: Vec<Cyclo> = tab.chars().iter().flatten().cloned().collect();
        let mut draw = || {
            let mut acc = Cyclo::zero();
            for _ in 0..3 {
                let c = Cyclo::from_int(rng.random_range(-4..=4));
                acc = &acc + &(&c * &values[rng.random_range(0..values.len())]);
            }
            acc
        };
        let mut bad = 0;
        for _ in 0..20 {
            let (x, y, z) = (draw(), draw(), draw());
            let ok = &(&x * &y) * &z == &x * &(&y * &z)
                && &x * &(&y + &z) == &(&x * &y) + &(&x * &z)
                && &x * &y == &y * &x
                && &x + &y == &y + &x
                && (&x + &(-&x)).is_zero()
                && (x.is_zero() || (&x * &x.inverse()?).is_one())
                && (&x * &y).conj() == &x.conj() * &y.conj();
            bad += usize::from(!ok);
        }
        Ok((bad == 0, format!("{bad} of 20 samples violate an axiom")))
    });
}

/// Everything the per-instance checks share.
struct Ctx<'a> {
    cat: &'a Category,
    a: &'a QTAlgebra,
    name: String,
    lattice: Lattice,
    /// `L*` for each lattice member.
    partners: Vec<CoidealSubalgebra>,
    /// `(A//L)*` for each lattice member.
    duals: Vec<Subspace>,
    /// Lattice index of `D'`, by the S-matrix criterion.
    centralizer_of: Vec<usize>,
    /// `j_m`: the class block holding simple `m`.
    block_of: Vec<usize>,
    /// `LKer(V_m)` for each simple.
    lkers: Vec<Option<CoidealSubalgebra>>,
    factorizable: bool,
}

impl Ctx<'_> {
    fn subject(&self) -> Value {
        json!({ "instance": self.name })
    }

    fn coideal_subject(&self, i: usize) -> Value {
        json!({
            "instance": self.name,
            "subcategory": self.lattice.subcats[i].simples,
            "coideal": self.lattice.coideals[i].label(),
        })
    }

    fn simple_subject(&self, m: usize) -> Value {
        json!({ "instance": self.name, "simple": self.cat.simples[m].name() })
    }

    /// `{i : s_ij = d_i d_j for all j in d}`.
    fn centralizer_set(&self, d: &[usize]) -> Vec<usize> {
        (0..self.cat.len()).filter(|&i| d.iter().all(|&j| self.centralize(i, j))).collect()
    }

    fn centralize(&self, i: usize, j: usize) -> bool {
        *self.cat.smatrix.get(i, j) == Cyclo::from_int((self.cat.dims[i] * self.cat.dims[j]) as i64)
    }

    fn intersect(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        x.iter().copied().filter(|v| y.contains(v)).collect()
    }
}

fn instance_checks(rec: &mut Recorder, a: QTAlgebra, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    let name = a.name().to_string();
    let subject = json!({ "instance": name });
    for (axiom, ok) in a.axiom_checks() {
        rec.check("hopf-axioms", json!({ "instance": name, "axiom": axiom }), ok, "");
    }
    let Some(cat) = rec.attempt("category", subject.clone(), Category::new(a)) else {
        return;
    };
    let a = &cat.algebra;
    let Some(lattice) = rec.attempt("lattice-enumeration", subject.clone(), Lattice::build(&cat, cfg.subgroup_bound))
    else {
        return;
    };
    rec.check(
        "lattice-enumeration",
        subject.clone(),
        true,
        format!("{} subcategories; parameterized and brute-force enumerations agree", lattice.len()),
    );
    let mut partners = Vec::new();
    let mut duals = Vec::new();
    for l in &lattice.coideals {
        let p = drinfeld_partner(a, l).and_then(|p| Ok((p, quotient_dual(a, l)?)));
        let Some((p, d)) = rec.attempt("drinfeld-partner", subject.clone(), p) else {
            return;
        };
        partners.push(p);
        duals.push(d);
    }
    let mut block_of = vec![0; cat.len()];
    for (j, block) in cat.classes.partition.iter().enumerate() {
        for &m in block {
            block_of[m] = j;
        }
    }
    let mut ctx = Ctx {
        cat: &cat,
        a,
        name,
        lattice,
        partners,
        duals,
        centralizer_of: Vec::new(),
        block_of,
        lkers: Vec::new(),
        factorizable: a.is_factorizable(),
    };
    let mut missing = false;
    ctx.centralizer_of = (0..ctx.lattice.len())
        .map(|i| {
            let c = ctx.centralizer_set(&ctx.lattice.subcats[i].simples);
            ctx.lattice.index_of(&c).unwrap_or_else(|| {
                missing = true;
                0
            })
        })
        .collect();
    if missing {
        rec.check("centralizer-closed", ctx.subject(), false, "a centralizer is not in the lattice");
        return;
    }

    foundation_checks(rec, &ctx, cfg, rng);
    centralizer_checks(rec, &ctx);
    if ctx.a.kind() == Kind::Double {
        triple_checks(rec, &ctx, cfg);
    }
    if cfg.suite == Suite::Smoke {
        return;
    }
    ctx.lkers = (0..ctx.cat.len())
        .map(|m| {
            let mats = [&ctx.cat.simples[m].matrices[..]];
            rec.attempt("left-kernel", ctx.simple_subject(m), left_kernel(ctx.a, &mats))
        })
        .collect();
    class_checks(rec, &ctx);
    coideal_property_checks(rec, &ctx);
    pair_checks(rec, &ctx);
    partner_checks(rec, &ctx);
    kernel_checks(rec, &ctx, rng);
    normal_hopf_checks(rec, &ctx);
}

fn foundation_checks(rec: &mut Recorder, ctx: &Ctx, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    let (cat, a) = (ctx.cat, ctx.a);
    let d = a.dim();
    let subject = ctx.subject();
    let n = cat.len();
    let s = &cat.smatrix;
    let dims = &cat.dims;

    rec.run("integral-normalized", subject.clone(), || {
        let (lam, t) = a.integrals()?;
        let two_sided = (0..d).all(|i| {
            let e = a.basis_element(i);
            let want = scale(&lam, &a.counit()[i]);
            a.mul(&e, &lam) == want && a.mul(&lam, &e) == want
        });
        let dual = (0..d).all(|i| {
            let f = a.dual_basis(i);
            let want = scale(&t, &eval(&f, &a.one()));
            a.convolve(&f, &t) == want && a.convolve(&t, &f) == want
        });
        let norm = eval(a.counit(), &lam).is_one() && eval(&t, &a.one()).is_one();
        Ok((two_sided && dual && norm, String::new()))
    });
    rec.run("smatrix-routes-agree", subject.clone(), || {
        let again = smatrix(a, &cat.simples)?;
        Ok((again.entries == s.entries, "character route against monodromy traces".into()))
    });
    let all = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|i| (0..n).all(|j| f(i, j)));
    let du = &cat.duals;
    rec.check("smatrix-symmetric", subject.clone(), all(&|i, j| s.get(i, j) == s.get(j, i)), "");
    rec.check(
        "smatrix-dual-symmetry",
        subject.clone(),
        all(&|i, j| {
            s.get(i, j) == s.get(du[i], du[j])
                && s.get(i, du[j]) == s.get(j, du[i])
                && *s.get(i, du[j]) == s.get(i, j).conj()
        }),
        "s_ij = s_i*j*, s_ij* = s_ji*, s_ij* = conj(s_ij)",
    );
    rec.check(
        "smatrix-unit-row",
        subject.clone(),
        (0..n).all(|j| *s.get(0, j) == Cyclo::from_int(dims[j] as i64)),
        "s_0j = d_j",
    );
    {
        // The one floating-point comparison in the system.
        let tol = 1e-9;
        let worst = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| s.get(i, j).abs_f64() - (dims[i] * dims[j]) as f64)
            .fold(f64::NEG_INFINITY, f64::max);
        rec.check(
            "smatrix-bound",
            subject.clone(),
            worst <= tol,
            format!("max |s_ij| - d_i d_j = {worst:.3e}, tolerance {tol:e}"),
        );
    }
    if ctx.factorizable {
        let dim_a = Cyclo::from_int(d as i64);
        let ok = all(&|i, j| {
            let mut acc = Cyclo::zero();
            for k in 0..n {
                acc = &acc + &(s.get(i, k) * &s.get(j, k).conj());
            }
            acc == if i == j { dim_a.clone() } else { Cyclo::zero() }
        });
        rec.check("smatrix-unitary", subject.clone(), ok, "S S^dagger = dim A times identity");
    }
    {
        let rank = crate::linalg::Matrix::from_fn(n, n, |i, j| s.get(i, j).clone()).rank();
        let ok = if ctx.factorizable { rank == n } else { rank < n || n == 1 };
        rec.check(
            "smatrix-rank",
            subject.clone(),
            ok,
            format!("rank {rank} of {n}, factorizable {}", ctx.factorizable),
        );
    }
    {
        let k = a.drinfeld_image().dim();
        let ok = match a.kind() {
            Kind::Double => k == d,
            Kind::Triangular => k == 1,
        };
        rec.check("drinfeld-rank", subject.clone(), ok, format!("rank {k} of {d}"));
    }
    let random_functional = |rng: &mut ChaCha8Rng| -> Functional {
        (0..d).map(|_| Cyclo::from_int(rng.random_range(-3..=3))).collect()
    };
    let fs: Vec<Functional> = (0..cfg.samples).map(|_| random_functional(rng)).collect();
    rec.run("drinfeld-counit", subject.clone(), || {
        let ok = fs.iter().all(|f| eval(a.counit(), &a.drinfeld(f)) == eval(f, &a.one()));
        Ok((ok, format!("{} random functionals", fs.len())))
    });
    rec.run("drinfeld-character-multiplicative", subject.clone(), || {
        let chars = &cat.classes.characters;
        let images: Vec<Element> = chars.iter().map(|c| a.drinfeld(c)).collect();
        let ok = fs.iter().all(|f| {
            let pf = a.drinfeld(f);
            chars
                .iter()
                .zip(&images)
                .all(|(c, pc)| a.drinfeld(&a.convolve(c, f)) == a.mul(pc, &pf))
        });
        Ok((ok, format!("phi_R(chi f) = phi_R(chi) phi_R(f), {} random f", fs.len())))
    });
    rec.check(
        "drinfeld-character-central",
        subject.clone(),
        cat.classes.characters.iter().all(|c| a.is_central(&a.drinfeld(c))),
        "",
    );
    rec.check(
        "drinfeld-maps-agree-on-characters",
        subject.clone(),
        cat.classes.characters.iter().all(|c| a.drinfeld(c) == a.drinfeld_right(c)),
        "",
    );
    {
        let f = &cat.fusion;
        let ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let total: u64 = (0..n).map(|k| f.get(i, j, k) as u64 * dims[k]).sum();
                total == dims[i] * dims[j]
                    && (f.get(i, j, 0) == 1) == (j == du[i])
                    && f.get(i, j, 0) <= 1
                    && (0..n).all(|k| f.get(i, j, k) == f.get(j, i, k))
            })
        });
        rec.check(
            "fusion-rules",
            subject,
            ok,
            "d_i d_j = sum_k N_ij^k d_k, N_ij^0 = [j = i*], N_ij^k = N_ji^k",
        );
    }
}

fn centralizer_checks(rec: &mut Recorder, ctx: &Ctx) {
    let (cat, lat) = (ctx.cat, &ctx.lattice);
    let full: Vec<usize> = (0..cat.len()).collect();
    let center = ctx.centralizer_set(&full);
    let dim_c = cat.fpdim(&full);
    for (i, d) in lat.subcats.iter().enumerate() {
        let subject = ctx.coideal_subject(i);
        rec.run("centralizer-methods-agree", subject.clone(), || {
            let l = &lat.coideals[i];
            let mut sets = Vec::new();
            for m in Method::ALL {
                sets.push(centralizer(cat, d, m, Some(l))?.simples);
            }
            let ok = sets.windows(2).all(|w| w[0] == w[1]);
            Ok((ok, format!("{:?}", sets)))
        });
        let dp = &lat.subcats[ctx.centralizer_of[i]];
        let lhs = d.fpdim * dp.fpdim;
        let rhs = dim_c * cat.fpdim(&ctx.intersect(&d.simples, &center));
        rec.check(
            "centralizer-fpdim",
            subject.clone(),
            lhs == rhs,
            format!("FPdim(D) FPdim(D') = {lhs}, FPdim(C) FPdim(D meet C') = {rhs}"),
        );
        let dpp = &lat.subcats[ctx.centralizer_of[ctx.centralizer_of[i]]];
        let mut seed = d.simples.clone();
        seed.extend(&center);
        let join = cat.closure(&seed);
        rec.check(
            "double-centralizer",
            subject,
            dpp.simples == join,
            format!("D'' = {:?}, D join C' = {:?}", dpp.simples, join),
        );
    }
    let mut bad = Vec::new();
    for (bi, b) in lat.subcats.iter().enumerate() {
        for (di, d) in lat.subcats.iter().enumerate() {
            let dp = &lat.subcats[ctx.centralizer_of[di]];
            let bp = &lat.subcats[ctx.centralizer_of[bi]];
            let lhs = cat.fpdim(&ctx.intersect(&b.simples, &dp.simples)) * d.fpdim;
            let rhs = cat.fpdim(&ctx.intersect(&bp.simples, &d.simples)) * b.fpdim;
            if lhs != rhs {
                bad.push((bi, di));
            }
        }
    }
    rec.check(
        "centralizer-fpdim-pairs",
        ctx.subject(),
        bad.is_empty(),
        format!(
            "FPdim(B meet D') FPdim(D) = FPdim(B' meet D) FPdim(B) on {} pairs, {} failures",
            lat.len() * lat.len(),
            bad.len()
        ),
    );
    rec.run("muger-center", ctx.subject(), || {
        let k_a = CoidealSubalgebra::new(ctx.a, ctx.a.drinfeld_image(), None)?;
        let by_kernel = cat.quotient_irreps(&k_a)?.simples;
        let by_blocks = cat.classes.partition[0].clone();
        let mut spanned = Subspace::zero(ctx.a.dim());
        for (j, block) in cat.classes.partition.iter().enumerate() {
            if !block.is_empty() {
                spanned = spanned.sum(&cat.classes.classes[j]);
            }
        }
        let ok = center == by_kernel && center == by_blocks && spanned == *k_a.space();
        Ok((
            ok,
            format!("C' = {center:?}, Rep(A//K_A) = {by_kernel:?}, A_0 = {by_blocks:?}, K_A dim {}", k_a.dim()),
        ))
    });
}

fn triple_checks(rec: &mut Recorder, ctx: &Ctx, cfg: &VerifyConfig) {
    let (cat, a) = (ctx.cat, ctx.a);
    let g = a.group();
    let Some(triples) = rec.attempt("triples", ctx.subject(), enumerate_triples(g, cfg.subgroup_bound)) else {
        return;
    };
    for t in &triples {
        let subject = json!({ "instance": ctx.name, "triple": t.label() });
        rec.run("triple-quotient", subject.clone(), || {
            let l = build_coideal(a, t)?;
            let inv = inverse_triple(g, t)?;
            let got = cat.quotient_irreps(&l)?.simples;
            let want = cat.subcat_from_triple(&inv)?.simples;
            Ok((got == want, format!("Rep(A//C) = S({})", inv.label())))
        });
        rec.run("triple-drinfeld-partner", subject.clone(), || {
            let l = build_coideal(a, t)?;
            let sw = swapped_triple(g, t)?;
            let got = drinfeld_partner(a, &l)?;
            let want = build_coideal(a, &sw)?;
            Ok((got == want, format!("phi_R((A//C)*) = C({})", sw.label())))
        });
        rec.run("triple-centralizer", subject, || {
            let d = cat.subcat_from_triple(t)?;
            let sw = swapped_triple(g, t)?;
            let got = ctx.centralizer_set(&d.simples);
            let want = cat.subcat_from_triple(&sw)?.simples;
            Ok((got == want, format!("S' = S({})", sw.label())))
        });
    }
}

fn class_checks(rec: &mut Recorder, ctx: &Ctx) {
    let (cat, a) = (ctx.cat, ctx.a);
    let cd = &cat.classes;
    let d = a.dim();
    let dim_a = Cyclo::from_int(d as i64);
    for j in 0..cd.len() {
        let subject = json!({ "instance": ctx.name, "class": j });
        let dim_cj = cd.classes[j].dim();
        let nj = cd.n[j];
        let f_lam = eval(&cd.char_idempotents[j], &cd.integral);
        rec.check(
            "class-equation",
            subject.clone(),
            dim_cj * nj as usize == d && f_lam == Cyclo::from_fraction(1, nj as i64),
            format!("dim C^j = {dim_cj}, n_j = {nj}, F_j(Lambda) = {f_lam}"),
        );
        if ctx.factorizable {
            let want: u64 = cd.partition[j].iter().map(|&m| cat.dims[m] * cat.dims[m]).sum();
            rec.check(
                "class-dimension-squares",
                subject.clone(),
                cd.partition[j].len() == 1 && dim_cj as u64 == want,
                format!("dim C^j = {dim_cj}, squared degree {want}"),
            );
        }
        // F_j is eps on C^j and zero on the other classes.
        let indicator = (0..cd.len()).all(|l| {
            cd.classes[l].dense_rows().iter().all(|x| {
                let v = eval(&cd.char_idempotents[j], x);
                if l == j {
                    v == eval(a.counit(), x)
                } else {
                    v.is_zero()
                }
            })
        });
        rec.check("class-indicator", subject.clone(), indicator, "");
        let pairing = (0..cd.len()).all(|i| {
            let v = &eval(&cd.char_idempotents[i], &cd.class_sums[j]) * &Cyclo::from_int(nj as i64);
            v == if i == j { dim_a.clone() } else { Cyclo::zero() }
        }) && (0..cat.len()).all(|i| {
            let v = eval(&cd.characters[i], &cd.central_idempotents[j]);
            v == if i == j { Cyclo::from_int(cat.dims[i] as i64) } else { Cyclo::zero() }
        });
        rec.check("class-dual-bases", subject.clone(), pairing, "<F_i, n_j C_j / dim A> = delta_ij");
        let rows = cd.classes[j].dense_rows();
        let stable = rows.iter().all(|x| {
            a.generators().iter().all(|g| {
                let gd = sv_to_dense(g, d);
                cd.classes[j].contains_dense(&a.left_adjoint(&gd, x))
            }) && (0..d).all(|k| cd.classes[j].contains_dense(&a.harpoon_left(x, &a.dual_basis(k))))
        });
        rec.check("class-stable", subject.clone(), stable, "closed under adjoint action and <- A*");
        rec.check("class-sum-central", subject, a.is_central(&cd.class_sums[j]), "");
    }
}

fn coideal_property_checks(rec: &mut Recorder, ctx: &Ctx) {
    let (cat, a) = (ctx.cat, ctx.a);
    let cd = &cat.classes;
    let d = a.dim();
    for (i, l) in ctx.lattice.coideals.iter().enumerate() {
        let subject = ctx.coideal_subject(i);
        let failed: Vec<&str> = coideal_checks(a, l.space()).into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
        rec.check("coideal-axioms", subject.clone(), failed.is_empty(), failed.join(", "));
        rec.check(
            "coideal-dimension-divides",
            subject.clone(),
            d % l.dim() == 0 && ctx.lattice.subcats[i].fpdim * l.dim() as u64 == d as u64,
            format!("dim L = {}, FPdim Rep(A//L) = {}", l.dim(), ctx.lattice.subcats[i].fpdim),
        );
        rec.run("coideal-integral", subject.clone(), || {
            let lam = l.integral(a)?;
            let ok = l.space().contains_dense(lam)
                && eval(a.counit(), lam).is_one()
                && l.space().dense_rows().iter().all(|x| a.mul(x, lam) == scale(lam, &eval(a.counit(), x)));
            Ok((ok, String::new()))
        });
        rec.check(
            "quotient-dual-equations",
            subject.clone(),
            ctx.duals[i] == quotient_dual_by_equations(a, l),
            "Lambda_L -> A* against {f : f(x l) = eps(l) f(x)}",
        );
        rec.check(
            "quotient-dual-recovery",
            subject.clone(),
            recover_from_dual(a, &ctx.duals[i]) == *l.space(),
            "{x : f -> x = f(1) x} = L",
        );
        rec.run("integral-class-decomposition", subject.clone(), || {
            let lam = l.integral(a)?;
            Ok((*lam == cd.integral_from_classes(l.space()), "Lambda_L = (1/dim L) sum_{C^j in L} C_j".into()))
        });
        rec.run("integral-class-support", subject.clone(), || {
            let lam = l.integral(a)?;
            let inside = cd.classes_inside(l.space());
            let support = cd.idempotent_support(lam);
            let mut spanned = Subspace::zero(d);
            for &j in &inside {
                spanned = spanned.sum(&cd.classes[j]);
            }
            Ok((
                inside == support && spanned == *l.space(),
                format!("classes inside {inside:?}, support {support:?}"),
            ))
        });
        rec.run("quotient-integral-idempotents", subject, || {
            let lambda = quotient_integral(a, &ctx.duals[i])?;
            let mut sum = vec![Cyclo::zero(); d];
            for j in cd.classes_inside(l.space()) {
                sum = crate::hopf::add(&sum, &cd.char_idempotents[j]);
            }
            Ok((lambda == sum, "lambda_L = sum_{C^j in L} F_j".into()))
        });
    }
}

fn pair_checks(rec: &mut Recorder, ctx: &Ctx) {
    let (cat, a) = (ctx.cat, ctx.a);
    let lat = &ctx.lattice;
    let ideals: Vec<Option<Subspace>> = lat
        .coideals
        .iter()
        .enumerate()
        .map(|(i, l)| rec.attempt("augmentation-ideal-order", ctx.coideal_subject(i), augmentation_ideal(a, l)))
        .collect();
    for i in 0..lat.len() {
        for j in i..lat.len() {
            let (l, m) = (&lat.coideals[i], &lat.coideals[j]);
            let subject = json!({
                "instance": ctx.name,
                "pair": [lat.subcats[i].simples, lat.subcats[j].simples],
            });
            let lm = span_products(a, l.space(), m.space());
            let ml = span_products(a, m.space(), l.space());
            let cap = l.space().intersect(m.space());
            rec.run("lattice-meet", subject.clone(), || {
                let lm_c = CoidealSubalgebra::new(a, lm.clone(), None)?;
                let got = cat.quotient_irreps(&lm_c)?.simples;
                let want = lat.meet(i, j);
                Ok((got == want && lm == ml, format!("Rep(A//LM) = {got:?}, LM = ML {}", lm == ml)))
            });
            rec.run("lattice-join", subject.clone(), || {
                let cap_c = coideal_intersect(a, l, m)?;
                let got = cat.quotient_irreps(&cap_c)?.simples;
                let want = lat.join(cat, i, j);
                Ok((got == want, format!("Rep(A//L meet M) = {got:?}")))
            });
            rec.check(
                "product-dimension",
                subject.clone(),
                lm.dim() * cap.dim() == l.dim() * m.dim(),
                format!("|LM| = {}, |L meet M| = {}, |L| = {}, |M| = {}", lm.dim(), cap.dim(), l.dim(), m.dim()),
            );
            rec.run("quotient-dual-intersection", subject.clone(), || {
                let lm_c = CoidealSubalgebra::new(a, lm.clone(), None)?;
                let got = ctx.duals[i].intersect(&ctx.duals[j]);
                Ok((got == quotient_dual(a, &lm_c)?, "(A//L)* meet (A//M)* = (A//LM)*".into()))
            });
            if let (Some(il), Some(im)) = (&ideals[i], &ideals[j]) {
                let forward = il.is_subspace_of(im) == l.space().is_subspace_of(m.space());
                let backward = im.is_subspace_of(il) == m.space().is_subspace_of(l.space());
                rec.check(
                    "augmentation-ideal-order",
                    subject,
                    forward && backward,
                    "A L^+ in A M^+ iff L in M, both directions",
                );
            }
        }
    }
}

fn partner_checks(rec: &mut Recorder, ctx: &Ctx) {
    let (cat, a) = (ctx.cat, ctx.a);
    let cd = &cat.classes;
    let d = a.dim();
    let k_a = a.drinfeld_image();
    for (i, l) in ctx.lattice.coideals.iter().enumerate() {
        let subject = ctx.coideal_subject(i);
        let p = &ctx.partners[i];
        // Centralizing twice: phi_R((A//L*)*) = L meet K_A; and L K_A = K_A L.
        rec.run("drinfeld-partner-twice", subject.clone(), || {
            let pp = drinfeld_partner(a, p)?;
            let meet = l.space().intersect(&k_a);
            let lk = span_products(a, l.space(), &k_a);
            let kl = span_products(a, &k_a, l.space());
            Ok((
                *pp.space() == meet && lk == kl,
                format!("dim L** = {}, dim (L meet K_A) = {}, L K_A = K_A L {}", pp.dim(), meet.dim(), lk == kl),
            ))
        });
        rec.run("drinfeld-quotient-integral", subject.clone(), || {
            let lambda = quotient_integral(a, &ctx.duals[i])?;
            Ok((a.drinfeld(&lambda) == *p.integral(a)?, "phi_R(lambda_L) = Lambda_{L*}".into()))
        });
        if !ctx.factorizable {
            continue;
        }
        rec.run("drinfeld-partner-classes", subject.clone(), || {
            let mut spanned = Subspace::zero(d);
            for &m in &ctx.lattice.subcats[i].simples {
                spanned = spanned.sum(&cd.classes[ctx.block_of[m]]);
            }
            Ok((spanned == *p.space(), "L* = sum over chi_m in Rep(A//L) of C^(j_m)".into()))
        });
        rec.run("drinfeld-partner-involutive", subject.clone(), || {
            Ok((drinfeld_partner(a, p)? == *l, "L** = L".into()))
        });
        rec.run("drinfeld-intersection", subject.clone(), || {
            let b2 = quotient_dual(a, p)?;
            let meet = ctx.duals[i].intersect(&b2);
            let image = Subspace::from_vectors(d, meet.dense_rows().iter().map(|f| sv_from_dense(&a.drinfeld(f))));
            Ok((image == l.space().intersect(p.space()), "phi_R(B meet B') = L meet L*".into()))
        });
    }
    // Divisibility of degrees by coideal dimensions.
    for (i, l) in ctx.lattice.coideals.iter().enumerate() {
        let subject = ctx.coideal_subject(i);
        let dim_p = ctx.partners[i].dim();
        let inside = cd.classes_inside(l.space());
        let degrees: Vec<u64> = (0..cat.len())
            .filter(|&m| inside.contains(&ctx.block_of[m]))
            .map(|m| cat.dims[m])
            .collect();
        let quotient = (d / dim_p) as u64;
        rec.check(
            "class-degree-divides",
            subject.clone(),
            degrees.iter().all(|&x| quotient % x == 0),
            format!("degrees {degrees:?} divide dim A / dim L* = {quotient}"),
        );
        let dset = &ctx.lattice.subcats[i].simples;
        let dp = &ctx.lattice.subcats[ctx.centralizer_of[i]].simples;
        if ctx.factorizable && ctx.intersect(dset, dp) == [0] {
            rec.check(
                "class-degree-square-divides",
                subject,
                degrees.iter().all(|&x| l.dim() as u64 % (x * x) == 0),
                format!("squared degrees of {degrees:?} divide dim L = {}", l.dim()),
            );
        }
    }
}

fn kernel_checks(rec: &mut Recorder, ctx: &Ctx, rng: &mut ChaCha8Rng) {
    let (cat, a) = (ctx.cat, ctx.a);
    let cd = &cat.classes;
    let n = cat.len();
    let d = a.dim();
    // chi_m F_j = chi_m(1) F_j.
    let absorbs: Vec<Vec<bool>> = (0..n)
        .map(|m| {
            let dm = Cyclo::from_int(cat.dims[m] as i64);
            (0..cd.len())
                .map(|j| a.convolve(&cd.characters[m], &cd.char_idempotents[j]) == scale(&cd.char_idempotents[j], &dm))
                .collect()
        })
        .collect();
    let in_kernel = |j: usize, m: usize| -> Option<bool> {
        ctx.lkers[m].as_ref().map(|k| cd.classes[j].is_subspace_of(k.space()))
    };
    for i in 0..n {
        for m in 0..n {
            let subject = json!({
                "instance": ctx.name,
                "pair": [cat.simples[i].name(), cat.simples[m].name()],
            });
            let (ji, jm) = (ctx.block_of[i], ctx.block_of[m]);
            let (Some(c4), Some(c5)) = (in_kernel(ji, m), in_kernel(jm, i)) else {
                rec.check("centralize-equivalences", subject, false, "left kernel unavailable");
                continue;
            };
            let conds = [ctx.centralize(i, m), absorbs[m][ji], absorbs[i][jm], c4, c5];
            rec.check(
                "centralize-equivalences",
                subject,
                conds.iter().all(|&c| c == conds[0]),
                format!("{conds:?}"),
            );
        }
    }
    for m in 0..n {
        let subject = ctx.simple_subject(m);
        let Some(ker) = &ctx.lkers[m] else { continue };
        rec.run("generated-subcategory", subject.clone(), || {
            let got = cat.quotient_irreps(ker)?.simples;
            let want = cat.closure(&[m]);
            Ok((got == want, format!("<V> = {want:?}, Rep(A//LKer V) = {got:?}")))
        });
        if ctx.factorizable {
            let mut spanned = Subspace::zero(d);
            for j in 0..n {
                if ctx.centralize(m, j) {
                    spanned = spanned.sum(&cd.classes[ctx.block_of[j]]);
                }
            }
            rec.check(
                "left-kernel-classes",
                subject,
                spanned == *ker.space(),
                "LKer(V_i) = sum over chi_j centralizing chi_i of C^j",
            );
        }
    }
    // A few reducible modules: V_i + V_j.
    if n > 1 {
        for _ in 0..4 {
            let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
            let subject = json!({
                "instance": ctx.name,
                "module": [cat.simples[i].name(), cat.simples[j].name()],
            });
            rec.run("generated-subcategory", subject, || {
                let mats = [&cat.simples[i].matrices[..], &cat.simples[j].matrices[..]];
                let ker = left_kernel(a, &mats)?;
                let got = cat.quotient_irreps(&ker)?.simples;
                let want = cat.closure(&[i, j]);
                Ok((got == want, format!("<V> = {want:?}, Rep(A//LKer V) = {got:?}")))
            });
        }
    }
    for (li, l) in ctx.lattice.coideals.iter().enumerate() {
        let dp = &ctx.lattice.subcats[ctx.centralizer_of[li]].simples;
        let p = &ctx.partners[li];
        for m in 0..n {
            let Some(ker) = &ctx.lkers[m] else { continue };
            let subject = json!({
                "instance": ctx.name,
                "subcategory": ctx.lattice.subcats[li].simples,
                "simple": cat.simples[m].name(),
            });
            let conds = [
                dp.contains(&m),
                cd.classes[ctx.block_of[m]].is_subspace_of(l.space()),
                p.space().is_subspace_of(ker.space()),
            ];
            rec.check(
                "centralizer-kernel-equivalences",
                subject,
                conds.iter().all(|&c| c == conds[0]),
                format!("{conds:?}"),
            );
        }
    }
}

fn normal_hopf_checks(rec: &mut Recorder, ctx: &Ctx) {
    let a = ctx.a;
    let d = a.dim();
    for (i, l) in ctx.lattice.coideals.iter().enumerate() {
        if !is_normal_hopf_subalgebra(a, l) {
            continue;
        }
        let subject = ctx.coideal_subject(i);
        let p = &ctx.partners[i];
        rec.check(
            "normal-hopf-commute",
            subject.clone(),
            commute(a, l.space(), p.space()),
            "m l = l m for l in L, m in L*",
        );
        if ctx.factorizable {
            rec.check(
                "normal-hopf-preserved",
                subject.clone(),
                is_normal_hopf_subalgebra(a, p),
                "L* is a normal Hopf subalgebra",
            );
        }
        rec.run("normal-quotient-coinvariants", subject.clone(), || {
            let ideal = augmentation_ideal(a, l)?;
            let right = coinvariants(a, &ideal, true);
            let left = coinvariants(a, &ideal, false);
            Ok((right == *l.space() && left == *l.space(), "A^co(pi) = ^co(pi)A = L".into()))
        });
        rec.run("normal-quotient-centralizes", subject.clone(), || {
            let ideal = augmentation_ideal(a, l)?;
            let right = coinvariants(a, &ideal, true);
            let left = coinvariants(a, &ideal, false);
            let rows = ctx.duals[i].dense_rows();
            let img21 = Subspace::from_vectors(d, rows.iter().map(|f| sv_from_dense(&rmatrix_map(a, f, true))));
            let img = Subspace::from_vectors(d, rows.iter().map(|f| sv_from_dense(&rmatrix_map(a, f, false))));
            Ok((
                commute(a, &img21, &right) && commute(a, &img, &left),
                "f_R21((A//L)*) centralizes A^co(pi), f_R((A//L)*) centralizes ^co(pi)A".into(),
            ))
        });
        // Factorization through a nondegenerate quotient.
        let dset = &ctx.lattice.subcats[i].simples;
        let dp = &ctx.lattice.subcats[ctx.centralizer_of[i]].simples;
        if ctx.factorizable && ctx.intersect(dset, dp) == [0] {
            let prod = span_products(a, l.space(), p.space());
            let meet = l.space().intersect(p.space());
            let ok = prod.dim() == d && meet.dim() == 1 && commute(a, l.space(), p.space()) && l.dim() * p.dim() == d;
            rec.check(
                "factorization",
                subject,
                ok,
                format!(
                    "dim K = {}, dim K* = {}, dim K K* = {}, dim (K meet K*) = {}",
                    l.dim(),
                    p.dim(),
                    prod.dim(),
                    meet.dim()
                ),
            );
        }
    }
}

/// The span of all products `x y`, `x` in `l`, `y` in `m`.
pub fn span_products(a: &QTAlgebra, l: &Subspace, m: &Subspace) -> Subspace {
    let mut s = Subspace::zero(a.dim());
    for x in l.rows() {
        for y in m.rows() {
            s.insert(&a.mul_sparse(x, y));
            if s.dim() == a.dim() {
                return s;
            }
        }
    }
    s
}

/// Every element of `l` commutes with every element of `m`.
pub fn commute(a: &QTAlgebra, l: &Subspace, m: &Subspace) -> bool {
    l.rows()
        .iter()
        .all(|x| m.rows().iter().all(|y| a.mul_sparse(x, y) == a.mul_sparse(y, x)))
}

/// `lambda_L`: the normalized integral of the Hopf algebra `B = (A//L)*`,
/// solved from `g f = g(1) f` for `g` in a basis of `B`.
pub fn quotient_integral(a: &QTAlgebra, b: &Subspace) -> Result<Functional> {
    let d = a.dim();
    let one = a.one();
    let basis = b.dense_rows();
    let cols: Vec<SparseVec> = basis
        .iter()
        .map(|f| {
            let mut col = Vec::new();
            for (s, g) in basis.iter().enumerate() {
                let v = sub(&a.convolve(g, f), &scale(f, &eval(g, &one)));
                col.extend(sv_from_dense(&v).into_iter().map(|(k, c)| (s * d + k, c)));
            }
            col
        })
        .collect();
    let ker = kernel_of_columns(&cols, d * basis.len());
    if ker.dim() != 1 {
        return Err(Error::NoIntegral(format!("integral space of dimension {}", ker.dim())));
    }
    let coeffs = &ker.dense_rows()[0];
    let mut f = vec![Cyclo::zero(); d];
    for (c, g) in coeffs.iter().zip(&basis) {
        f = crate::hopf::add(&f, &scale(g, c));
    }
    let norm = eval(&f, &one);
    let inv = norm
        .inverse()
        .map_err(|_| Error::NoIntegral("integral vanishes at 1".into()))?;
    Ok(scale(&f, &inv))
}

/// `f_R21(p) = p(R^2) R^1` when `swap`, else `f_R(p) = p(R^1) R^2`.
pub fn rmatrix_map(a: &QTAlgebra, p: &[Cyclo], swap: bool) -> Element {
    let mut out = a.zero();
    for (i, j, c) in a.rmatrix() {
        let (eval_at, land) = if swap { (*j, *i) } else { (*i, *j) };
        if !p[eval_at].is_zero() {
            out[land] = &out[land] + &(&p[eval_at] * c);
        }
    }
    out
}

/// Right coinvariants `{x : x_1 (x) pi(x_2) = x (x) 1}` of `pi : A -> A/I`
/// when `right`, else the left ones `{x : pi(x_1) (x) x_2 = 1 (x) x}`.
pub fn coinvariants(a: &QTAlgebra, ideal: &Subspace, right: bool) -> Subspace {
    let d = a.dim();
    // Reduction modulo the echelon basis of I is a linear projection along I.
    let reduce_basis: Vec<SparseVec> = (0..d).map(|k| ideal.reduce(&[(k, Cyclo::one())])).collect();
    let one_red = ideal.reduce(&sv_from_dense(&a.one()));
    let cols: Vec<SparseVec> = (0..d)
        .map(|i| {
            let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
            let mut put = |kept: usize, reduced: &SparseVec, c: &Cyclo| {
                for (r, v) in reduced {
                    let (row, col) = if right { (kept, *r) } else { (*r, kept) };
                    let slot = acc.entry(row * d + col).or_default();
                    *slot = &*slot + &(c * v);
                }
            };
            for (j, k, c) in a.basis_comult(i) {
                if right {
                    put(*j, &reduce_basis[*k], c);
                } else {
                    put(*k, &reduce_basis[*j], c);
                }
            }
            put(i, &one_red, &-Cyclo::one());
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect();
    kernel_of_columns(&cols, d * d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_group_spec;

    fn run(s: &str, cfg: &VerifyConfig) -> Report {
        verify_group(&parse_group_spec(s).unwrap(), cfg)
    }

    #[test]
    fn trivial_group_passes() {
        let r = run("Z1", &VerifyConfig::default());
        assert!(r.ok(), "{}", r.summary_table());
        assert!(r.checks.iter().all(|c| c.passed()));
    }

    #[test]
    fn z2_full_suite_passes_and_is_sorted() {
        let r = run("Z2", &VerifyConfig::default());
        assert!(r.ok(), "{}", r.summary_table());
        let keys: Vec<(&str, String)> = r.checks.iter().map(|c| (c.id, c.subject.to_string())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(r.by_id("factorization").count() > 0);
        assert_eq!(r.by_id("triple-centralizer").count(), 5);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = VerifyConfig {
            seed: 7,
            ..VerifyConfig::default()
        };
        assert_eq!(run("Z3", &cfg).to_json(), run("Z3", &cfg).to_json());
    }

    #[test]
    fn smoke_is_a_subset() {
        let smoke = run(
            "S3",
            &VerifyConfig {
                suite: Suite::Smoke,
                ..VerifyConfig::default()
            },
        );
        assert!(smoke.ok());
        assert_eq!(smoke.by_id("lattice-meet").count(), 0);
        assert_eq!(smoke.by_id("centralizer-methods-agree").count(), 11);
    }

    #[test]
    fn dimension_bound_skips_the_double() {
        let r = run(
            "S3",
            &VerifyConfig {
                max_algebra_dim: 10,
                suite: Suite::Smoke,
                ..VerifyConfig::default()
            },
        );
        assert!(r.ok());
        let skipped: Vec<&Check> = r.checks.iter().filter(|c| c.outcome == Outcome::Skipped).collect();
        assert_eq!(skipped.len(), 1);
        assert_eq!(skipped[0].subject["instance"], "D(S3)");
        assert!(skipped[0].detail.starts_with("skipped: dim bound"));
        assert!(r.checks.iter().any(|c| c.subject["instance"] == "kS3"));
    }

    #[test]
    fn suite_names() {
        assert_eq!("smoke".parse::<Suite>().unwrap(), Suite::Smoke);
        assert_eq!("full".parse::<Suite>().unwrap(), Suite::Full);
        assert!(matches!("fast".parse::<Suite>(), Err(Error::UnknownName(_))));
    }

    #[test]
    fn quotient_integral_of_extremes() {
        let a = build_double(&parse_group_spec("S3").unwrap(), 400).unwrap();
        let (_, t) = a.integrals().unwrap();
        // L = k: (A//L)* = A*, whose integral is t.
        assert_eq!(quotient_integral(&a, &Subspace::full(a.dim())).unwrap(), t);
        // L = A: (A//L)* = k eps.
        let eps = Subspace::from_dense(a.dim(), [a.counit()]);
        assert_eq!(quotient_integral(&a, &eps).unwrap(), a.counit().to_vec());
    }

    #[test]
    fn coinvariants_of_the_zero_ideal_are_scalars() {
        let a = build_double(&parse_group_spec("Z2").unwrap(), 400).unwrap();
        let zero = Subspace::zero(a.dim());
        for right in [true, false] {
            let c = coinvariants(&a, &zero, right);
            assert_eq!(c.dim(), 1);
            assert!(c.contains_dense(&a.one()));
        }
    }
}
