//! Left normal coideal subalgebras: the `C(M, H, lambda)` family of `D(kG)`,
//! group algebras `kN` of the triangular instance, and the operations on them.

use std::sync::OnceLock;

use serde_json::json;

use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::hopf::{eval, Element, Kind, QTAlgebra};
use crate::linalg::{kernel_of_columns, nullspace, sv_axpy, sv_from_dense, sv_to_dense, SparseVec, Subspace};

/// A map `M x H -> mu_order`, multiplicative in each slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bicharacter {
    m: Subgroup,
    h: Subgroup,
    order: u32,
    // Exponent of lambda(m, h) at [pos(m) * |H| + pos(h)].
    exps: Vec<u32>,
}

impl Bicharacter {
    pub fn trivial(m: &Subgroup, h: &Subgroup) -> Bicharacter {
        Bicharacter {
            m: m.clone(),
            h: h.clone(),
            order: 1,
            exps: vec![0; m.order() * h.order()],
        }
    }

    pub fn m(&self) -> &Subgroup {
        &self.m
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Exponent `k` with `lambda(m, h) = zeta_order^k`; `m`, `h` are group elements.
    pub fn exponent(&self, m: usize, h: usize) -> u32 {
        let pm = self.m.position(m).expect("first argument in M");
        let ph = self.h.position(h).expect("second argument in H");
        self.exps[pm * self.h.order() + ph]
    }

    pub fn value(&self, m: usize, h: usize) -> Cyclo {
        Cyclo::root_of_unity(self.order, self.exponent(m, h) as i64)
    }

    /// `(m, h) -> lambda(m, h)^-1`.
    pub fn inverse(&self) -> Bicharacter {
        Bicharacter {
            m: self.m.clone(),
            h: self.h.clone(),
            order: self.order,
            exps: self.exps.iter().map(|&e| (self.order - e) % self.order).collect(),
        }
    }

    /// `(h, m) -> lambda(m, h)` on `H x M`.
    pub fn transpose(&self) -> Bicharacter {
        let (nm, nh) = (self.m.order(), self.h.order());
        let mut exps = vec![0; nm * nh];
        for pm in 0..nm {
            for ph in 0..nh {
                exps[ph * nm + pm] = self.exps[pm * nh + ph];
            }
        }
        Bicharacter {
            m: self.h.clone(),
            h: self.m.clone(),
            order: self.order,
            exps,
        }
    }

    /// Equal as functions, whatever root-of-unity order each one is written in.
    pub fn same_values(&self, other: &Bicharacter) -> bool {
        self.m == other.m
            && self.h == other.h
            && self.m.members().iter().all(|&m| {
                self.h
                    .members()
                    .iter()
                    .all(|&h| self.value(m, h) == other.value(m, h))
            })
    }

    fn is_invariant(&self, g: &Group) -> bool {
        (0..g.order()).all(|x| {
            self.m.members().iter().all(|&m| {
                self.h
                    .members()
                    .iter()
                    .all(|&h| self.exponent(g.conj(g.inv(x), m), h) == self.exponent(m, g.conj(x, h)))
            })
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "order": self.order, "exponents": self.exps })
    }
}

/// All `G`-invariant bicharacters `M x H -> k*`, trivial first, in canonical order.
pub fn enumerate_invariant_bicharacters(g: &Group, m: &Subgroup, h: &Subgroup) -> Result<Vec<Bicharacter>> {
    if !g.is_normal(m) || !g.is_normal(h) || !g.commute_elementwise(m, h) {
        return Err(Error::PreconditionViolated(
            "M and H must be normal and commute elementwise".into(),
        ));
    }
    let lh = g.linear_characters(h);
    let e = lh.order;
    let gens = g.generators(m.members());
    let nh = h.order();
    let mut found = Vec::new();
    let mut idx = vec![0usize; gens.len()];
    loop {
        // lambda(gen_k, .) = lh.exps[idx[k]]; extend over M along the Cayley graph.
        let mut val: Vec<Option<Vec<u32>>> = vec![None; m.order()];
        val[0] = Some(vec![0; nh]);
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut ok = true;
        'walk: while let Some(x) = queue.pop_front() {
            let vx = val[m.position(x).unwrap()].clone().unwrap();
            for (k, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let vy: Vec<u32> = vx.iter().zip(&lh.exps[idx[k]]).map(|(a, b)| (a + b) % e).collect();
                let py = m.position(y).unwrap();
                match &val[py] {
                    None => {
                        val[py] = Some(vy);
                        queue.push_back(y);
                    }
                    Some(v) if *v != vy => {
                        ok = false;
                        break 'walk;
                    }
                    Some(_) => {}
                }
            }
        }
        if ok {
            let lam = Bicharacter {
                m: m.clone(),
                h: h.clone(),
                order: e,
                exps: val.into_iter().flat_map(|v| v.unwrap()).collect(),
            };
            if lam.is_invariant(g) {
                found.push(lam);
            }
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                found.sort_by(|a, b| a.exps.cmp(&b.exps));
                found.dedup();
                return Ok(found);
            }
            idx[k] += 1;
            if idx[k] < lh.exps.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `(M, H, lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub m: Subgroup,
    pub h: Subgroup,
    pub lambda: Bicharacter,
    /// Position of `lambda` in the canonical enumeration.
    pub index: usize,
}

impl Triple {
    pub fn label(&self) -> String {
        let fmt = |s: &Subgroup| {
            let parts: Vec<String> = s.members().iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", parts.join(" "))
        };
        format!("M={},H={},B={}", fmt(&self.m), fmt(&self.h), self.index)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "M": self.m.members(),
            "H": self.h.members(),
            "B": self.index,
            "lambda": self.lambda.to_json(),
        })
    }
}

/// The triple carrying `lambda`, with its canonical index.
pub fn triple_for(g: &Group, lambda: Bicharacter) -> Result<Triple> {
    let (index, canonical) = enumerate_invariant_bicharacters(g, &lambda.m, &lambda.h)?
        .into_iter()
        .enumerate()
        .find(|(_, b)| b.same_values(&lambda))
        .ok_or_else(|| Error::PreconditionViolated("bicharacter is not G-invariant".into()))?;
    Ok(Triple {
        m: lambda.m.clone(),
        h: lambda.h.clone(),
        lambda: canonical,
        index,
    })
}

/// `(M, H, lambda^-1)`, the triple with `Rep(A//C(M,H,lambda)) = S(M,H,lambda^-1)`.
pub fn inverse_triple(g: &Group, t: &Triple) -> Result<Triple> {
    triple_for(g, t.lambda.inverse())
}

/// `(H, M, (lambda^T)^-1)`. Both `phi_R((A//C(M,H,lambda))*)` and the
/// centralizer of `S(M,H,lambda)` are indexed by it.
pub fn swapped_triple(g: &Group, t: &Triple) -> Result<Triple> {
    triple_for(g, t.lambda.transpose().inverse())
}

/// Parses `M=<gens>,H=<gens>,B=<index|triv>`. Generators are element
/// indices separated by spaces or `+`; an empty list is the trivial subgroup.
pub fn parse_triple(g: &Group, text: &str) -> Result<Triple> {
    let mut fields = Vec::new();
    let mut start = 0;
    for part in text.split(',') {
        fields.push((start, part));
        start += part.len() + 1;
    }
    if fields.len() != 3 {
        return Err(Error::parse(0, "expected M=...,H=...,B=..."));
    }
    let mut values = Vec::new();
    for ((offset, field), key) in fields.iter().zip(["M", "H", "B"]) {
        let lead = field.len() - field.trim_start().len();
        let body = field.trim();
        let rest = body
            .strip_prefix(key)
            .map(str::trim_start)
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| Error::parse(offset + lead, format!("expected {key}=")))?;
        let value_offset = offset + lead + (body.len() - rest.len());
        values.push((value_offset, rest));
    }
    let subgroup = |(offset, body): (usize, &str)| -> Result<Subgroup> {
        let mut gens = Vec::new();
        let mut pos = 0;
        for tok in body.split([' ', '+']) {
            if !tok.is_empty() {
                let x: usize = tok
                    .parse()
                    .ok()
                    .filter(|&x| x < g.order())
                    .ok_or_else(|| Error::parse(offset + pos, format!("`{tok}` is not an element index below {}", g.order())))?;
                gens.push(x);
            }
            pos += tok.len() + 1;
        }
        Ok(g.subgroup_generated(&gens))
    };
    let m = subgroup(values[0])?;
    let h = subgroup(values[1])?;
    let bichars = enumerate_invariant_bicharacters(g, &m, &h)?;
    let (b_offset, b) = values[2];
    let index = match b.trim() {
        "triv" => 0,
        t => t
            .parse::<usize>()
            .ok()
            .filter(|&i| i < bichars.len())
            .ok_or_else(|| Error::parse(b_offset, format!("B must be `triv` or an index below {}", bichars.len())))?,
    };
    Ok(Triple {
        m,
        h,
        lambda: bichars[index].clone(),
        index,
    })
}

/// Every valid triple over the normal subgroups of `g`, in canonical order.
pub fn enumerate_triples(g: &Group, subgroup_bound: usize) -> Result<Vec<Triple>> {
    let normals = g.normal_subgroups(subgroup_bound)?;
    let mut out = Vec::new();
    for m in &normals {
        for h in &normals {
            if !g.commute_elementwise(m, h) {
                continue;
            }
            for (index, lambda) in enumerate_invariant_bicharacters(g, m, h)?.into_iter().enumerate() {
                out.push(Triple {
                    m: m.clone(),
                    h: h.clone(),
                    lambda,
                    index,
                });
            }
        }
    }
    Ok(out)
}

/// A left normal coideal subalgebra with its (lazily computed) integral.
#[derive(Debug)]
pub struct CoidealSubalgebra {
    space: Subspace,
    tag: Option<Triple>,
    integral: OnceLock<Element>,
}

impl Clone for CoidealSubalgebra {
    fn clone(&self) -> Self {
        let integral = OnceLock::new();
        if let Some(x) = self.integral.get() {
            let _ = integral.set(x.clone());
        }
        CoidealSubalgebra {
            space: self.space.clone(),
            tag: self.tag.clone(),
            integral,
        }
    }
}

impl PartialEq for CoidealSubalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
    }
}

impl Eq for CoidealSubalgebra {}

impl CoidealSubalgebra {
    /// Wraps `space` after checking every defining property.
    pub fn new(a: &QTAlgebra, space: Subspace, tag: Option<Triple>) -> Result<CoidealSubalgebra> {
        let failed: Vec<&str> = coideal_checks(a, &space)
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n)
            .collect();
        if !failed.is_empty() {
            return Err(Error::InvariantViolation(format!("not a left normal coideal subalgebra: {}", failed.join(", "))));
        }
        Ok(CoidealSubalgebra {
            space,
            tag,
            integral: OnceLock::new(),
        })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn tag(&self) -> Option<&Triple> {
        self.tag.as_ref()
    }

    pub fn with_tag(mut self, tag: Option<Triple>) -> Self {
        self.tag = tag;
        self
    }

    /// `Lambda_L`: the solution of `l x = eps(l) x` in `L` with `eps(x) = 1`.
    pub fn integral(&self, a: &QTAlgebra) -> Result<&Element> {
        if let Some(x) = self.integral.get() {
            return Ok(x);
        }
        let x = solve_integral(a, &self.space)?;
        Ok(self.integral.get_or_init(|| x))
    }

    pub fn label(&self) -> String {
        match &self.tag {
            Some(t) => format!("C({})", t.label()),
            None => format!("L(dim {})", self.dim()),
        }
    }
}

/// Named pass/fail results for the coideal properties of `space`.
pub fn coideal_checks(a: &QTAlgebra, space: &Subspace) -> Vec<(&'static str, bool)> {
    let unit = sv_from_dense(&a.one());
    let rows = space.rows();
    let contains_one = space.contains(&unit);
    let subalgebra = rows
        .iter()
        .all(|x| rows.iter().all(|y| space.contains(&a.mul_sparse(x, y))));
    let coideal = rows.iter().all(|x| right_legs(a, x).iter().all(|v| space.contains(v)));
    let normal = rows.iter().all(|x| {
        let xd = sv_to_dense(x, a.dim());
        a.generators()
            .iter()
            .all(|g| space.contains(&sv_from_dense(&a.left_adjoint(&sv_to_dense(g, a.dim()), &xd))))
    });
    vec![
        ("contains 1", contains_one),
        ("subalgebra", subalgebra),
        ("left coideal", coideal),
        ("normal", normal),
    ]
}

/// For `Delta(x) = sum_j e_j (x) v_j`, the vectors `v_j`.
fn right_legs(a: &QTAlgebra, x: &[(usize, Cyclo)]) -> Vec<SparseVec> {
    let mut legs: std::collections::BTreeMap<usize, SparseVec> = Default::default();
    for (i, c) in x {
        for (j, k, d) in a.basis_comult(*i) {
            let v = legs.entry(*j).or_default();
            *v = sv_axpy(v, &(c * d), &[(*k, Cyclo::one())]);
        }
    }
    legs.into_values().filter(|v| !v.is_empty()).collect()
}

/// For `Delta(x) = sum_k v_k (x) e_k`, the vectors `v_k`.
fn left_legs(a: &QTAlgebra, x: &[(usize, Cyclo)]) -> Vec<SparseVec> {
    let mut legs: std::collections::BTreeMap<usize, SparseVec> = Default::default();
    for (i, c) in x {
        for (j, k, d) in a.basis_comult(*i) {
            let v = legs.entry(*k).or_default();
            *v = sv_axpy(v, &(c * d), &[(*j, Cyclo::one())]);
        }
    }
    legs.into_values().filter(|v| !v.is_empty()).collect()
}

fn solve_integral(a: &QTAlgebra, space: &Subspace) -> Result<Element> {
    let rows = space.rows();
    let d = a.dim();
    let cols: Vec<SparseVec> = rows
        .iter()
        .map(|r| {
            let mut col = Vec::new();
            for (li, l) in rows.iter().enumerate() {
                let eps = eval(a.counit(), &sv_to_dense(l, d));
                let v = sv_axpy(&a.mul_sparse(l, r), &-eps, r);
                col.extend(v.into_iter().map(|(i, c)| (li * d + i, c)));
            }
            col
        })
        .collect();
    let ker = kernel_of_columns(&cols, d * rows.len());
    if ker.dim() != 1 {
        return Err(Error::NoIntegral(format!("integral space of dimension {}", ker.dim())));
    }
    let mut x: SparseVec = Vec::new();
    for (i, c) in &ker.rows()[0] {
        x = sv_axpy(&x, c, &rows[*i]);
    }
    let x = sv_to_dense(&x, d);
    let eps = eval(a.counit(), &x);
    let inv = eps
        .inverse()
        .map_err(|_| Error::NoIntegral("integral has zero counit".into()))?;
    Ok(x.iter().map(|c| c * &inv).collect())
}

/// `C(M, H, lambda)` spanned by `f_s^h # h`, `s` the smallest element of each
/// right coset `Ms`.
pub fn build_coideal(a: &QTAlgebra, triple: &Triple) -> Result<CoidealSubalgebra> {
    if a.kind() != Kind::Double {
        return Err(Error::PreconditionViolated("C(M, H, lambda) lives in a double".into()));
    }
    let g = a.group();
    let n = g.order();
    let reps = g.right_coset_reps(&triple.m);
    let mut vectors = Vec::new();
    for &h in triple.h.members() {
        for &s in &reps {
            let mut v: SparseVec = triple
                .m
                .members()
                .iter()
                .map(|&m| (g.mul(m, s) * n + h, triple.lambda.value(m, h)))
                .collect();
            v.sort_by_key(|(i, _)| *i);
            vectors.push(v);
        }
    }
    let space = Subspace::from_vectors(a.dim(), &vectors);
    let want = triple.h.order() * reps.len();
    if space.dim() != want {
        return Err(Error::InvariantViolation(format!("dimension {} instead of {want}", space.dim())));
    }
    CoidealSubalgebra::new(a, space, Some(triple.clone()))
}

/// All `C(M, H, lambda)`, deduplicated by subspace; the first triple wins the tag.
pub fn enumerate_coideals(a: &QTAlgebra, subgroup_bound: usize) -> Result<Vec<CoidealSubalgebra>> {
    let mut out: Vec<CoidealSubalgebra> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for t in enumerate_triples(a.group(), subgroup_bound)? {
        let c = build_coideal(a, &t)?;
        if seen.insert(c.space.clone()) {
            out.push(c);
        }
    }
    Ok(out)
}

/// `kN` inside the triangular instance `kG`.
pub fn group_coideal(a: &QTAlgebra, n: &Subgroup) -> Result<CoidealSubalgebra> {
    if a.kind() != Kind::Triangular {
        return Err(Error::PreconditionViolated("kN lives in a group algebra".into()));
    }
    let space = Subspace::from_vectors(a.dim(), n.members().iter().map(|&x| vec![(x, Cyclo::one())]));
    CoidealSubalgebra::new(a, space, None)
}

/// Every left normal coideal subalgebra of `kG`: the `kN`, `N` normal.
pub fn enumerate_group_coideals(a: &QTAlgebra, subgroup_bound: usize) -> Result<Vec<CoidealSubalgebra>> {
    a.group()
        .normal_subgroups(subgroup_bound)?
        .iter()
        .map(|n| group_coideal(a, n))
        .collect()
}

/// Coideals of either instance family.
pub fn all_coideals(a: &QTAlgebra, subgroup_bound: usize) -> Result<Vec<CoidealSubalgebra>> {
    match a.kind() {
        Kind::Double => enumerate_coideals(a, subgroup_bound),
        Kind::Triangular => enumerate_group_coideals(a, subgroup_bound),
    }
}

/// `LM`, the span of all products.
pub fn coideal_product(a: &QTAlgebra, l: &CoidealSubalgebra, m: &CoidealSubalgebra) -> Result<CoidealSubalgebra> {
    let mut s = Subspace::zero(a.dim());
    for x in l.space.rows() {
        for y in m.space.rows() {
            s.insert(&a.mul_sparse(x, y));
        }
    }
    CoidealSubalgebra::new(a, s, None)
}

pub fn coideal_intersect(a: &QTAlgebra, l: &CoidealSubalgebra, m: &CoidealSubalgebra) -> Result<CoidealSubalgebra> {
    CoidealSubalgebra::new(a, l.space.intersect(&m.space), None)
}

/// `{x : x_1 (x) x_2 m = x (x) m}` for every `m` in every given module.
///
/// `modules[v][i]` is the matrix of basis element `i` on module `v`.
pub fn left_kernel(a: &QTAlgebra, modules: &[&[crate::linalg::Matrix]]) -> Result<CoidealSubalgebra> {
    let d = a.dim();
    let cols: Vec<SparseVec> = (0..d)
        .map(|i| {
            let mut col: std::collections::BTreeMap<usize, Cyclo> = Default::default();
            let mut offset = 0;
            for mats in modules {
                let k = mats[0].rows();
                let block = k * k;
                for (j, kk, c) in a.basis_comult(i) {
                    let m = &mats[*kk];
                    for r in 0..k {
                        for s in 0..k {
                            let v = m.get(r, s);
                            if !v.is_zero() {
                                let slot = col.entry(offset + j * block + r * k + s).or_default();
                                *slot = &*slot + &(c * v);
                            }
                        }
                    }
                }
                for r in 0..k {
                    let slot = col.entry(offset + i * block + r * k + r).or_default();
                    *slot = &*slot - &Cyclo::one();
                }
                offset += d * block;
            }
            col.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect();
    let nrows: usize = modules.iter().map(|m| d * m[0].rows() * m[0].rows()).sum();
    let ker = kernel_of_columns(&cols, nrows);
    CoidealSubalgebra::new(a, ker, None)
}

/// Closed under both adjoint actions, the coproduct and the antipode.
pub fn is_normal_hopf_subalgebra(a: &QTAlgebra, l: &CoidealSubalgebra) -> bool {
    let s = &l.space;
    let d = a.dim();
    s.rows().iter().all(|x| {
        let xd = sv_to_dense(x, d);
        right_legs(a, x).iter().all(|v| s.contains(v))
            && left_legs(a, x).iter().all(|v| s.contains(v))
            && s.contains(&sv_from_dense(&a.antipode(&xd)))
            && a.generators().iter().all(|g| {
                let gd = sv_to_dense(g, d);
                s.contains(&sv_from_dense(&a.left_adjoint(&gd, &xd)))
                    && s.contains(&sv_from_dense(&a.right_adjoint(&gd, &xd)))
            })
    })
}

/// `(A//L)* = Lambda_L -> A*`, as a subspace of `A*`.
pub fn quotient_dual(a: &QTAlgebra, l: &CoidealSubalgebra) -> Result<Subspace> {
    let lam = l.integral(a)?;
    Ok(Subspace::from_vectors(
        a.dim(),
        (0..a.dim()).map(|k| sv_from_dense(&a.act_on_dual(lam, &a.dual_basis(k)))),
    ))
}

/// `{f : f(x l) = eps(l) f(x)}`, the same space from its defining equations.
pub fn quotient_dual_by_equations(a: &QTAlgebra, l: &CoidealSubalgebra) -> Subspace {
    let d = a.dim();
    let mut eqs = Vec::new();
    for r in l.space.rows() {
        let eps = eval(a.counit(), &sv_to_dense(r, d));
        for i in 0..d {
            let e = [(i, Cyclo::one())];
            eqs.push(sv_axpy(&a.mul_sparse(&e, r), &-&eps, &e));
        }
    }
    nullspace(&eqs, d)
}

/// `{x : f -> x = f(1) x for all f in B}`.
pub fn recover_from_dual(a: &QTAlgebra, b: &Subspace) -> Subspace {
    let d = a.dim();
    let one = a.one();
    let fs = b.dense_rows();
    let cols: Vec<SparseVec> = (0..d)
        .map(|i| {
            let e = a.basis_element(i);
            let mut col = Vec::new();
            for (fi, f) in fs.iter().enumerate() {
                let f1 = eval(f, &one);
                let v = sv_axpy(&sv_from_dense(&a.harpoon_right(f, &e)), &-f1, &[(i, Cyclo::one())]);
                col.extend(v.into_iter().map(|(k, c)| (fi * d + k, c)));
            }
            col
        })
        .collect();
    kernel_of_columns(&cols, d * fs.len())
}

/// `A L^+ = A (1 - Lambda_L)`.
pub fn augmentation_ideal(a: &QTAlgebra, l: &CoidealSubalgebra) -> Result<Subspace> {
    let lam = l.integral(a)?;
    let x: Element = a.one().iter().zip(lam).map(|(u, v)| u - v).collect();
    Ok(Subspace::from_vectors(
        a.dim(),
        (0..a.dim()).map(|i| sv_from_dense(&a.mul(&a.basis_element(i), &x))),
    ))
}

/// `phi_R((A//L)*)`, the coideal paired with `L` by the Drinfeld map.
pub fn drinfeld_partner(a: &QTAlgebra, l: &CoidealSubalgebra) -> Result<CoidealSubalgebra> {
    let dual = quotient_dual(a, l)?;
    let image = Subspace::from_vectors(
        a.dim(),
        dual.dense_rows().iter().map(|f| sv_from_dense(&a.drinfeld(f))),
    );
    CoidealSubalgebra::new(a, image, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_group_spec;
    use crate::hopf::{build_double, build_triangular};

    fn double(s: &str) -> QTAlgebra {
        build_double(&parse_group_spec(s).unwrap(), 400).unwrap()
    }

    fn triple(g: &Group, m: &[usize], h: &[usize]) -> Triple {
        let m = g.subgroup_from_members(m).unwrap();
        let h = g.subgroup_from_members(h).unwrap();
        triple_for(g, Bicharacter::trivial(&m, &h)).unwrap()
    }

    #[test]
    fn triple_syntax() {
        let g = parse_group_spec("Z2xZ2").unwrap();
        let t = parse_triple(&g, "M=1 2,H=,B=triv").unwrap();
        assert_eq!(t.m.order(), 4);
        assert_eq!(t.h.order(), 1);
        assert!(t.lambda.is_trivial());
        let t = parse_triple(&g, "M=1,H=2+1,B=1").unwrap();
        assert_eq!((t.m.order(), t.h.order(), t.index), (2, 4, 1));
        assert_eq!(parse_triple(&g, &t.label().replace(['{', '}'], "")).unwrap(), t);
        assert!(matches!(parse_triple(&g, "M=1,H=9,B=0"), Err(Error::Parse { offset: 6, .. })));
        assert!(matches!(parse_triple(&g, "M=1,H=1,B=7"), Err(Error::Parse { offset: 10, .. })));
        assert!(matches!(parse_triple(&g, "M=1,B=0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_triple(&g, "X=1,H=1,B=0"), Err(Error::Parse { offset: 0, .. })));
        let s3 = parse_group_spec("S3").unwrap();
        assert!(matches!(parse_triple(&s3, "M=1,H=,B=0"), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn bicharacter_counts() {
        let g = parse_group_spec("Z2xZ2").unwrap();
        let w = g.whole();
        // Hom(Z2^2 (x) Z2^2, mu_2) has 2^4 elements, all invariant.
        assert_eq!(enumerate_invariant_bicharacters(&g, &w, &w).unwrap().len(), 16);
        let s3 = parse_group_spec("S3").unwrap();
        let a3 = s3.normal_subgroups(24).unwrap()[1].clone();
        assert_eq!(a3.order(), 3);
        // S3 acts on Z3 x Z3 bicharacters by inverting both slots: all 3 invariant.
        assert_eq!(enumerate_invariant_bicharacters(&s3, &a3, &a3).unwrap().len(), 3);
        assert!(enumerate_invariant_bicharacters(&s3, &s3.whole(), &s3.whole()).is_err());
    }

    #[test]
    fn z2_coideals() {
        let a = double("Z2");
        assert_eq!(enumerate_triples(a.group(), 24).unwrap().len(), 5);
        let all = enumerate_coideals(&a, 24).unwrap();
        assert_eq!(all.len(), 5);
        let mut dims: Vec<usize> = all.iter().map(|l| l.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2, 2, 2, 4]);
    }

    #[test]
    fn s3_extreme_coideals() {
        let a = double("S3");
        let g = a.group().clone();
        let all: Vec<usize> = (0..6).collect();
        // S3 does not commute with itself, so (G, G, triv) is not a triple.
        let w = g.whole();
        assert!(triple_for(&g, Bicharacter::trivial(&w, &w)).is_err());
        let a3 = g.normal_subgroups(24).unwrap()[1].members().to_vec();
        assert_eq!(build_coideal(&a, &triple(&g, &a3, &a3)).unwrap().dim(), 6);
        let k = build_coideal(&a, &triple(&g, &all, &[0])).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.space().contains_dense(&a.one()));
        let fun = build_coideal(&a, &triple(&g, &[0], &[0])).unwrap();
        assert_eq!(fun.dim(), 6);
        let whole = build_coideal(&a, &triple(&g, &[0], &all)).unwrap();
        assert_eq!(whole.dim(), 36);
    }

    #[test]
    fn integral_is_absorbing() {
        let a = double("S3");
        for l in enumerate_coideals(&a, 24).unwrap() {
            let lam = l.integral(&a).unwrap().clone();
            assert!(l.space().contains_dense(&lam));
            assert!(eval(a.counit(), &lam).is_one());
            for x in l.space().dense_rows() {
                let eps = eval(a.counit(), &x);
                assert_eq!(a.mul(&x, &lam), lam.iter().map(|c| c * &eps).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn swapping_twice_is_identity() {
        for s in ["Z4", "Z2xZ2", "S3", "Q8"] {
            let g = parse_group_spec(s).unwrap();
            for t in enumerate_triples(&g, 24).unwrap() {
                let back = swapped_triple(&g, &swapped_triple(&g, &t).unwrap()).unwrap();
                assert_eq!(back, t, "{s} {}", t.label());
                let inv = inverse_triple(&g, &inverse_triple(&g, &t).unwrap()).unwrap();
                assert_eq!(inv, t);
            }
        }
    }

    #[test]
    fn quotient_dual_routes_agree() {
        let a = double("S3");
        for l in enumerate_coideals(&a, 24).unwrap() {
            let b = quotient_dual(&a, &l).unwrap();
            assert_eq!(b, quotient_dual_by_equations(&a, &l));
            assert_eq!(b.dim() * l.dim(), a.dim());
            assert_eq!(recover_from_dual(&a, &b), *l.space());
        }
    }

    #[test]
    fn product_and_intersection() {
        let a = double("Z2xZ2");
        let all = enumerate_coideals(&a, 24).unwrap();
        for l in all.iter().take(12) {
            for m in all.iter().take(12) {
                let p = coideal_product(&a, l, m).unwrap();
                let q = coideal_intersect(&a, l, m).unwrap();
                assert_eq!(p.dim() * q.dim(), l.dim() * m.dim());
            }
        }
    }

    #[test]
    fn left_kernel_of_trivial_module_is_everything() {
        let a = double("S3");
        let triv: Vec<crate::linalg::Matrix> = (0..a.dim())
            .map(|i| crate::linalg::Matrix::from_fn(1, 1, |_, _| a.counit()[i].clone()))
            .collect();
        assert_eq!(left_kernel(&a, &[&triv]).unwrap().dim(), a.dim());
    }

    #[test]
    fn group_coideals_are_normal_subgroups() {
        let g = parse_group_spec("D4").unwrap();
        let a = build_triangular(&g, 400).unwrap();
        let ls = enumerate_group_coideals(&a, 24).unwrap();
        assert_eq!(ls.len(), 6);
        assert!(ls.iter().all(|l| is_normal_hopf_subalgebra(&a, l)));
        assert!(build_coideal(&a, &triple(&g, &[0], &[0])).is_err());
    }

    #[test]
    fn drinfeld_partner_of_extremes() {
        let a = double("S3");
        let g = a.group().clone();
        let all: Vec<usize> = (0..6).collect();
        let k = build_coideal(&a, &triple(&g, &all, &[0])).unwrap();
        let whole = build_coideal(&a, &triple(&g, &[0], &all)).unwrap();
        assert_eq!(drinfeld_partner(&a, &k).unwrap(), whole);
        assert_eq!(drinfeld_partner(&a, &whole).unwrap(), k);
    }
}
