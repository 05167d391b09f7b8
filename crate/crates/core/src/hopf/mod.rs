//! Finite-dimensional quasitriangular Hopf algebras by structure constants.
//!
//! Elements of `A` and of `A*` are dense coefficient vectors over the basis
//! `e_i` and the dual basis `e_i*`. All structure maps are sparse tables.

mod classes;
mod double;

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::{kernel_of_columns, sv_from_dense, sv_get, SparseVec, Subspace};

pub use classes::{central_idempotents, ClassData};
pub use double::{build_double, build_triangular, DEFAULT_MAX_ALGEBRA_DIM};

/// Element of `A` as coefficients on the basis.
pub type Element = Vec<Cyclo>;
/// Element of `A*` as coefficients on the dual basis.
pub type Functional = Vec<Cyclo>;
/// Element of `A (x) A`.
pub type Tensor2 = BTreeMap<(usize, usize), Cyclo>;

type Tensor3 = BTreeMap<(usize, usize, usize), Cyclo>;

/// Which constructible family an instance belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// `D(kG)`, basis `p_g # h` at index `g*|G| + h`.
    Double,
    /// `kG` with `R = 1 (x) 1`, basis the group elements.
    Triangular,
}

/// A quasitriangular Hopf algebra by structure constants.
#[derive(Clone)]
pub struct QTAlgebra {
    name: String,
    kind: Kind,
    group: Group,
    dim: usize,
    // e_i e_j at index i*dim + j.
    mult: Vec<SparseVec>,
    unit: SparseVec,
    comult: Vec<Vec<(usize, usize, Cyclo)>>,
    counit: Vec<Cyclo>,
    antipode: Vec<SparseVec>,
    rmatrix: Vec<(usize, usize, Cyclo)>,
    monodromy: Vec<(usize, usize, Cyclo)>,
    // Generate A as an algebra.
    generators: Vec<SparseVec>,
}

impl fmt::Debug for QTAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTAlgebra({}, dim {})", self.name, self.dim)
    }
}

fn add_into(acc: &mut Tensor2, key: (usize, usize), v: Cyclo) {
    if v.is_zero() {
        return;
    }
    let slot = acc.entry(key).or_default();
    *slot = &*slot + &v;
    if slot.is_zero() {
        acc.remove(&key);
    }
}

fn add_into3(acc: &mut Tensor3, key: (usize, usize, usize), v: Cyclo) {
    if v.is_zero() {
        return;
    }
    let slot = acc.entry(key).or_default();
    *slot = &*slot + &v;
    if slot.is_zero() {
        acc.remove(&key);
    }
}

/// Raw structure data for [`QTAlgebra::new`].
pub struct Structure {
    pub name: String,
    pub kind: Kind,
    pub group: Group,
    pub dim: usize,
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    pub comult: Vec<Vec<(usize, usize, Cyclo)>>,
    pub counit: Vec<Cyclo>,
    pub antipode: Vec<SparseVec>,
    pub rmatrix: Vec<(usize, usize, Cyclo)>,
    pub generators: Vec<SparseVec>,
}

impl QTAlgebra {
    /// Builds the algebra, derives `Q = R21 R` and verifies every axiom.
    pub fn new(s: Structure) -> Result<QTAlgebra> {
        let mut a = QTAlgebra {
            name: s.name,
            kind: s.kind,
            group: s.group,
            dim: s.dim,
            mult: s.mult,
            unit: s.unit,
            comult: s.comult,
            counit: s.counit,
            antipode: s.antipode,
            rmatrix: s.rmatrix,
            monodromy: Vec::new(),
            generators: s.generators,
        };
        let r = a.rmatrix_tensor();
        let r21: Tensor2 = r.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect();
        a.monodromy = a
            .tensor_mul(&r21, &r)
            .into_iter()
            .map(|((i, j), c)| (i, j, c))
            .collect();
        let failures: Vec<String> = a
            .axiom_checks()
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| name)
            .collect();
        if !failures.is_empty() {
            return Err(Error::InvariantViolation(format!(
                "{}: failed axioms {}",
                a.name,
                failures.join(", ")
            )));
        }
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero(&self) -> Element {
        vec![Cyclo::zero(); self.dim]
    }

    pub fn one(&self) -> Element {
        crate::linalg::sv_to_dense(&self.unit, self.dim)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = self.zero();
        v[i] = Cyclo::one();
        v
    }

    pub fn counit(&self) -> &[Cyclo] {
        &self.counit
    }

    pub fn generators(&self) -> &[SparseVec] {
        &self.generators
    }

    /// Sparse monodromy `Q = R21 R` as `(i, j, c)` meaning `c e_i (x) e_j`.
    pub fn monodromy(&self) -> &[(usize, usize, Cyclo)] {
        &self.monodromy
    }

    pub fn rmatrix(&self) -> &[(usize, usize, Cyclo)] {
        &self.rmatrix
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn basis_comult(&self, i: usize) -> &[(usize, usize, Cyclo)] {
        &self.comult[i]
    }

    pub fn basis_antipode(&self, i: usize) -> &SparseVec {
        &self.antipode[i]
    }

    fn rmatrix_tensor(&self) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, j, c) in &self.rmatrix {
            add_into(&mut t, (*i, *j), c.clone());
        }
        t
    }

    pub fn mul_sparse(&self, a: &[(usize, Cyclo)], b: &[(usize, Cyclo)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in self.basis_product(*i, *j) {
                    let slot = acc.entry(*k).or_default();
                    *slot = &*slot + &(&xy * c);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn mul(&self, a: &[Cyclo], b: &[Cyclo]) -> Element {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let prod = self.basis_product(i, j);
                if prod.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in prod {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    pub fn comul(&self, a: &[Cyclo]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                add_into(&mut t, (*j, *k), x * c);
            }
        }
        t
    }

    pub fn apply_counit(&self, a: &[Cyclo]) -> Cyclo {
        eval(&self.counit, a)
    }

    pub fn antipode(&self, a: &[Cyclo]) -> Element {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in &self.antipode[i] {
                out[*k] = &out[*k] + &(x * c);
            }
        }
        out
    }

    /// Product in `A (x) A`.
    pub fn tensor_mul(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(i, j), x) in a {
            for (&(k, l), y) in b {
                let left = self.basis_product(i, k);
                if left.is_empty() {
                    continue;
                }
                let right = self.basis_product(j, l);
                if right.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (p, c) in left {
                    let xyc = &xy * c;
                    for (q, d) in right {
                        add_into(&mut out, (*p, *q), &xyc * d);
                    }
                }
            }
        }
        out
    }

    fn tensor3_mul(&self, a: &Tensor3, b: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(i, j, k), x) in a {
            for (&(l, m, n), y) in b {
                let p1 = self.basis_product(i, l);
                let p2 = self.basis_product(j, m);
                let p3 = self.basis_product(k, n);
                if p1.is_empty() || p2.is_empty() || p3.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (a1, c1) in p1 {
                    for (a2, c2) in p2 {
                        let c12 = &(&xy * c1) * c2;
                        for (a3, c3) in p3 {
                            add_into3(&mut out, (*a1, *a2, *a3), &c12 * c3);
                        }
                    }
                }
            }
        }
        out
    }

    /// Convolution product in `A*`: `(fg)(a) = f(a_1) g(a_2)`.
    pub fn convolve(&self, f: &[Cyclo], g: &[Cyclo]) -> Functional {
        (0..self.dim)
            .map(|i| {
                let mut acc = Cyclo::zero();
                for (j, k, c) in &self.comult[i] {
                    if f[*j].is_zero() || g[*k].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&(&f[*j] * &g[*k]) * c);
                }
                acc
            })
            .collect()
    }

    /// Unit of `A*` (the counit).
    pub fn dual_one(&self) -> Functional {
        self.counit.clone()
    }

    pub fn dual_basis(&self, i: usize) -> Functional {
        self.basis_element(i)
    }

    /// `f o S`.
    pub fn dual_antipode(&self, f: &[Cyclo]) -> Functional {
        (0..self.dim)
            .map(|i| {
                let mut acc = Cyclo::zero();
                for (k, c) in &self.antipode[i] {
                    acc = &acc + &(&f[*k] * c);
                }
                acc
            })
            .collect()
    }

    /// `a <- f = f(a_1) a_2`.
    pub fn harpoon_left(&self, a: &[Cyclo], f: &[Cyclo]) -> Element {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                if f[*j].is_zero() {
                    continue;
                }
                out[*k] = &out[*k] + &(&(x * c) * &f[*j]);
            }
        }
        out
    }

    /// `f -> a = a_1 f(a_2)`.
    pub fn harpoon_right(&self, f: &[Cyclo], a: &[Cyclo]) -> Element {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                if f[*k].is_zero() {
                    continue;
                }
                out[*j] = &out[*j] + &(&(x * c) * &f[*k]);
            }
        }
        out
    }

    /// `(x -> f)(a) = f(a x)`, the left action of `A` on `A*`.
    pub fn act_on_dual(&self, x: &[Cyclo], f: &[Cyclo]) -> Functional {
        let xs = sv_from_dense(x);
        (0..self.dim)
            .map(|i| {
                let mut acc = Cyclo::zero();
                for (j, xj) in &xs {
                    for (k, c) in self.basis_product(i, *j) {
                        if !f[*k].is_zero() {
                            acc = &acc + &(&(xj * c) * &f[*k]);
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// `phi_R(f) = f(Q^1) Q^2`.
    pub fn drinfeld(&self, f: &[Cyclo]) -> Element {
        let mut out = self.zero();
        for (i, j, c) in &self.monodromy {
            if !f[*i].is_zero() {
                out[*j] = &out[*j] + &(&f[*i] * c);
            }
        }
        out
    }

    /// `_R phi(f) = Q^1 f(Q^2)`.
    pub fn drinfeld_right(&self, f: &[Cyclo]) -> Element {
        let mut out = self.zero();
        for (i, j, c) in &self.monodromy {
            if !f[*j].is_zero() {
                out[*i] = &out[*i] + &(&f[*j] * c);
            }
        }
        out
    }

    /// Columns `phi_R(e_k*)` of the Drinfeld map.
    pub fn drinfeld_columns(&self) -> Vec<SparseVec> {
        let mut cols: Vec<BTreeMap<usize, Cyclo>> = vec![BTreeMap::new(); self.dim];
        for (i, j, c) in &self.monodromy {
            let slot = cols[*i].entry(*j).or_default();
            *slot = &*slot + c;
        }
        cols.into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect()
    }

    /// `K_A = phi_R(A*)`.
    pub fn drinfeld_image(&self) -> Subspace {
        Subspace::from_vectors(self.dim, self.drinfeld_columns())
    }

    pub fn is_factorizable(&self) -> bool {
        self.drinfeld_image().dim() == self.dim
    }

    /// `a_1 l S(a_2)`.
    pub fn left_adjoint(&self, a: &[Cyclo], l: &[Cyclo]) -> Element {
        let mut out = self.zero();
        let ls = sv_from_dense(l);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                let left = self.mul_sparse(&[(*j, x * c)], &ls);
                let prod = self.mul_sparse(&left, &self.antipode[*k]);
                for (p, v) in prod {
                    out[p] = &out[p] + &v;
                }
            }
        }
        out
    }

    /// `S(a_1) l a_2`.
    pub fn right_adjoint(&self, a: &[Cyclo], l: &[Cyclo]) -> Element {
        let mut out = self.zero();
        let ls = sv_from_dense(l);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                let left = self.mul_sparse(&self.antipode[*j], &ls);
                let prod = self.mul_sparse(&left, &[(*k, x * c)]);
                for (p, v) in prod {
                    out[p] = &out[p] + &v;
                }
            }
        }
        out
    }

    /// Commutes with every algebra generator.
    pub fn is_central(&self, x: &[Cyclo]) -> bool {
        let xs = sv_from_dense(x);
        self.generators
            .iter()
            .all(|g| self.mul_sparse(g, &xs) == self.mul_sparse(&xs, g))
    }

    /// Named pass/fail results for the Hopf and R-matrix axioms.
    ///
    /// Multiplicativity-type identities are checked against the algebra
    /// generators only, which suffices by induction on word length.
    pub fn axiom_checks(&self) -> Vec<(String, bool)> {
        let d = self.dim;
        let mut out = Vec::new();
        let unit = &self.unit;
        let one_dense = self.one();

        let unit_ok = (0..d).all(|i| {
            let e = vec![(i, Cyclo::one())];
            self.mul_sparse(unit, &e) == e && self.mul_sparse(&e, unit) == e
        });
        out.push(("unit".into(), unit_ok));

        let assoc = (0..d).all(|i| {
            (0..d).all(|j| {
                let ij = self.basis_product(i, j);
                self.generators.iter().all(|g| {
                    let lhs = self.mul_sparse(ij, g);
                    let jg = self.mul_sparse(&[(j, Cyclo::one())], g);
                    lhs == self.mul_sparse(&[(i, Cyclo::one())], &jg)
                })
            })
        });
        out.push(("associativity".into(), assoc));

        let coassoc = (0..d).all(|i| {
            let mut l = Tensor3::new();
            let mut r = Tensor3::new();
            for (j, k, c) in &self.comult[i] {
                for (a, b, e) in &self.comult[*j] {
                    add_into3(&mut l, (*a, *b, *k), c * e);
                }
                for (a, b, e) in &self.comult[*k] {
                    add_into3(&mut r, (*j, *a, *b), c * e);
                }
            }
            l == r
        });
        out.push(("coassociativity".into(), coassoc));

        let counit = (0..d).all(|i| {
            let mut l = vec![Cyclo::zero(); d];
            let mut r = vec![Cyclo::zero(); d];
            for (j, k, c) in &self.comult[i] {
                l[*k] = &l[*k] + &(c * &self.counit[*j]);
                r[*j] = &r[*j] + &(c * &self.counit[*k]);
            }
            let e = self.basis_element(i);
            l == e && r == e
        });
        out.push(("counit".into(), counit));

        let antipode = (0..d).all(|i| {
            let mut l = self.zero();
            let mut r = self.zero();
            for (j, k, c) in &self.comult[i] {
                for (p, v) in self.mul_sparse(&self.antipode[*j], &[(*k, c.clone())]) {
                    l[p] = &l[p] + &v;
                }
                for (p, v) in self.mul_sparse(&[(*j, c.clone())], &self.antipode[*k]) {
                    r[p] = &r[p] + &v;
                }
            }
            let want: Element = one_dense.iter().map(|u| u * &self.counit[i]).collect();
            l == want && r == want
        });
        out.push(("antipode".into(), antipode));

        let delta_mult = (0..d).all(|i| {
            self.generators.iter().all(|g| {
                let e = self.basis_element(i);
                let gd = crate::linalg::sv_to_dense(g, d);
                let lhs = self.comul(&self.mul(&e, &gd));
                lhs == self.tensor_mul(&self.comul(&e), &self.comul(&gd))
            })
        });
        out.push(("comultiplication is multiplicative".into(), delta_mult));

        let eps_mult = (0..d).all(|i| {
            self.generators.iter().all(|g| {
                let e = self.basis_element(i);
                let gd = crate::linalg::sv_to_dense(g, d);
                self.apply_counit(&self.mul(&e, &gd)) == &self.counit[i] * &self.apply_counit(&gd)
            })
        });
        out.push(("counit is multiplicative".into(), eps_mult));
        out.push((
            "counit and comultiplication are unital".into(),
            self.apply_counit(&one_dense).is_one() && {
                let mut one_one = Tensor2::new();
                for (i, a) in unit {
                    for (j, b) in unit {
                        add_into(&mut one_one, (*i, *j), a * b);
                    }
                }
                self.comul(&one_dense) == one_one
            },
        ));

        let r = self.rmatrix_tensor();
        let r_axiom1 = self.generators.iter().all(|g| {
            let gd = crate::linalg::sv_to_dense(g, d);
            let delta = self.comul(&gd);
            let cop: Tensor2 = delta.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect();
            self.tensor_mul(&r, &delta) == self.tensor_mul(&cop, &r)
        });
        out.push(("R Delta(x) = Delta^cop(x) R".into(), r_axiom1));

        // (Delta (x) id)(R) = R13 R23 and (id (x) Delta)(R) = R13 R12.
        let mut d_id = Tensor3::new();
        let mut id_d = Tensor3::new();
        let mut r13 = Tensor3::new();
        let mut r23 = Tensor3::new();
        let mut r12 = Tensor3::new();
        for (&(i, j), c) in &r {
            for (a, b, e) in &self.comult[i] {
                add_into3(&mut d_id, (*a, *b, j), c * e);
            }
            for (a, b, e) in &self.comult[j] {
                add_into3(&mut id_d, (i, *a, *b), c * e);
            }
            for (u, x) in unit {
                add_into3(&mut r13, (i, *u, j), c * x);
                add_into3(&mut r23, (*u, i, j), c * x);
                add_into3(&mut r12, (i, j, *u), c * x);
            }
        }
        out.push(("(Delta x id)(R) = R13 R23".into(), d_id == self.tensor3_mul(&r13, &r23)));
        out.push(("(id x Delta)(R) = R13 R12".into(), id_d == self.tensor3_mul(&r13, &r12)));

        let mut eps_l = self.zero();
        let mut eps_r = self.zero();
        for (&(i, j), c) in &r {
            eps_l[j] = &eps_l[j] + &(c * &self.counit[i]);
            eps_r[i] = &eps_r[i] + &(c * &self.counit[j]);
        }
        out.push(("(eps x id)(R) = 1 = (id x eps)(R)".into(), eps_l == one_dense && eps_r == one_dense));
        out
    }

    /// Idempotent two-sided integrals `(Lambda, t)` with `eps(Lambda) = 1`, `t(1) = 1`.
    pub fn integrals(&self) -> Result<(Element, Functional)> {
        let d = self.dim;
        // Columns k: (g - eps(g)) e_k stacked over generators g.
        let cols: Vec<SparseVec> = (0..d)
            .map(|k| {
                let e = vec![(k, Cyclo::one())];
                let mut col = Vec::new();
                for (gi, g) in self.generators.iter().enumerate() {
                    let eps_g = self.apply_counit(&crate::linalg::sv_to_dense(g, d));
                    let mut v = self.mul_sparse(g, &e);
                    v = crate::linalg::sv_axpy(&v, &-eps_g, &e);
                    col.extend(v.into_iter().map(|(i, c)| (gi * d + i, c)));
                }
                col
            })
            .collect();
        let ker = kernel_of_columns(&cols, d * self.generators.len());
        if ker.dim() != 1 {
            return Err(Error::NoIntegral(format!("space of left integrals has dimension {}", ker.dim())));
        }
        let lam = crate::linalg::sv_to_dense(&ker.rows()[0], d);
        let eps = self.apply_counit(&lam);
        let lam: Element = match eps.inverse() {
            Ok(inv) => lam.iter().map(|c| c * &inv).collect(),
            Err(_) => return Err(Error::NoIntegral("eps(Lambda) = 0: not semisimple".into())),
        };

        // Functional: e_i* t = e_i*(1) t for all i.
        let unit = self.one();
        let cols: Vec<SparseVec> = (0..d)
            .map(|k| {
                let mut col = Vec::new();
                for i in 0..d {
                    for m in 0..d {
                        let mut v = Cyclo::zero();
                        for (j, kk, c) in &self.comult[m] {
                            if *j == i && *kk == k {
                                v = &v + c;
                            }
                        }
                        if m == k {
                            v = &v - &unit[i];
                        }
                        if !v.is_zero() {
                            col.push((i * d + m, v));
                        }
                    }
                }
                col
            })
            .collect();
        let ker = kernel_of_columns(&cols, d * d);
        if ker.dim() != 1 {
            return Err(Error::NoIntegral(format!("space of dual integrals has dimension {}", ker.dim())));
        }
        let t = crate::linalg::sv_to_dense(&ker.rows()[0], d);
        let t1 = eval(&t, &unit);
        let t: Functional = match t1.inverse() {
            Ok(inv) => t.iter().map(|c| c * &inv).collect(),
            Err(_) => return Err(Error::NoIntegral("t(1) = 0: not cosemisimple".into())),
        };
        Ok((lam, t))
    }

    /// Trace of left multiplication, as a functional.
    pub fn regular_character(&self) -> Functional {
        (0..self.dim)
            .map(|i| {
                let mut tr = Cyclo::zero();
                for j in 0..self.dim {
                    if let Some(c) = sv_get(self.basis_product(i, j), j) {
                        tr = &tr + c;
                    }
                }
                tr
            })
            .collect()
    }

    /// Structure dump: dimension and sparse triplets.
    pub fn to_json(&self) -> serde_json::Value {
        let mult: Vec<serde_json::Value> = (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .flat_map(|(i, j)| {
                self.basis_product(i, j)
                    .iter()
                    .map(move |(k, c)| serde_json::json!([i, j, k, c.to_json()]))
            })
            .collect();
        let comult: Vec<serde_json::Value> = (0..self.dim)
            .flat_map(|i| {
                self.comult[i]
                    .iter()
                    .map(move |(j, k, c)| serde_json::json!([i, j, k, c.to_json()]))
            })
            .collect();
        let r: Vec<serde_json::Value> = self
            .rmatrix
            .iter()
            .map(|(i, j, c)| serde_json::json!([i, j, c.to_json()]))
            .collect();
        serde_json::json!({
            "name": self.name,
            "dim": self.dim,
            "mult": mult,
            "comult": comult,
            "counit": self.counit.iter().map(Cyclo::to_json).collect::<Vec<_>>(),
            "antipode": (0..self.dim).flat_map(|i| self.antipode[i].iter().map(move |(k, c)| serde_json::json!([i, k, c.to_json()]))).collect::<Vec<_>>(),
            "rmatrix": r,
        })
    }
}

/// `f(a)`.
pub fn eval(f: &[Cyclo], a: &[Cyclo]) -> Cyclo {
    let mut acc = Cyclo::zero();
    for (x, y) in f.iter().zip(a) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

pub fn scale(v: &[Cyclo], c: &Cyclo) -> Vec<Cyclo> {
    v.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Cyclo], b: &[Cyclo]) -> Vec<Cyclo> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Cyclo], b: &[Cyclo]) -> Vec<Cyclo> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn is_zero(a: &[Cyclo]) -> bool {
    a.iter().all(Cyclo::is_zero)
}
