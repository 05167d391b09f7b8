//! Simple modules, S-matrix, fusion rules and fusion subcategories.

mod centralizer;
mod lattice;

use std::collections::BTreeSet;

use serde_json::json;

use crate::chartab::CharacterTable;
use crate::coideal::{CoidealSubalgebra, Triple};
use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::hopf::{eval, ClassData, Functional, Kind, QTAlgebra, Tensor2};
use crate::linalg::Matrix;
use crate::repr::irreducible_representations;

pub use centralizer::{centralizer, Method};
pub use lattice::{brute_force_subcats, Lattice};

/// Parameters of a simple module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimpleLabel {
    /// `kG (x)_{C_G(a)} M_chi` for `D(kG)`.
    Double {
        class_index: usize,
        char_index: usize,
        /// The class representative `a`.
        rep: usize,
        centralizer: Subgroup,
        /// `chi` on the members of `C_G(a)`, by position.
        cent_char: Vec<Cyclo>,
    },
    /// An irreducible representation of `G` for `kG`.
    Group { char_index: usize },
}

/// A simple module given by the matrices of all basis elements.
#[derive(Clone, Debug)]
pub struct SimpleModule {
    pub index: usize,
    pub dim: usize,
    pub matrices: Vec<Matrix>,
    pub character: Functional,
    pub label: SimpleLabel,
}

impl SimpleModule {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({ "index": self.index, "dim": self.dim });
        match &self.label {
            SimpleLabel::Double {
                class_index,
                char_index,
                rep,
                ..
            } => {
                v["class"] = json!(class_index);
                v["char"] = json!(char_index);
                v["a"] = json!(rep);
            }
            SimpleLabel::Group { char_index } => v["char"] = json!(char_index),
        }
        v
    }

    pub fn name(&self) -> String {
        match &self.label {
            SimpleLabel::Double {
                class_index,
                char_index,
                ..
            } => format!("({class_index},{char_index})"),
            SimpleLabel::Group { char_index } => format!("chi{char_index}"),
        }
    }
}

/// One simple per (class, centralizer irrep), in that order.
pub fn double_irreps(a: &QTAlgebra) -> Result<Vec<SimpleModule>> {
    if a.kind() != Kind::Double {
        return Err(Error::PreconditionViolated("double_irreps needs a double".into()));
    }
    let g = a.group();
    let n = g.order();
    let mut out = Vec::new();
    for (class_index, class) in g.conjugacy_classes().iter().enumerate() {
        let rep = class.representative;
        let cent = g.centralizer(rep);
        let cg = g.subgroup_as_group(&cent);
        let tab = CharacterTable::new(&cg)?;
        let reps = irreducible_representations(&cg, &tab)?;
        let cosets = g.left_coset_reps(&cent);
        // x = cosets[j] * c with c in C_G(a): (j, position of c).
        let decompose = |x: usize| {
            cosets
                .iter()
                .enumerate()
                .find_map(|(j, &gj)| cent.position(g.mul(g.inv(gj), x)).map(|p| (j, p)))
                .expect("cosets cover G")
        };
        let labels: Vec<usize> = cosets.iter().map(|&gi| g.conj(gi, rep)).collect();
        for (char_index, rho) in reps.iter().enumerate() {
            let d = rho.dim();
            let dim = cosets.len() * d;
            let group_mats: Vec<Matrix> = (0..n)
                .map(|h| {
                    let mut m = Matrix::zeros(dim, dim);
                    for (i, &gi) in cosets.iter().enumerate() {
                        let (j, c) = decompose(g.mul(h, gi));
                        let block = rho.matrix(c);
                        for r in 0..d {
                            for s in 0..d {
                                m.set(j * d + r, i * d + s, block.get(r, s).clone());
                            }
                        }
                    }
                    m
                })
                .collect();
            let mut matrices = Vec::with_capacity(n * n);
            for x in 0..n {
                for h in 0..n {
                    // p_x # h acts as h followed by p_x.
                    let mut m = group_mats[h].clone();
                    for (j, &lab) in labels.iter().enumerate() {
                        if lab != x {
                            for r in 0..d {
                                for col in 0..dim {
                                    m.set(j * d + r, col, Cyclo::zero());
                                }
                            }
                        }
                    }
                    matrices.push(m);
                }
            }
            let character = matrices.iter().map(Matrix::trace).collect();
            out.push(SimpleModule {
                index: out.len(),
                dim,
                matrices,
                character,
                label: SimpleLabel::Double {
                    class_index,
                    char_index,
                    rep,
                    centralizer: cent.clone(),
                    cent_char: (0..cent.order()).map(|p| tab.value(char_index, p).clone()).collect(),
                },
            });
        }
    }
    Ok(out)
}

/// The irreducible representations of `G` as modules over `kG`.
pub fn group_irreps(a: &QTAlgebra) -> Result<Vec<SimpleModule>> {
    if a.kind() != Kind::Triangular {
        return Err(Error::PreconditionViolated("group_irreps needs a group algebra".into()));
    }
    let g = a.group();
    let tab = CharacterTable::new(g)?;
    let reps = irreducible_representations(g, &tab)?;
    Ok(reps
        .into_iter()
        .enumerate()
        .map(|(i, r)| SimpleModule {
            index: i,
            dim: r.dim(),
            character: r.matrices().iter().map(Matrix::trace).collect(),
            matrices: r.matrices().to_vec(),
            label: SimpleLabel::Group { char_index: i },
        })
        .collect())
}

fn check_module(a: &QTAlgebra, m: &SimpleModule) -> Result<()> {
    let d = a.dim();
    let act = |v: &[(usize, Cyclo)]| {
        let mut acc = Matrix::zeros(m.dim, m.dim);
        for (i, c) in v {
            acc = acc.add(&m.matrices[*i].scale(c));
        }
        acc
    };
    if act(&crate::linalg::sv_from_dense(&a.one())) != Matrix::identity(m.dim) {
        return Err(Error::InternalMismatch(format!("unit acts nontrivially on simple {}", m.index)));
    }
    for i in 0..d {
        for gen in a.generators() {
            let lhs = m.matrices[i].mul(&act(gen));
            let rhs = act(&a.mul_sparse(&[(i, Cyclo::one())], gen));
            if lhs != rhs {
                return Err(Error::InternalMismatch(format!("simple {} is not a module", m.index)));
            }
        }
    }
    Ok(())
}

/// Exact S-matrix `s_ij = chi_i(phi_R(chi_j o S))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMatrix {
    pub entries: Vec<Vec<Cyclo>>,
}

impl SMatrix {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.entries[i][j]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .entries
            .iter()
            .map(|r| r.iter().map(Cyclo::to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

/// The S-matrix twice: from characters and the Drinfeld map, and as the trace
/// of `Q` on `V_j* (x) V_i` from module matrices with `rho*(x) = rho(Sx)^T`.
pub fn smatrix(a: &QTAlgebra, simples: &[SimpleModule]) -> Result<SMatrix> {
    let r = simples.len();
    let duals: Vec<Functional> = simples.iter().map(|s| a.dual_antipode(&s.character)).collect();
    let by_chars: Vec<Vec<Cyclo>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| eval(&simples[i].character, &a.drinfeld(&duals[j])))
                .collect()
        })
        .collect();

    let d = a.dim();
    let mut by_trace = vec![vec![Cyclo::zero(); r]; r];
    // tr(rho_j(S x)^T) for every basis x, and tr rho_i(x).
    let dual_traces: Vec<Vec<Cyclo>> = simples
        .iter()
        .map(|s| {
            (0..d)
                .map(|x| {
                    let mut m = Matrix::zeros(s.dim, s.dim);
                    for (k, c) in a.basis_antipode(x) {
                        m = m.add(&s.matrices[*k].scale(c));
                    }
                    m.transpose().trace()
                })
                .collect()
        })
        .collect();
    let traces: Vec<Vec<Cyclo>> = simples
        .iter()
        .map(|s| s.matrices.iter().map(Matrix::trace).collect())
        .collect();
    for (q1, q2, c) in a.monodromy() {
        for i in 0..r {
            if traces[i][*q2].is_zero() {
                continue;
            }
            let ci = c * &traces[i][*q2];
            for j in 0..r {
                if !dual_traces[j][*q1].is_zero() {
                    by_trace[i][j] = &by_trace[i][j] + &(&ci * &dual_traces[j][*q1]);
                }
            }
        }
    }
    if by_chars != by_trace {
        return Err(Error::InternalMismatch("S-matrix routes disagree".into()));
    }
    Ok(SMatrix { entries: by_chars })
}

/// `N[i][j][k]`, the multiplicity of `V_k` in `V_i (x) V_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRules {
    pub n: Vec<Vec<Vec<u32>>>,
}

impl FusionRules {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.n[i][j][k]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self.n)
    }
}

/// `N_ij^k = (chi_i chi_j chi_k*)(Lambda)` by convolution.
pub fn fusion_coefficients(
    a: &QTAlgebra,
    chars: &[Functional],
    dims: &[u64],
    lam: &[Cyclo],
) -> Result<FusionRules> {
    let r = chars.len();
    let delta: Tensor2 = a.comul(lam);
    let duals: Vec<Functional> = chars.iter().map(|c| a.dual_antipode(c)).collect();
    let mut n = vec![vec![vec![0u32; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let p = a.convolve(&chars[i], &chars[j]);
            let mut total = 0u64;
            for k in 0..r {
                let mut v = Cyclo::zero();
                for ((x, y), c) in &delta {
                    if !p[*x].is_zero() && !duals[k][*y].is_zero() {
                        v = &v + &(&(c * &p[*x]) * &duals[k][*y]);
                    }
                }
                let m = v
                    .as_integer()
                    .filter(|&m| m >= 0)
                    .ok_or_else(|| Error::NonIntegerMultiplicity(format!("N_{i},{j}^{k} = {v}")))?;
                n[i][j][k] = m as u32;
                total += m as u64 * dims[k];
            }
            if total != dims[i] * dims[j] {
                return Err(Error::NonIntegerMultiplicity(format!("dimensions do not add up for {i} x {j}")));
            }
        }
    }
    Ok(FusionRules { n })
}

/// A fusion subcategory as a sorted set of simple indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FusionSubcategory {
    pub simples: Vec<usize>,
    pub fpdim: u64,
    pub triple: Option<Triple>,
}

impl FusionSubcategory {
    pub fn label(&self) -> String {
        match &self.triple {
            Some(t) => format!("S({}) fpdim={}", t.label(), self.fpdim),
            None => format!("{:?} fpdim={}", self.simples, self.fpdim),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "simples": self.simples,
            "fpdim": self.fpdim,
            "triple": self.triple.as_ref().map(Triple::to_json),
        })
    }
}

/// Everything about `Rep(A)` needed downstream.
pub struct Category {
    pub algebra: QTAlgebra,
    pub simples: Vec<SimpleModule>,
    pub dims: Vec<u64>,
    pub duals: Vec<usize>,
    pub classes: ClassData,
    pub smatrix: SMatrix,
    pub fusion: FusionRules,
}

impl Category {
    pub fn new(a: QTAlgebra) -> Result<Category> {
        let simples = match a.kind() {
            Kind::Double => double_irreps(&a)?,
            Kind::Triangular => group_irreps(&a)?,
        };
        for s in &simples {
            check_module(&a, s)?;
        }
        let dims: Vec<u64> = simples.iter().map(|s| s.dim as u64).collect();
        let total: u64 = dims.iter().map(|d| d * d).sum();
        if total != a.dim() as u64 {
            return Err(Error::InternalMismatch(format!("sum of squared dimensions is {total}")));
        }
        let chars: Vec<Functional> = simples.iter().map(|s| s.character.clone()).collect();
        let duals = chars
            .iter()
            .map(|c| {
                let d = a.dual_antipode(c);
                chars
                    .iter()
                    .position(|x| *x == d)
                    .ok_or_else(|| Error::InconsistentCharacters("dual character missing".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let classes = ClassData::compute(&a, chars.clone())?;
        let smatrix = smatrix(&a, &simples)?;
        let fusion = fusion_coefficients(&a, &chars, &dims, &classes.integral)?;
        Ok(Category {
            algebra: a,
            simples,
            dims,
            duals,
            classes,
            smatrix,
            fusion,
        })
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn fpdim(&self, simples: &[usize]) -> u64 {
        simples.iter().map(|&i| self.dims[i] * self.dims[i]).sum()
    }

    pub fn subcategory(&self, simples: Vec<usize>, triple: Option<Triple>) -> FusionSubcategory {
        let fpdim = self.fpdim(&simples);
        FusionSubcategory { simples, fpdim, triple }
    }

    /// Smallest set containing `seed` and the unit, closed under duals and fusion.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = seed.iter().copied().collect();
        set.insert(0);
        loop {
            let mut next = set.clone();
            for &i in &set {
                next.insert(self.duals[i]);
                for &j in &set {
                    for k in 0..self.len() {
                        if self.fusion.get(i, j, k) > 0 {
                            next.insert(k);
                        }
                    }
                }
            }
            if next == set {
                return set.into_iter().collect();
            }
            set = next;
        }
    }

    pub fn is_closed(&self, simples: &[usize]) -> bool {
        self.closure(simples) == simples
    }

    /// `Rep(A//L) = {i : chi_i(Lambda_L) = chi_i(1)}`.
    pub fn quotient_irreps(&self, l: &CoidealSubalgebra) -> Result<FusionSubcategory> {
        let lam = l.integral(&self.algebra)?;
        let simples: Vec<usize> = (0..self.len())
            .filter(|&i| eval(&self.simples[i].character, lam) == Cyclo::from_int(self.dims[i] as i64))
            .collect();
        let sub = self.subcategory(simples, None);
        if !self.is_closed(&sub.simples) {
            return Err(Error::NotClosed(format!("Rep(A//L) for {}", l.label())));
        }
        if sub.fpdim * l.dim() as u64 != self.algebra.dim() as u64 {
            return Err(Error::InvariantViolation(format!(
                "FPdim {} times dim L {} is not dim A",
                sub.fpdim,
                l.dim()
            )));
        }
        Ok(sub)
    }

    /// `S(M, H, lambda)`: the `(a, chi)` with `a in M`, `lambda(a, h) chi(1) = chi(h)`.
    pub fn subcat_from_triple(&self, t: &Triple) -> Result<FusionSubcategory> {
        let g = self.algebra.group();
        let simples: Vec<usize> = self
            .simples
            .iter()
            .filter(|s| match &s.label {
                SimpleLabel::Double {
                    rep,
                    centralizer,
                    cent_char,
                    ..
                } => {
                    t.m.contains(*rep)
                        && t.h.members().iter().all(|&h| {
                            let pos = centralizer.position(h).expect("H centralizes M");
                            &t.lambda.value(*rep, h) * &cent_char[0] == cent_char[pos]
                        })
                }
                SimpleLabel::Group { .. } => false,
            })
            .map(|s| s.index)
            .collect();
        let sub = self.subcategory(simples, Some(t.clone()));
        if !self.is_closed(&sub.simples) {
            return Err(Error::NotClosed(t.label()));
        }
        let want = (t.m.order() * (g.order() / t.h.order())) as u64;
        if sub.fpdim != want {
            return Err(Error::NotClosed(format!("{}: FPdim {} instead of {want}", t.label(), sub.fpdim)));
        }
        Ok(sub)
    }

    /// Fusion closure of `seed`.
    pub fn generated_subcategory(&self, seed: &[usize]) -> FusionSubcategory {
        self.subcategory(self.closure(seed), None)
    }

    /// Dual of a fusion subcategory.
    pub fn dual_set(&self, simples: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = simples.iter().map(|&i| self.duals[i]).collect();
        v.sort();
        v
    }

    pub fn simples_json(&self) -> serde_json::Value {
        json!(self.simples.iter().map(SimpleModule::to_json).collect::<Vec<_>>())
    }
}
