//! Central idempotents, character-ring idempotents and conjugacy classes.

use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::{sv_from_dense, ColumnSolver, Subspace};
use crate::rational::Rational;

use super::{add, eval, is_zero, scale, Element, Functional, QTAlgebra};

/// `E_i = chi_i(1) (Lambda <- chi_i o S)`, checked to be a complete set of
/// orthogonal central idempotents dual to the characters.
pub fn central_idempotents(a: &QTAlgebra, chars: &[Functional], lam: &Element) -> Result<Vec<Element>> {
    let one = a.one();
    let mut es = Vec::with_capacity(chars.len());
    for chi in chars {
        let d = eval(chi, &one);
        let dual = a.dual_antipode(chi);
        es.push(scale(&a.harpoon_left(lam, &dual), &d));
    }
    let mut total = a.zero();
    for (i, e) in es.iter().enumerate() {
        if !a.is_central(e) {
            return Err(Error::InconsistentCharacters(format!("E_{i} is not central")));
        }
        if a.mul(e, e) != *e {
            return Err(Error::InconsistentCharacters(format!("E_{i} is not idempotent")));
        }
        for (j, chi) in chars.iter().enumerate() {
            let want = if i == j { eval(chi, &one) } else { Cyclo::zero() };
            if eval(chi, e) != want {
                return Err(Error::InconsistentCharacters(format!("chi_{j}(E_{i}) = {}", eval(chi, e))));
            }
        }
        total = add(&total, e);
    }
    if total != one {
        return Err(Error::InconsistentCharacters("idempotents do not sum to 1".into()));
    }
    Ok(es)
}

/// Everything derived from the irreducible characters and the integrals.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub characters: Vec<Functional>,
    pub degrees: Vec<usize>,
    pub integral: Element,
    pub dual_integral: Functional,
    pub central_idempotents: Vec<Element>,
    /// Primitive idempotents of the character ring, `F_0 = t`.
    pub char_idempotents: Vec<Functional>,
    /// `partition[j]` is the set of `s` with `E_s` in the support of `phi_R(F_j)`.
    pub partition: Vec<Vec<usize>>,
    /// `n_j = 1 / F_j(Lambda)`.
    pub n: Vec<u64>,
    /// `C^j = Lambda <- F_j A*`.
    pub classes: Vec<Subspace>,
    /// `C_j = Lambda <- (dim A) F_j`.
    pub class_sums: Vec<Element>,
    pub factorizable: bool,
    pub k_a: Subspace,
}

impl ClassData {
    pub fn compute(a: &QTAlgebra, chars: Vec<Functional>) -> Result<ClassData> {
        let (lam, t) = a.integrals()?;
        let es = central_idempotents(a, &chars, &lam)?;
        let one = a.one();
        let degrees: Vec<usize> = chars
            .iter()
            .map(|c| {
                eval(c, &one)
                    .as_integer()
                    .filter(|&d| d > 0)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::InconsistentCharacters("degree is not a positive integer".into()))
            })
            .collect::<Result<_>>()?;
        let k_a = a.drinfeld_image();
        let factorizable = k_a.dim() == a.dim();
        let fs = if factorizable {
            let solver = ColumnSolver::new(&a.drinfeld_columns(), a.dim());
            es.iter()
                .map(|e| {
                    solver
                        .solve(&sv_from_dense(e))
                        .ok_or_else(|| Error::NotFactorizable("E_j outside the image of phi_R".into()))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            split_character_ring(a, &chars)?
        };

        // Orthogonal idempotents summing to the counit, F_0 = t.
        let mut total = vec![Cyclo::zero(); a.dim()];
        for (i, f) in fs.iter().enumerate() {
            for (j, g) in fs.iter().enumerate() {
                let p = a.convolve(f, g);
                let ok = if i == j { p == *f } else { is_zero(&p) };
                if !ok {
                    return Err(Error::InvariantViolation(format!("F_{i} F_{j} is not as expected")));
                }
            }
            total = add(&total, f);
        }
        if total != a.dual_one() {
            return Err(Error::InvariantViolation("F_j do not sum to the counit".into()));
        }
        if fs[0] != t {
            return Err(Error::InvariantViolation("F_0 differs from the dual integral".into()));
        }

        let partition = fs
            .iter()
            .enumerate()
            .map(|(j, f)| {
                let image = a.drinfeld(f);
                let mut support = Vec::new();
                let mut rebuilt = a.zero();
                for (s, (chi, e)) in chars.iter().zip(&es).enumerate() {
                    let c = eval(chi, &image)
                        .checked_div(&Cyclo::from_int(degrees[s] as i64))?;
                    if !c.is_zero() {
                        support.push(s);
                        rebuilt = add(&rebuilt, &scale(e, &c));
                    }
                }
                if rebuilt != image {
                    return Err(Error::InvariantViolation(format!("phi_R(F_{j}) is not central")));
                }
                Ok(support)
            })
            .collect::<Result<Vec<_>>>()?;

        let n = fs
            .iter()
            .enumerate()
            .map(|(j, f)| {
                let v = eval(f, &lam);
                v.as_rational()
                    .filter(|q| !q.is_zero() && !q.is_negative())
                    .and_then(|q| q.recip().ok())
                    .and_then(|q| q.to_i64())
                    .map(|q| q as u64)
                    .ok_or_else(|| Error::InvariantViolation(format!("F_{j}(Lambda) = {v} is not 1/n")))
            })
            .collect::<Result<Vec<_>>>()?;

        let dim_c = Cyclo::from_int(a.dim() as i64);
        let classes: Vec<Subspace> = fs
            .iter()
            .map(|f| {
                Subspace::from_vectors(
                    a.dim(),
                    (0..a.dim()).map(|k| {
                        let fk = a.convolve(f, &a.dual_basis(k));
                        sv_from_dense(&a.harpoon_left(&lam, &fk))
                    }),
                )
            })
            .collect();
        let class_sums: Vec<Element> = fs
            .iter()
            .map(|f| a.harpoon_left(&lam, &scale(f, &dim_c)))
            .collect();

        let total_dim: usize = classes.iter().map(Subspace::dim).sum();
        if total_dim != a.dim() {
            return Err(Error::InvariantViolation(format!("class dimensions sum to {total_dim}")));
        }
        let mut sum = a.zero();
        for c in &class_sums {
            sum = add(&sum, c);
        }
        if sum != scale(&lam, &dim_c) {
            return Err(Error::InvariantViolation("class sums do not add up to (dim A) Lambda".into()));
        }

        Ok(ClassData {
            characters: chars,
            degrees,
            integral: lam,
            dual_integral: t,
            central_idempotents: es,
            char_idempotents: fs,
            partition,
            n,
            classes,
            class_sums,
            factorizable,
            k_a,
        })
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    /// `I_L = {j : C^j in L}`.
    pub fn classes_inside(&self, l: &Subspace) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&j| self.classes[j].is_subspace_of(l))
            .collect()
    }

    /// `{j : F_j(x) != 0}`.
    pub fn idempotent_support(&self, x: &Element) -> Vec<usize> {
        (0..self.char_idempotents.len())
            .filter(|&j| !eval(&self.char_idempotents[j], x).is_zero())
            .collect()
    }

    /// `(1 / dim L) sum_{j in I_L} C_j`.
    pub fn integral_from_classes(&self, l: &Subspace) -> Element {
        let mut acc = vec![Cyclo::zero(); self.integral.len()];
        for j in self.classes_inside(l) {
            acc = add(&acc, &self.class_sums[j]);
        }
        scale(&acc, &Cyclo::from_rational(Rational::new(1, l.dim() as i64)))
    }
}

/// Primitive idempotents of the character ring when the dual basis is a set
/// of orthogonal idempotents: indicators of the level sets of the characters.
fn split_character_ring(a: &QTAlgebra, chars: &[Functional]) -> Result<Vec<Functional>> {
    let d = a.dim();
    for i in 0..d {
        let ei = a.dual_basis(i);
        for j in 0..d {
            let p = a.convolve(&ei, &a.dual_basis(j));
            let ok = if i == j { p == ei } else { is_zero(&p) };
            if !ok {
                return Err(Error::NotFactorizable(
                    "character ring cannot be split: the dual basis is not orthogonal".into(),
                ));
            }
        }
    }
    let mut blocks: Vec<(Vec<Cyclo>, Vec<usize>)> = Vec::new();
    for i in 0..d {
        let key: Vec<Cyclo> = chars.iter().map(|c| c[i].clone()).collect();
        match blocks.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(i),
            None => blocks.push((key, vec![i])),
        }
    }
    // Blocks come out ordered by smallest index, so the one holding the
    // support of t comes first when t is supported at a single index.
    Ok(blocks
        .into_iter()
        .map(|(_, members)| {
            let mut f = vec![Cyclo::zero(); d];
            for m in members {
                f[m] = Cyclo::one();
            }
            f
        })
        .collect())
}
