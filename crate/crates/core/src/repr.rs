//! Explicit matrices for irreducible representations of a finite group.
//!
//! For a character `chi` of degree `d > 1` an abelian subgroup `T` with a
//! linear character `psi` occurring in `chi|_T` exactly once is located; the
//! left ideal `kG e_chi e_psi` is then a copy of the irreducible module and
//! its echelon basis gives the matrices.

use crate::chartab::CharacterTable;
use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::linalg::{sv_from_dense, Matrix, Subspace};

/// Matrices `rho(g)` for every group element, indexed by element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }
}

/// Every irreducible representation, in character-table row order.
pub fn irreducible_representations(g: &Group, tab: &CharacterTable) -> Result<Vec<Representation>> {
    (0..tab.chars().len())
        .map(|i| irreducible_representation(g, tab, i))
        .collect()
}

pub fn irreducible_representation(g: &Group, tab: &CharacterTable, i: usize) -> Result<Representation> {
    let n = g.order();
    let d = tab.degree(i);
    let rep = if d == 1 {
        Representation {
            dim: 1,
            matrices: (0..n)
                .map(|x| Matrix::from_fn(1, 1, |_, _| tab.value(i, x).clone()))
                .collect(),
        }
    } else {
        let (t, psi) = find_multiplicity_one(g, tab, i)
            .ok_or_else(|| Error::InternalMismatch(format!("no multiplicity-one abelian constituent for character {i}")))?;
        module_from_idempotent(g, tab, i, &t, &psi)?
    };
    check_representation(g, tab, i, &rep)?;
    Ok(rep)
}

/// `(T, psi)` with `psi` given as values on `T.members()`.
fn find_multiplicity_one(g: &Group, tab: &CharacterTable, i: usize) -> Option<(Subgroup, Vec<Cyclo>)> {
    let n = g.order();
    let mut candidates: Vec<Subgroup> = Vec::new();
    for x in 0..n {
        candidates.push(g.subgroup_generated(&[x]));
    }
    for x in 0..n {
        for y in x + 1..n {
            if g.mul(x, y) == g.mul(y, x) {
                candidates.push(g.subgroup_generated(&[x, y]));
            }
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for t in candidates {
        if !seen.insert(t.clone()) {
            continue;
        }
        let lc = g.linear_characters(&t);
        for exps in &lc.exps {
            let psi: Vec<Cyclo> = exps
                .iter()
                .map(|&e| Cyclo::root_of_unity(lc.order, e as i64))
                .collect();
            let mut acc = Cyclo::zero();
            for (k, &m) in t.members().iter().enumerate() {
                acc = &acc + &(tab.value(i, m) * &psi[k].conj());
            }
            if acc == Cyclo::from_int(t.order() as i64) {
                return Some((t, psi));
            }
        }
    }
    None
}

fn group_algebra_mul(g: &Group, a: &[Cyclo], b: &[Cyclo]) -> Vec<Cyclo> {
    let mut out = vec![Cyclo::zero(); g.order()];
    for (x, ax) in a.iter().enumerate() {
        if ax.is_zero() {
            continue;
        }
        for (y, by) in b.iter().enumerate() {
            if !by.is_zero() {
                let z = g.mul(x, y);
                out[z] = &out[z] + &(ax * by);
            }
        }
    }
    out
}

/// `x . v` for a group element acting on the left of `kG`.
fn translate(g: &Group, x: usize, v: &[Cyclo]) -> Vec<Cyclo> {
    let mut out = vec![Cyclo::zero(); g.order()];
    for (y, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out[g.mul(x, y)] = c.clone();
        }
    }
    out
}

fn module_from_idempotent(
    g: &Group,
    tab: &CharacterTable,
    i: usize,
    t: &Subgroup,
    psi: &[Cyclo],
) -> Result<Representation> {
    let n = g.order();
    let d = tab.degree(i);
    let e_chi: Vec<Cyclo> = (0..n)
        .map(|x| tab.value(i, g.inv(x)) * &Cyclo::from_fraction(d as i64, n as i64))
        .collect();
    let mut e_psi = vec![Cyclo::zero(); n];
    let inv_t = Cyclo::from_fraction(1, t.order() as i64);
    for (k, &m) in t.members().iter().enumerate() {
        e_psi[m] = &psi[k].conj() * &inv_t;
    }
    let w = group_algebra_mul(g, &e_chi, &e_psi);
    let mut span = Subspace::zero(n);
    for x in 0..n {
        span.insert(&sv_from_dense(&translate(g, x, &w)));
        if span.dim() == d {
            break;
        }
    }
    if span.dim() != d {
        return Err(Error::InternalMismatch(format!(
            "module for character {i} has dimension {} not {d}",
            span.dim()
        )));
    }
    let basis = span.dense_rows();
    let mut matrices = Vec::with_capacity(n);
    for x in 0..n {
        let mut m = Matrix::zeros(d, d);
        for (col, b) in basis.iter().enumerate() {
            let img = sv_from_dense(&translate(g, x, b));
            let coords = span
                .coordinates(&img)
                .ok_or_else(|| Error::InternalMismatch("module not closed".into()))?;
            for (row, c) in coords.into_iter().enumerate() {
                m.set(row, col, c);
            }
        }
        matrices.push(m);
    }
    Ok(Representation { dim: d, matrices })
}

fn check_representation(g: &Group, tab: &CharacterTable, i: usize, rep: &Representation) -> Result<()> {
    let gens = g.generators(&(0..g.order()).collect::<Vec<_>>());
    for x in 0..g.order() {
        if rep.matrices[x].trace() != *tab.value(i, x) {
            return Err(Error::InternalMismatch(format!("trace mismatch for character {i} at {x}")));
        }
        for &s in &gens {
            if rep.matrices[x].mul(&rep.matrices[s]) != rep.matrices[g.mul(x, s)] {
                return Err(Error::InternalMismatch(format!("not a homomorphism for character {i}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_group_spec;

    #[test]
    fn catalog_irreps() {
        for s in ["Z1", "Z4", "S3", "D4", "Q8", "A4", "S4", "D5", "D6", "perm:(1 2 3 4 5),(1 2)(3 4)"] {
            let g = parse_group_spec(s).unwrap();
            let tab = CharacterTable::new(&g).unwrap();
            let reps = irreducible_representations(&g, &tab).unwrap();
            for (i, r) in reps.iter().enumerate() {
                assert_eq!(r.dim(), tab.degree(i));
                assert_eq!(*r.matrix(0), Matrix::identity(r.dim()));
            }
        }
    }

    /// SL(2,3) as 2x2 matrices over F_3 with the identity first.
    pub(crate) fn sl23() -> Group {
        let mut mats: Vec<[u8; 4]> = Vec::new();
        for a in 0..81u32 {
            let m = [(a % 3) as u8, (a / 3 % 3) as u8, (a / 9 % 3) as u8, (a / 27) as u8];
            if (m[0] as i32 * m[3] as i32 - m[1] as i32 * m[2] as i32).rem_euclid(3) == 1 {
                mats.push(m);
            }
        }
        mats.sort_by_key(|m| *m != [1, 0, 0, 1]);
        let mul = |x: &[u8; 4], y: &[u8; 4]| {
            [
                (x[0] * y[0] + x[1] * y[2]) % 3,
                (x[0] * y[1] + x[1] * y[3]) % 3,
                (x[2] * y[0] + x[3] * y[2]) % 3,
                (x[2] * y[1] + x[3] * y[3]) % 3,
            ]
        };
        let rows: Vec<Vec<usize>> = mats
            .iter()
            .map(|x| mats.iter().map(|y| mats.iter().position(|z| *z == mul(x, y)).unwrap()).collect())
            .collect();
        Group::from_table(&rows, Some("SL(2,3)".into())).unwrap()
    }

    #[test]
    fn non_monomial_group() {
        let g = sl23();
        assert_eq!(g.order(), 24);
        let tab = CharacterTable::new(&g).unwrap();
        let mut degs = tab.degrees();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 2, 2, 2, 3]);
        assert!(irreducible_representations(&g, &tab).is_ok());
    }
}
