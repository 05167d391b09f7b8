//! The lattice of fusion subcategories and its coideal counterpart.

use std::collections::{BTreeSet, HashMap};

use serde_json::json;

use crate::coideal::{all_coideals, enumerate_triples, CoidealSubalgebra};
use crate::error::{Error, Result};
use crate::hopf::Kind;

use super::{Category, FusionSubcategory};

/// All closed subsets, found by adding one simple at a time to closed sets
/// and closing again, starting from `{unit}`.
pub fn brute_force_subcats(cat: &Category) -> BTreeSet<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![cat.closure(&[])];
    found.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for i in 0..cat.len() {
            if s.binary_search(&i).is_ok() {
                continue;
            }
            let mut seed = s.clone();
            seed.push(i);
            let c = cat.closure(&seed);
            if found.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    found
}

/// Fusion subcategories with the coideal `L` realizing each as `Rep(A//L)`.
pub struct Lattice {
    /// Sorted by `(fpdim, simples)`.
    pub subcats: Vec<FusionSubcategory>,
    /// `coideals[i]` has `Rep(A//L) = subcats[i]`.
    pub coideals: Vec<CoidealSubalgebra>,
}

impl Lattice {
    /// Enumerates subcategories from triples (doubles) or normal subgroups
    /// (group algebras), checks the result against [`brute_force_subcats`],
    /// and pairs every member with its coideal.
    pub fn build(cat: &Category, subgroup_bound: usize) -> Result<Lattice> {
        let a = &cat.algebra;
        let mut by_simples: HashMap<Vec<usize>, FusionSubcategory> = HashMap::new();
        if a.kind() == Kind::Double {
            for t in enumerate_triples(a.group(), subgroup_bound)? {
                let s = cat.subcat_from_triple(&t)?;
                by_simples.entry(s.simples.clone()).or_insert(s);
            }
        }
        let mut coideal_of: HashMap<Vec<usize>, CoidealSubalgebra> = HashMap::new();
        for l in all_coideals(a, subgroup_bound)? {
            let d = cat.quotient_irreps(&l)?;
            if coideal_of.contains_key(&d.simples) {
                return Err(Error::InternalMismatch(format!(
                    "two coideals give the subcategory {:?}",
                    d.simples
                )));
            }
            by_simples.entry(d.simples.clone()).or_insert(d.clone());
            coideal_of.insert(d.simples, l);
        }
        let brute = brute_force_subcats(cat);
        let listed: BTreeSet<Vec<usize>> = by_simples.keys().cloned().collect();
        if listed != brute {
            return Err(Error::OracleMismatch(format!(
                "parameterized enumeration has {} members, brute force {}",
                listed.len(),
                brute.len()
            )));
        }
        let coideal_sets: BTreeSet<Vec<usize>> = coideal_of.keys().cloned().collect();
        if coideal_sets != brute {
            return Err(Error::OracleMismatch(format!(
                "coideals realize {} subcategories, brute force finds {}",
                coideal_sets.len(),
                brute.len()
            )));
        }
        let mut subcats: Vec<FusionSubcategory> = by_simples.into_values().collect();
        subcats.sort_by(|x, y| (x.fpdim, &x.simples).cmp(&(y.fpdim, &y.simples)));
        let coideals = subcats
            .iter()
            .map(|s| coideal_of.remove(&s.simples).expect("checked above"))
            .collect();
        Ok(Lattice { subcats, coideals })
    }

    pub fn len(&self) -> usize {
        self.subcats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subcats.is_empty()
    }

    pub fn index_of(&self, simples: &[usize]) -> Option<usize> {
        self.subcats.iter().position(|s| s.simples == simples)
    }

    pub fn meet(&self, i: usize, j: usize) -> Vec<usize> {
        let b: BTreeSet<usize> = self.subcats[j].simples.iter().copied().collect();
        self.subcats[i]
            .simples
            .iter()
            .copied()
            .filter(|x| b.contains(x))
            .collect()
    }

    pub fn join(&self, cat: &Category, i: usize, j: usize) -> Vec<usize> {
        let mut seed = self.subcats[i].simples.clone();
        seed.extend(&self.subcats[j].simples);
        cat.closure(&seed)
    }

    fn contains(&self, i: usize, j: usize) -> bool {
        let a: BTreeSet<usize> = self.subcats[i].simples.iter().copied().collect();
        self.subcats[j].simples.iter().all(|x| a.contains(x))
    }

    /// `(lower, upper)` index pairs of covering relations.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for lo in 0..n {
            for hi in 0..n {
                if lo == hi || !self.contains(hi, lo) {
                    continue;
                }
                let between = (0..n).any(|m| m != lo && m != hi && self.contains(m, lo) && self.contains(hi, m));
                if !between {
                    out.push((lo, hi));
                }
            }
        }
        out
    }

    /// Hasse diagram plus the centralizer involution `centralizer[i]`.
    pub fn to_dot(&self, name: &str, centralizer: &[usize]) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, d) in self.subcats.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", d.label()));
        }
        for (lo, hi) in self.covers() {
            s.push_str(&format!("  n{lo} -> n{hi};\n"));
        }
        for (i, &j) in centralizer.iter().enumerate() {
            if i <= j {
                s.push_str(&format!("  n{i} -> n{j} [color=red, dir=both, constraint=false];\n"));
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "subcategories": self.subcats.iter().zip(&self.coideals).map(|(s, l)| {
                let mut v = s.to_json();
                v["coideal_dim"] = json!(l.dim());
                v
            }).collect::<Vec<_>>(),
            "covers": self.covers(),
        })
    }
}
