//! Finite groups given by Cayley tables.
//!
//! Elements are dense indices `0..n` with `0` the identity. Products are
//! looked up in a row-major table; nothing is symbolic.

mod catalog;
mod parse;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use catalog::{cyclic, dihedral, direct_product_cyclic, quaternion8, symmetric, alternating};
pub use parse::{parse_group_spec, MAX_GROUP_ORDER};

/// Default bound on `|G|` for subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 24;

/// A finite group by Cayley table.
#[derive(Clone)]
pub struct Group {
    name: Option<String>,
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
}

/// Groups are equal when their tables are; the name is only a label.
impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name(), self.n)
    }
}

/// A subgroup as a sorted list of element indices of its parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// Position of `g` in `members`, if present.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&g| other.contains(g))
                .collect(),
        }
    }
}

/// A conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Homomorphisms from a subgroup into the roots of unity of a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCharacters {
    /// Values are powers of `zeta_order`.
    pub order: u32,
    /// `exps[c][k]` is the exponent of character `c` at `members[k]`.
    pub exps: Vec<Vec<u32>>,
}

impl Group {
    /// Validates a Cayley table and builds the group.
    pub fn from_table(rows: &[Vec<usize>], name: Option<String>) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::BoundExceeded {
                what: "group order",
                value: n,
                limit: MAX_GROUP_ORDER,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {} not {n}", row.len())));
            }
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n {
                    return Err(Error::NotAGroup(format!("entry {v} out of range in row {i}")));
                }
                if seen[v] {
                    return Err(Error::NotAGroup(format!("row {i} repeats {v}")));
                }
                seen[v] = true;
                table.push(v as u32);
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                let v = table[i * n + j] as usize;
                if seen[v] {
                    return Err(Error::NotAGroup(format!("column {j} repeats {v}")));
                }
                seen[v] = true;
            }
        }
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(Error::NotAGroup("element 0 is not the identity".into()));
            }
        }
        let g = Group::from_latin_table(table, n, name);
        g.check_associative()?;
        Ok(g)
    }

    /// Internal constructor for tables known to come from a group.
    pub(crate) fn from_latin_table(table: Vec<u32>, n: usize, name: Option<String>) -> Group {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        Group {
            name,
            n,
            table,
            inv,
        }
    }

    /// Light's test: associativity needs checking only against a generating set.
    fn check_associative(&self) -> Result<()> {
        let gens = self.generators(&(0..self.n).collect::<Vec<_>>());
        for &g in &gens {
            for x in 0..self.n {
                let xg = self.mul(x, g);
                for y in 0..self.n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(Error::NotAGroup(format!(
                            "not associative: ({x}*{g})*{y} != {x}*({g}*{y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("G")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = Some(name.into());
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.exponent_of(&(0..self.n).collect::<Vec<_>>())
    }

    /// Least common multiple of element orders over `elems`.
    pub fn exponent_of(&self, elems: &[usize]) -> usize {
        elems.iter().fold(1, |acc, &g| {
            let o = self.element_order(g);
            acc / num_integer::gcd(acc, o) * o
        })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes: identity first, then ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        for a in 0..self.n {
            if assigned[a] {
                continue;
            }
            let set: BTreeSet<usize> = (0..self.n).map(|g| self.conj(g, a)).collect();
            for &x in &set {
                assigned[x] = true;
            }
            out.push(ConjClass {
                representative: a,
                members: set.into_iter().collect(),
            });
        }
        out
    }

    /// Class index of every element for the canonical class order.
    pub fn class_map(&self, classes: &[ConjClass]) -> Vec<usize> {
        let mut map = vec![0; self.n];
        for (k, c) in classes.iter().enumerate() {
            for &x in &c.members {
                map[x] = k;
            }
        }
        map
    }

    pub fn centralizer(&self, a: usize) -> Subgroup {
        Subgroup {
            members: (0..self.n)
                .filter(|&g| self.mul(g, a) == self.mul(a, g))
                .collect(),
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.n).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: vec![0] }
    }

    /// Closure of a set of elements under multiplication.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut members = vec![0];
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members }
    }

    /// Validates that a sorted element set is a subgroup.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Result<Subgroup> {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if m.first() != Some(&0) || m.iter().any(|&x| x >= self.n) {
            return Err(Error::PreconditionViolated("not a subgroup: missing identity or out of range".into()));
        }
        let s = Subgroup { members: m };
        for &a in &s.members {
            for &b in &s.members {
                if !s.contains(self.mul(a, b)) {
                    return Err(Error::PreconditionViolated(format!("not closed: {a}*{b}")));
                }
            }
        }
        Ok(s)
    }

    /// A greedy generating set of the subgroup spanned by `elems`.
    pub fn generators(&self, elems: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.trivial_subgroup();
        for &x in elems {
            if !cur.contains(x) {
                gens.push(x);
                cur = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        s.members
            .iter()
            .all(|&x| (0..self.n).all(|g| s.contains(self.conj(g, x))))
    }

    /// `{mh}`; a subgroup when one factor is normal.
    pub fn product(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let set: BTreeSet<usize> = a
            .members
            .iter()
            .flat_map(|&x| b.members.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.mul(x, y))
            .collect();
        Subgroup {
            members: set.into_iter().collect(),
        }
    }

    /// Every normal subgroup, sorted by order then members.
    ///
    /// Normal subgroups are exactly the normal closures reachable from `{e}`
    /// by repeatedly adjoining a conjugacy class.
    pub fn normal_subgroups(&self, bound: usize) -> Result<Vec<Subgroup>> {
        if self.n > bound {
            return Err(Error::BoundExceeded {
                what: "group order for subgroup enumeration",
                value: self.n,
                limit: bound,
            });
        }
        let classes = self.conjugacy_classes();
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        let start = self.trivial_subgroup();
        let mut queue = VecDeque::from([start.clone()]);
        found.insert(start);
        while let Some(s) = queue.pop_front() {
            for c in &classes {
                if s.contains(c.representative) {
                    continue;
                }
                let mut gens = s.members.clone();
                gens.extend(&c.members);
                let t = self.subgroup_generated(&gens);
                if found.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        Ok(out)
    }

    pub fn commute_elementwise(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.members
            .iter()
            .all(|&x| b.members.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// The subgroup as a group in its own right; element `k` is `members[k]`.
    pub fn subgroup_as_group(&self, s: &Subgroup) -> Group {
        let m = s.order();
        let mut table = Vec::with_capacity(m * m);
        for &a in &s.members {
            for &b in &s.members {
                table.push(s.position(self.mul(a, b)).expect("closed subgroup") as u32);
            }
        }
        Group::from_latin_table(table, m, Some(format!("sub({})", self.name())))
    }

    /// Smallest element of each right coset `M s`, in increasing order.
    pub fn right_coset_reps(&self, m: &Subgroup) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut reps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            reps.push(s);
            for &x in &m.members {
                seen[self.mul(x, s)] = true;
            }
        }
        reps
    }

    /// Smallest element of each left coset `g C`, in increasing order.
    pub fn left_coset_reps(&self, c: &Subgroup) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n {
            if seen[g] {
                continue;
            }
            reps.push(g);
            for &x in &c.members {
                seen[self.mul(g, x)] = true;
            }
        }
        reps
    }

    /// All homomorphisms `s -> <zeta_e>`, `e` the exponent of `s`.
    ///
    /// Candidates assign generator images compatible with element orders;
    /// a breadth-first walk over words in the generators rejects those that
    /// are not well defined. Sorted lexicographically by exponent vector,
    /// so the trivial character comes first.
    pub fn linear_characters(&self, s: &Subgroup) -> LinearCharacters {
        let e = self.exponent_of(&s.members) as u32;
        let gens = self.generators(&s.members);
        let steps: Vec<u32> = gens
            .iter()
            .map(|&g| e / self.element_order(g) as u32)
            .collect();
        let counts: Vec<u32> = gens.iter().map(|&g| self.element_order(g) as u32).collect();
        let mut out = Vec::new();
        let mut idx = vec![0u32; gens.len()];
        loop {
            let images: Vec<u32> = idx.iter().zip(&steps).map(|(i, st)| i * st).collect();
            if let Some(vals) = self.extend_hom(s, &gens, &images, e) {
                out.push(vals);
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    out.sort();
                    return LinearCharacters { order: e, exps: out };
                }
                idx[k] += 1;
                if idx[k] < counts[k] {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    fn extend_hom(&self, s: &Subgroup, gens: &[usize], images: &[u32], e: u32) -> Option<Vec<u32>> {
        let mut val: Vec<Option<u32>> = vec![None; s.order()];
        val[0] = Some(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let vx = val[s.position(x).unwrap()].unwrap();
            for (g, img) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let vy = (vx + img) % e;
                let py = s.position(y).unwrap();
                match val[py] {
                    None => {
                        val[py] = Some(vy);
                        queue.push_back(y);
                    }
                    Some(v) if v != vy => return None,
                    Some(_) => {}
                }
            }
        }
        Some(val.into_iter().map(|v| v.unwrap()).collect())
    }

    /// `{"n": n, "table": [[...]]}`.
    pub fn to_cayley_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "table": self.table_rows() })
    }

    pub fn from_cayley_json(text: &str, name: Option<String>) -> Result<Group> {
        parse::cayley_from_str(text, name)
    }

    /// Stable byte encoding of the table, for cache keys.
    pub fn table_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + self.table.len() * 4);
        out.extend_from_slice(&(self.n as u32).to_le_bytes());
        for v in &self.table {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: every class-union that is closed under products.
    fn normal_subgroups_oracle(g: &Group) -> Vec<Subgroup> {
        let classes = g.conjugacy_classes();
        let k = classes.len();
        let mut out = Vec::new();
        for mask in 0u64..(1 << (k - 1)) {
            let mut members: Vec<usize> = classes[0].members.clone();
            for (i, c) in classes.iter().enumerate().skip(1) {
                if mask >> (i - 1) & 1 == 1 {
                    members.extend(&c.members);
                }
            }
            members.sort_unstable();
            let s = Subgroup { members };
            if s.members
                .iter()
                .all(|&a| s.members.iter().all(|&b| s.contains(g.mul(a, b))))
            {
                out.push(s);
            }
        }
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        out
    }

    fn catalog() -> Vec<Group> {
        [
            "Z1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "Z2xZ4", "S2", "S3", "S4", "A3", "A4", "D3", "D4",
            "D5", "D6", "Q8",
        ]
        .iter()
        .map(|s| parse_group_spec(s).unwrap())
        .collect()
    }

    #[test]
    fn class_sizes() {
        let s3 = parse_group_spec("S3").unwrap();
        let sizes: Vec<usize> = s3.conjugacy_classes().iter().map(ConjClass::size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let z1 = parse_group_spec("Z1").unwrap();
        assert_eq!(z1.conjugacy_classes().len(), 1);
        let z4 = parse_group_spec("Z4").unwrap();
        assert!(z4.conjugacy_classes().iter().all(|c| c.size() == 1));
        assert_eq!(z4.conjugacy_classes().len(), 4);
    }

    #[test]
    fn centralizers() {
        let s3 = parse_group_spec("S3").unwrap();
        // Element 1 is the transposition swapping the last two points.
        assert_eq!(s3.element_order(1), 2);
        let c = s3.centralizer(1);
        let scan: Vec<usize> = (0..6).filter(|&g| s3.mul(g, 1) == s3.mul(1, g)).collect();
        assert_eq!(c.members(), scan.as_slice());
        assert_eq!(c.order(), 2);
        assert_eq!(s3.centralizer(0), s3.whole());
        let z6 = parse_group_spec("Z6").unwrap();
        assert!((0..6).all(|a| z6.centralizer(a) == z6.whole()));
    }

    #[test]
    fn orbit_stabilizer_and_normal_subgroups_match_oracle() {
        for g in catalog() {
            let classes = g.conjugacy_classes();
            assert_eq!(classes.iter().map(ConjClass::size).sum::<usize>(), g.order());
            for c in &classes {
                for &a in &c.members {
                    assert_eq!(c.size() * g.centralizer(a).order(), g.order());
                }
            }
            let ns = g.normal_subgroups(DEFAULT_SUBGROUP_BOUND).unwrap();
            assert_eq!(ns, normal_subgroups_oracle(&g), "{}", g.name());
            for a in &ns {
                assert!(g.is_normal(a));
                for b in &ns {
                    assert!(ns.contains(&a.intersect(b)));
                    assert!(ns.contains(&g.product(a, b)));
                }
            }
        }
    }

    #[test]
    fn normal_subgroup_counts() {
        let count = |s: &str| parse_group_spec(s).unwrap().normal_subgroups(24).unwrap().len();
        assert_eq!(count("S3"), 3);
        assert_eq!(count("Z5"), 2);
        assert_eq!(count("Q8"), 6);
        let s3 = parse_group_spec("S3").unwrap();
        let ns = s3.normal_subgroups(24).unwrap();
        assert_eq!(ns[1].order(), 3);
        let big = parse_group_spec("Z5xZ5").unwrap();
        assert!(matches!(big.normal_subgroups(24), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn commuting_subgroups() {
        let s3 = parse_group_spec("S3").unwrap();
        let ns = s3.normal_subgroups(24).unwrap();
        let (e, a3, all) = (&ns[0], &ns[1], &ns[2]);
        assert!(s3.commute_elementwise(a3, a3));
        assert!(!s3.commute_elementwise(all, all));
        assert!(s3.commute_elementwise(e, all));
    }

    #[test]
    fn linear_characters_are_homomorphisms() {
        for g in catalog() {
            for s in g.normal_subgroups(24).unwrap() {
                let lc = g.linear_characters(&s);
                let m = s.members();
                for ch in &lc.exps {
                    for (i, &a) in m.iter().enumerate() {
                        for (j, &b) in m.iter().enumerate() {
                            let k = s.position(g.mul(a, b)).unwrap();
                            assert_eq!((ch[i] + ch[j]) % lc.order, ch[k]);
                        }
                    }
                }
                // Count equals the index of the derived subgroup.
                let comm: Vec<usize> = m
                    .iter()
                    .flat_map(|&a| m.iter().map(move |&b| (a, b)))
                    .map(|(a, b)| g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))))
                    .collect();
                let derived = g.subgroup_generated(&comm);
                assert_eq!(lc.exps.len(), s.order() / derived.order());
                assert!(lc.exps[0].iter().all(|&v| v == 0));
            }
        }
    }

    #[test]
    fn cayley_round_trip() {
        for g in catalog() {
            let text = g.to_cayley_json().to_string();
            let h = Group::from_cayley_json(&text, None).unwrap();
            assert_eq!(g, h);
            assert_eq!(h.to_cayley_json().to_string(), text);
        }
    }
}
