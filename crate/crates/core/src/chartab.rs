//! Exact character tables by Dixon's method.
//!
//! Class-multiplication matrices are diagonalized simultaneously over a prime
//! field `F_p` with `p = 1 mod exp(G)`; every character value is then lifted
//! to an exact sum of roots of unity from its eigenvalue multiplicities,
//! read off through power maps. Orthogonality is verified exactly before a
//! table is returned.

use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::group::{ConjClass, Group, MAX_GROUP_ORDER};

/// Exact table: rows are irreducible characters, columns conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    group_order: usize,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    chars: Vec<Vec<Cyclo>>,
}

impl CharacterTable {
    /// Computes the table of `g`, refusing groups larger than `bound`.
    pub fn compute(g: &Group, bound: usize) -> Result<CharacterTable> {
        if g.order() > bound {
            return Err(Error::BoundExceeded {
                what: "group order for character table",
                value: g.order(),
                limit: bound,
            });
        }
        let classes = g.conjugacy_classes();
        let class_of = g.class_map(&classes);
        let inverse_class: Vec<usize> = classes
            .iter()
            .map(|c| class_of[g.inv(c.representative)])
            .collect();
        let chars = dixon(g, &classes, &class_of, &inverse_class)?;
        let tab = CharacterTable {
            group_order: g.order(),
            classes,
            class_of,
            inverse_class,
            chars,
        };
        tab.check_orthogonality()?;
        Ok(tab)
    }

    pub fn new(g: &Group) -> Result<CharacterTable> {
        Self::compute(g, MAX_GROUP_ORDER)
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn chars(&self) -> &[Vec<Cyclo>] {
        &self.chars
    }

    pub fn degree(&self, i: usize) -> usize {
        self.chars[i][0].as_integer().expect("integral degree") as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.chars.len()).map(|i| self.degree(i)).collect()
    }

    /// `chi_i(g)`.
    pub fn value(&self, i: usize, g: usize) -> &Cyclo {
        &self.chars[i][self.class_of[g]]
    }

    /// Index of the dual character `g -> chi_i(g^-1)`.
    pub fn dual(&self, i: usize) -> usize {
        let target: Vec<Cyclo> = self.inverse_class.iter().map(|&c| self.chars[i][c].clone()).collect();
        self.chars
            .iter()
            .position(|row| *row == target)
            .expect("dual of an irreducible character is irreducible")
    }

    /// `(1/|G|) sum_g a(g) conj(b(g))` for class functions given on classes.
    pub fn inner_product(&self, a: &[Cyclo], b: &[Cyclo]) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (k, c) in self.classes.iter().enumerate() {
            acc = &acc + &(&(&a[k] * &b[k].conj()) * &Cyclo::from_int(c.size() as i64));
        }
        &acc * &Cyclo::from_fraction(1, self.group_order as i64)
    }

    fn check_orthogonality(&self) -> Result<()> {
        let r = self.chars.len();
        if r != self.classes.len() {
            return Err(Error::InconsistentCharacters(format!(
                "{r} characters for {} classes",
                self.classes.len()
            )));
        }
        for i in 0..r {
            for j in 0..r {
                let ip = self.inner_product(&self.chars[i], &self.chars[j]);
                let want = Cyclo::from_int((i == j) as i64);
                if ip != want {
                    return Err(Error::InconsistentCharacters(format!(
                        "<chi_{i}, chi_{j}> = {ip}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `{"classes": [sizes], "chars": [[cyclo]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "classes": self.classes.iter().map(ConjClass::size).collect::<Vec<_>>(),
            "representatives": self.classes.iter().map(|c| c.representative).collect::<Vec<_>>(),
            "chars": self.chars.iter().map(|r| r.iter().map(Cyclo::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p = 1 mod e` with `p > 2 sqrt(n)`.
fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut p = e + 1;
    while !(is_prime(p) && p * p > 4 * n) {
        p += e;
    }
    p
}

fn primitive_root(p: u64) -> u64 {
    let qs = prime_divisors(p - 1);
    (2..p)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Reduced row echelon basis of the span of `vecs` over `F_p`.
fn rref_mod(mut vecs: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let cols = vecs.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..vecs.len()).find(|&r| vecs[r][c] != 0) else {
            continue;
        };
        vecs.swap(rank, piv);
        let inv = inv_mod(vecs[rank][c], p);
        for x in vecs[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..vecs.len() {
            if r != rank && vecs[r][c] != 0 {
                let f = vecs[r][c];
                for k in 0..cols {
                    vecs[r][k] = (vecs[r][k] + p - f * vecs[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    vecs.truncate(rank);
    vecs
}

/// Nullspace of a square matrix over `F_p` (rows of `a` are equations).
fn nullspace_mod(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let ech = rref_mod(a.to_vec(), p);
    let pivots: Vec<usize> = ech
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).unwrap())
        .collect();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in ech.iter().zip(&pivots) {
                v[pc] = (p - r[f]) % p;
            }
            v
        })
        .collect()
}

fn dixon(
    g: &Group,
    classes: &[ConjClass],
    class_of: &[usize],
    inverse_class: &[usize],
) -> Result<Vec<Vec<Cyclo>>> {
    let n = g.order() as u64;
    let k = classes.len();
    let e = g.exponent() as u64;
    let p = dixon_prime(e, n);
    let z = pow_mod(primitive_root(p), (p - 1) / e, p);

    // coef[r][s][t] = #{x in C_r : x^-1 g_t in C_s}.
    let mut coef = vec![vec![vec![0u64; k]; k]; k];
    for (r, cr) in classes.iter().enumerate() {
        for (t, ct) in classes.iter().enumerate() {
            for &x in &cr.members {
                let s = class_of[g.mul(g.inv(x), ct.representative)];
                coef[r][s][t] += 1;
            }
        }
    }

    // Split F_p^k into common eigenspaces of all M_r, (M_r)_{s,t} = coef[r][s][t].
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| (0..k).map(|j| (i == j) as u64).collect())
        .collect()];
    for r in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            let pivots: Vec<usize> = basis
                .iter()
                .map(|b| b.iter().position(|&x| x != 0).unwrap())
                .collect();
            // Restricted operator: column j holds coordinates of M_r b_j.
            let mut a = vec![vec![0u64; d]; d];
            for (j, b) in basis.iter().enumerate() {
                let img: Vec<u64> = (0..k)
                    .map(|s| (0..k).map(|t| coef[r][s][t] % p * b[t] % p).sum::<u64>() % p)
                    .collect();
                for (i, &pc) in pivots.iter().enumerate() {
                    a[i][j] = img[pc];
                }
            }
            let mut total = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|i| (0..d).map(|j| (a[i][j] + if i == j { p - lambda } else { 0 }) % p).collect())
                    .collect();
                let ker = nullspace_mod(&shifted, p);
                if ker.is_empty() {
                    continue;
                }
                total += ker.len();
                let vecs: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|y| {
                        (0..k)
                            .map(|t| (0..d).map(|j| y[j] * basis[j][t] % p).sum::<u64>() % p)
                            .collect()
                    })
                    .collect();
                next.push(rref_mod(vecs, p));
            }
            if total != d {
                return Err(Error::InternalMismatch(format!(
                    "class matrix {r} not diagonalizable mod {p}"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::InternalMismatch("eigenspaces did not split to lines".into()));
    }

    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let mut chars = Vec::with_capacity(k);
    for basis in &spaces {
        let v = &basis[0];
        let scale = inv_mod(v[0], p);
        let w: Vec<u64> = v.iter().map(|x| x * scale % p).collect();
        let mut sum = 0;
        for t in 0..k {
            sum = (sum + w[t] * w[inverse_class[t]] % p * inv_mod(sizes[t] % p, p)) % p;
        }
        let d2 = n % p * inv_mod(sum, p) % p;
        let d = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::InternalMismatch("no integral degree".into()))?;
        let modp: Vec<u64> = (0..k)
            .map(|t| d * w[t] % p * inv_mod(sizes[t] % p, p) % p)
            .collect();
        let mut row = Vec::with_capacity(k);
        for c in classes {
            let x = c.representative;
            let o = g.element_order(x) as u64;
            let zo = pow_mod(z, e / o, p);
            let inv_o = inv_mod(o % p, p);
            let mut terms = Vec::new();
            let mut total = 0;
            for kk in 0..o {
                let mut m = 0;
                let mut xl = 0;
                for l in 0..o {
                    let root = pow_mod(zo, (o - (kk * l) % o) % o, p);
                    m = (m + modp[class_of[xl]] * root) % p;
                    xl = g.mul(xl, x);
                }
                let m = m * inv_o % p;
                if m > d {
                    return Err(Error::InternalMismatch(format!(
                        "eigenvalue multiplicity {m} exceeds degree {d}"
                    )));
                }
                total += m;
                if m > 0 {
                    terms.push((kk, crate::rational::Rational::from_int(m as i64)));
                }
            }
            if total != d {
                return Err(Error::InternalMismatch("multiplicities do not sum to the degree".into()));
            }
            row.push(Cyclo::from_terms(o as u32, &terms));
        }
        chars.push(row);
    }
    chars.sort_by(|a, b| {
        let triv_a = a.iter().all(Cyclo::is_one);
        let triv_b = b.iter().all(Cyclo::is_one);
        triv_b
            .cmp(&triv_a)
            .then_with(|| a[0].cmp(&b[0]))
            .then_with(|| a.cmp(b))
    });
    Ok(chars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_group_spec;

    fn table(s: &str) -> CharacterTable {
        CharacterTable::new(&parse_group_spec(s).unwrap()).unwrap()
    }

    fn ints(row: &[Cyclo]) -> Vec<i64> {
        row.iter().map(|c| c.as_integer().unwrap()).collect()
    }

    /// Independent oracle for S3: Burnside class-sum eigenvectors over Q,
    /// solved by hand from the class multiplication table
    /// K_t^2 = 3 + 3 K_c, K_t K_c = 2 K_t, K_c^2 = 2 + K_c.
    #[test]
    fn s3_matches_burnside_oracle() {
        let t = table("S3");
        assert_eq!(t.chars().len(), 3);
        assert_eq!(ints(&t.chars()[0]), vec![1, 1, 1]);
        assert_eq!(ints(&t.chars()[1]), vec![1, -1, 1]);
        assert_eq!(ints(&t.chars()[2]), vec![2, 0, -1]);
        // Class 2 holds the 3-cycles.
        let three_cycle = t.classes()[2].representative;
        assert_eq!(*t.value(2, three_cycle), Cyclo::from_int(-1));
        assert!((0..6).all(|g| t.value(0, g).is_one()));
    }

    #[test]
    fn small_tables() {
        let z2 = table("Z2");
        assert_eq!(ints(&z2.chars()[0]), vec![1, 1]);
        assert_eq!(ints(&z2.chars()[1]), vec![1, -1]);
        let mut q8 = table("Q8").degrees();
        q8.sort();
        assert_eq!(q8, vec![1, 1, 1, 1, 2]);
        let z4 = table("Z4");
        let faithful: Vec<&Vec<Cyclo>> = z4
            .chars()
            .iter()
            .filter(|r| r[1] == Cyclo::root_of_unity(4, 1))
            .collect();
        assert_eq!(faithful.len(), 1);
        // Characters of Z4 are the powers of the faithful one.
        for (k, row) in z4.chars().iter().enumerate() {
            assert!(z4.chars().contains(&(0..4).map(|g| row[1].pow(g).unwrap()).collect()), "{k}");
        }
        assert_eq!(table("Z1").chars(), &[vec![Cyclo::one()]]);
    }

    #[test]
    fn invariants_over_catalog() {
        for s in [
            "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "Z3xZ3", "Z2xZ4", "S3", "S4", "A4", "D4",
            "D5", "D6", "Q8", "perm:(1 2 3 4 5),(1 2)(3 4)",
        ] {
            let g = parse_group_spec(s).unwrap();
            let t = CharacterTable::new(&g).unwrap();
            let n = g.order();
            assert_eq!(t.degrees().iter().map(|d| d * d).sum::<usize>(), n, "{s}");
            assert!(t.degrees().iter().all(|d| n % d == 0));
            let e = g.exponent() as u32;
            for row in t.chars() {
                for v in row {
                    assert_eq!(e % v.order(), 0, "{s}: value {v} outside Q(zeta_exp)");
                }
            }
            // Column orthogonality.
            for a in 0..t.num_classes() {
                for b in 0..t.num_classes() {
                    let mut acc = Cyclo::zero();
                    for row in t.chars() {
                        acc = &acc + &(&row[a] * &row[b].conj());
                    }
                    let want = if a == b {
                        g.centralizer(t.classes()[a].representative).order() as i64
                    } else {
                        0
                    };
                    assert_eq!(acc, Cyclo::from_int(want), "{s}");
                }
            }
            for i in 0..t.chars().len() {
                assert_eq!(t.dual(t.dual(i)), i);
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let g = parse_group_spec("S4").unwrap();
        assert!(matches!(CharacterTable::compute(&g, 12), Err(Error::BoundExceeded { .. })));
    }
}
