//! Named groups with fixed element orderings.
//!
//! * `Z(n)`: element `k` is `k mod n`.
//! * `Z(a) x Z(b)`: `(x, y)` is `x*b + y`.
//! * `S(n)`, `A(n)`: permutations of `0..n` in lexicographic order of
//!   one-line notation; `(s t)(i) = s(t(i))`.
//! * `D(n)` of order `2n`: `r^k s^f` is `k + n*f`, with `s r s = r^-1`.
//! * `Q8`: `1, -1, i, -i, j, -j, k, -k`.

use super::Group;

pub fn cyclic(n: usize) -> Group {
    let mut t = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            t.push(((a + b) % n) as u32);
        }
    }
    Group::from_latin_table(t, n, Some(format!("Z{n}")))
}

pub fn direct_product_cyclic(a: usize, b: usize) -> Group {
    let n = a * b;
    let mut t = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            let (x1, y1) = (u / b, u % b);
            let (x2, y2) = (v / b, v % b);
            t.push((((x1 + x2) % a) * b + (y1 + y2) % b) as u32);
        }
    }
    Group::from_latin_table(t, n, Some(format!("Z{a}xZ{b}")))
}

/// Group of permutations (one-line images) sorted lexicographically, identity first.
pub(crate) fn from_permutations(mut perms: Vec<Vec<usize>>, name: String) -> Group {
    perms.sort();
    perms.dedup();
    let n = perms.len();
    let mut t = Vec::with_capacity(n * n);
    for s in &perms {
        for u in &perms {
            let prod: Vec<usize> = u.iter().map(|&i| s[i]).collect();
            let k = perms.binary_search(&prod).expect("closed permutation set");
            t.push(k as u32);
        }
    }
    Group::from_latin_table(t, n, Some(name))
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

pub fn symmetric(n: usize) -> Group {
    from_permutations(all_permutations(n), format!("S{n}"))
}

pub fn alternating(n: usize) -> Group {
    let perms = all_permutations(n).into_iter().filter(|p| is_even(p)).collect();
    from_permutations(perms, format!("A{n}"))
}

pub fn dihedral(n: usize) -> Group {
    let m = 2 * n;
    let mut t = Vec::with_capacity(m * m);
    for u in 0..m {
        for v in 0..m {
            let (a, f) = (u % n, u / n);
            let (b, g) = (v % n, v / n);
            let rot = if f == 0 { (a + b) % n } else { (a + n - b) % n };
            t.push((rot + n * ((f + g) % 2)) as u32);
        }
    }
    Group::from_latin_table(t, m, Some(format!("D{n}")))
}

pub fn quaternion8() -> Group {
    // Unit k in {1,i,j,k} with sign: index 2*k + (sign negative).
    // Products of units: table[u][v] = (sign, unit).
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mut t = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (ua, sa) = (a / 2, a % 2 == 1);
            let (ub, sb) = (b / 2, b % 2 == 1);
            let (s, u) = UNIT[ua][ub];
            let neg = s ^ sa ^ sb;
            t.push((2 * u + neg as usize) as u32);
        }
    }
    Group::from_latin_table(t, 8, Some("Q8".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_axioms() {
        for (g, n) in [
            (cyclic(1), 1),
            (cyclic(5), 5),
            (direct_product_cyclic(2, 2), 4),
            (symmetric(2), 2),
            (symmetric(3), 6),
            (symmetric(4), 24),
            (alternating(3), 3),
            (alternating(4), 12),
            (dihedral(3), 6),
            (dihedral(4), 8),
            (dihedral(6), 12),
            (quaternion8(), 8),
        ] {
            assert_eq!(g.order(), n);
            let checked = Group::from_table(&g.table_rows(), None).expect("valid table");
            assert_eq!(checked, g);
        }
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion8();
        let (m1, i, j, k) = (1, 2, 4, 6);
        assert_eq!(q.mul(i, i), m1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), k + 1);
        assert_eq!(q.mul(j, k), i);
        assert_eq!(q.element_order(i), 4);
        assert!(!q.is_abelian());
    }

    #[test]
    fn dihedral_relation() {
        let d = dihedral(4);
        let (r, s) = (1, 4);
        assert_eq!(d.mul(d.mul(s, r), s), d.inv(r));
        assert_eq!(d.element_order(r), 4);
    }
}
