//! The two constructible instance families.

use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::group::Group;

use super::{Kind, QTAlgebra, Structure};

pub const DEFAULT_MAX_ALGEBRA_DIM: usize = 400;

fn check_bound(dim: usize, max_dim: usize) -> Result<()> {
    if dim > max_dim {
        return Err(Error::BoundExceeded {
            what: "algebra dimension",
            value: dim,
            limit: max_dim,
        });
    }
    Ok(())
}

/// `D(kG)` with basis `p_g # h` at index `g*|G| + h`.
///
/// The function algebra carries the opposite coproduct,
/// `Delta(p_g # h) = sum_{ab=g} (p_b # h) (x) (p_a # h)`, which is the one
/// compatible with `R = sum_g (eps # g) (x) (p_g # 1)`.
pub fn build_double(g: &Group, max_dim: usize) -> Result<QTAlgebra> {
    let n = g.order();
    let dim = n * n;
    check_bound(dim, max_dim)?;
    let idx = |x: usize, h: usize| x * n + h;
    let one = Cyclo::one;

    let mut mult = vec![Vec::new(); dim * dim];
    for x in 0..n {
        for h in 0..n {
            for h2 in 0..n {
                // (p_x # h)(p_{x'} # h') is nonzero only for x' = h^-1 x h.
                let x2 = g.conj(g.inv(h), x);
                mult[idx(x, h) * dim + idx(x2, h2)] = vec![(idx(x, g.mul(h, h2)), one())];
            }
        }
    }
    let unit = (0..n).map(|x| (idx(x, 0), one())).collect();
    let comult = (0..dim)
        .map(|i| {
            let (x, h) = (i / n, i % n);
            let mut terms: Vec<(usize, usize, Cyclo)> = (0..n)
                .map(|a| (idx(g.mul(g.inv(a), x), h), idx(a, h), one()))
                .collect();
            terms.sort_by_key(|t| (t.0, t.1));
            terms
        })
        .collect();
    let counit = (0..dim)
        .map(|i| if i / n == 0 { one() } else { Cyclo::zero() })
        .collect();
    let antipode = (0..dim)
        .map(|i| {
            let (x, h) = (i / n, i % n);
            let hi = g.inv(h);
            vec![(idx(g.conj(hi, g.inv(x)), hi), one())]
        })
        .collect();
    let mut rmatrix = Vec::with_capacity(dim);
    for x in 0..n {
        for h in 0..n {
            rmatrix.push((idx(x, h), idx(h, 0), one()));
        }
    }
    rmatrix.sort_by_key(|t| (t.0, t.1));
    let mut generators: Vec<Vec<(usize, Cyclo)>> = (0..n).map(|x| vec![(idx(x, 0), one())]).collect();
    for s in g.generators(&(0..n).collect::<Vec<_>>()) {
        generators.push((0..n).map(|x| (idx(x, s), one())).collect());
    }
    QTAlgebra::new(Structure {
        name: format!("D({})", g.name()),
        kind: Kind::Double,
        group: g.clone(),
        dim,
        mult,
        unit,
        comult,
        counit,
        antipode,
        rmatrix,
        generators,
    })
}

/// `kG` with `R = 1 (x) 1`.
pub fn build_triangular(g: &Group, max_dim: usize) -> Result<QTAlgebra> {
    let n = g.order();
    check_bound(n, max_dim)?;
    let one = Cyclo::one;
    let mut mult = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mult.push(vec![(g.mul(x, y), one())]);
        }
    }
    let mut generators: Vec<Vec<(usize, Cyclo)>> = g
        .generators(&(0..n).collect::<Vec<_>>())
        .into_iter()
        .map(|s| vec![(s, one())])
        .collect();
    if generators.is_empty() {
        generators.push(vec![(0, one())]);
    }
    QTAlgebra::new(Structure {
        name: format!("k{}", g.name()),
        kind: Kind::Triangular,
        group: g.clone(),
        dim: n,
        mult,
        unit: vec![(0, one())],
        comult: (0..n).map(|x| vec![(x, x, one())]).collect(),
        counit: vec![one(); n],
        antipode: (0..n).map(|x| vec![(g.inv(x), one())]).collect(),
        rmatrix: vec![(0, 0, one())],
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_group_spec;
    use crate::hopf::{eval, scale};
    use crate::rational::Rational;

    fn double(s: &str) -> QTAlgebra {
        build_double(&parse_group_spec(s).unwrap(), DEFAULT_MAX_ALGEBRA_DIM).unwrap()
    }

    #[test]
    fn trivial_group_instances_agree() {
        let g = parse_group_spec("Z1").unwrap();
        let d = build_double(&g, 10).unwrap();
        let t = build_triangular(&g, 10).unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(d.monodromy(), t.monodromy());
        assert_eq!(d.one(), t.one());
    }

    #[test]
    fn double_z2_products() {
        let a = double("Z2");
        assert_eq!(a.dim(), 4);
        // (p_x # h)(p_y # k) != 0 iff x = h y h^-1 = y.
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(!a.basis_product(i, j).is_empty(), i / 2 == j / 2);
            }
        }
    }

    #[test]
    fn monodromy_matches_closed_form() {
        let g = parse_group_spec("S3").unwrap();
        let a = build_double(&g, 100).unwrap();
        let q = a.monodromy();
        assert_eq!(q.len(), 36);
        let n = 6;
        for x in 0..n {
            for h in 0..n {
                let want = (x * n + h, g.conj(x, h) * n + x, Cyclo::one());
                assert!(q.contains(&want));
            }
        }
    }

    #[test]
    fn drinfeld_map_basics() {
        let a = double("Z2");
        assert_eq!(a.drinfeld(a.counit()), a.one());
        assert!(a.is_factorizable());
        let t = build_triangular(&parse_group_spec("S3").unwrap(), 100).unwrap();
        assert_eq!(t.drinfeld_image().dim(), 1);
        let f: Vec<Cyclo> = (0..6).map(|i| Cyclo::from_int(i as i64 + 2)).collect();
        assert_eq!(t.drinfeld(&f), scale(&t.one(), &eval(&f, &t.one())));
    }

    #[test]
    fn integrals_closed_form() {
        for s in ["Z1", "Z2", "S3"] {
            let g = parse_group_spec(s).unwrap();
            let n = g.order();
            let a = build_double(&g, 100).unwrap();
            let (lam, t) = a.integrals().unwrap();
            let inv_n = Cyclo::from_rational(Rational::new(1, n as i64));
            let want: Vec<Cyclo> = (0..n * n)
                .map(|i| if i / n == 0 { inv_n.clone() } else { Cyclo::zero() })
                .collect();
            assert_eq!(lam, want);
            assert_eq!(a.mul(&lam, &lam), lam);
            let reg = scale(&a.regular_character(), &Cyclo::from_rational(Rational::new(1, (n * n) as i64)));
            assert_eq!(t, reg);
            assert_eq!(eval(&t, &lam), Cyclo::from_rational(Rational::new(1, (n * n) as i64)));

            let k = build_triangular(&g, 100).unwrap();
            let (lam, t) = k.integrals().unwrap();
            assert_eq!(lam, vec![inv_n.clone(); n]);
            assert_eq!(eval(&t, &k.one()), Cyclo::one());
        }
    }

    #[test]
    fn harpoons() {
        let a = double("Z2");
        let f: Vec<Cyclo> = (0..4).map(|i| Cyclo::from_int(3 * i as i64 - 1)).collect();
        for i in 0..4 {
            let e = a.basis_element(i);
            assert_eq!(a.harpoon_left(&e, a.counit()), e);
            assert_eq!(a.harpoon_right(a.counit(), &e), e);
        }
        // (p_0 # h) <- f = sum_{ab=0} f(p_a # h) (p_b # h).
        for h in 0..2 {
            let got = a.harpoon_left(&a.basis_element(h), &f);
            let mut want = a.zero();
            for x in 0..2 {
                want[x * 2 + h] = f[x * 2 + h].clone();
            }
            assert_eq!(got, want);
        }
        let k = build_triangular(&parse_group_spec("S3").unwrap(), 100).unwrap();
        let f: Vec<Cyclo> = (0..6).map(|i| Cyclo::from_int(i as i64 * i as i64)).collect();
        for x in 0..6 {
            let e = k.basis_element(x);
            assert_eq!(k.harpoon_left(&e, &f), scale(&e, &f[x]));
        }
    }

    #[test]
    fn bound_is_enforced() {
        let g = parse_group_spec("S4").unwrap();
        assert!(matches!(build_double(&g, 400), Err(Error::BoundExceeded { value: 576, .. })));
    }
}
