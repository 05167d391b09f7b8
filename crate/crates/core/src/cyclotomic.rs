//! Exact elements of cyclotomic fields.
//!
//! A [`Cyclo`] is stored in the power basis `1, z, ..., z^(phi(n)-1)` of
//! `Q(z)`, `z = exp(2 pi i / n)`, reduced modulo the cyclotomic polynomial
//! `Phi_n`. After every operation the value descends to the smallest `n`
//! with the value in `Q(zeta_n)` (its conductor, never `2 mod 4`), so two
//! equal field elements have identical representations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::rational::Rational;

type Coeffs = SmallVec<[Rational; 2]>;

/// An element of `Q(zeta_n)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    // Conductor of the value; 1 for rationals.
    n: u32,
    // Dense, length phi(n).
    c: Coeffs,
}

struct Table {
    phi: usize,
    // Row e holds z^e mod Phi_n, e in 0..n, each of length phi.
    pow: Vec<i64>,
}

impl Table {
    fn row(&self, e: usize) -> &[i64] {
        &self.pow[e * self.phi..(e + 1) * self.phi]
    }
}

const SMALL_TABLES: usize = 1024;
static TABLES: [OnceLock<Table>; SMALL_TABLES] = [const { OnceLock::new() }; SMALL_TABLES];
static LARGE_TABLES: Mutex<BTreeMap<u32, &'static Table>> = Mutex::new(BTreeMap::new());

fn table(n: u32) -> &'static Table {
    if (n as usize) < SMALL_TABLES {
        return TABLES[n as usize].get_or_init(|| build_table(n));
    }
    let mut map = LARGE_TABLES.lock().unwrap_or_else(|e| e.into_inner());
    map.entry(n)
        .or_insert_with(|| Box::leak(Box::new(build_table(n))))
}

/// Integer coefficients of `Phi_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let n = n as usize;
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d as u32));
        }
    }
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    debug_assert!(lead == 1);
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let coef = rem[k + dd];
        q[k] = coef;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= coef * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn build_table(n: u32) -> Table {
    let phi_poly = cyclotomic_polynomial(n);
    let phi = phi_poly.len() - 1;
    let n = n as usize;
    let mut pow = vec![0i64; n * phi];
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for e in 0..n {
        pow[e * phi..(e + 1) * phi].copy_from_slice(&cur);
        // Multiply by z and fold z^phi = -sum Phi_n[i] z^i.
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * phi_poly[i];
            }
        }
    }
    Table { phi, pow }
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut r = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if m > 1 {
        r -= r / m;
    }
    r as usize
}

fn prime_factors(mut n: u32) -> SmallVec<[(u32, u32); 4]> {
    let mut out = SmallVec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inverse(a: u32, m: u32) -> u32 {
    let e = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i64) as u32
}

/// Reduces a polynomial in `z = zeta_n` given as `buf[e]` (e < n, n any
/// positive integer with `n % 4 != 2`) to dense power-basis coefficients.
fn reduce(n: u32, buf: &[Rational]) -> Coeffs {
    let t = table(n);
    let mut out: Coeffs = smallvec![Rational::ZERO; t.phi];
    for (e, c) in buf.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if e < t.phi {
            out[e] = &out[e] + c;
            continue;
        }
        for (k, &v) in t.row(e).iter().enumerate() {
            if v != 0 {
                out[k].add_mul(c, &Rational::from_int(v));
            }
        }
    }
    out
}

/// Maps a polynomial in `zeta_n`, `n == 2 mod 4`, to one in `zeta_(n/2)`
/// using `zeta_2m = -zeta_m^((m+1)/2)`.
fn halve_order(n: u32, buf: &[Rational]) -> (u32, Vec<Rational>) {
    let m = n / 2;
    let h = m.div_ceil(2);
    let mut out = vec![Rational::ZERO; m as usize];
    for (e, c) in buf.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = e as u64;
        let t = ((e * h as u64) % m as u64) as usize;
        out[t] = if e % 2 == 0 { &out[t] + c } else { &out[t] - c };
    }
    (m, out)
}

/// Canonical form of the value with dense coefficients `c` over `zeta_n`.
fn normalize(mut n: u32, mut c: Coeffs) -> Cyclo {
    loop {
        if c.iter().skip(1).all(Rational::is_zero) {
            return Cyclo::from_rational(c.into_iter().next().unwrap_or_default());
        }
        let mut g = n;
        for (e, v) in c.iter().enumerate().skip(1) {
            if !v.is_zero() {
                g = g.gcd(&(e as u32));
                if g == 1 {
                    break;
                }
            }
        }
        if g > 1 {
            let m = n / g;
            let mut buf = vec![Rational::ZERO; m as usize];
            for (e, v) in c.iter().enumerate() {
                if !v.is_zero() {
                    buf[e / g as usize] = v.clone();
                }
            }
            let (m, buf) = if m % 4 == 2 { halve_order(m, &buf) } else { (m, buf) };
            n = m;
            c = reduce(m, &buf);
            continue;
        }
        match descend_odd_prime(n, &c) {
            Some((m, cm)) => {
                n = m;
                c = cm;
            }
            None => return Cyclo { n, c },
        }
    }
}

/// Tries `Q(zeta_n) -> Q(zeta_(n/p))` for each odd prime `p` exactly dividing `n`.
///
/// With `zeta_n = zeta_p^u zeta_m^v`, `x = sum_i y_i zeta_p^i` with `y_i` in
/// `Q(zeta_m)`; `x` lies in `Q(zeta_m)` iff `y_1 = ... = y_(p-1)`, and then
/// `x = y_0 - y_1`.
fn descend_odd_prime(n: u32, c: &Coeffs) -> Option<(u32, Coeffs)> {
    for (p, k) in prime_factors(n) {
        if p == 2 || k != 1 || n == p {
            continue;
        }
        let m = n / p;
        let u = mod_inverse(m % p, p) as u64;
        let v = mod_inverse(p % m, m) as u64;
        let mut buckets = vec![vec![Rational::ZERO; m as usize]; p as usize];
        for (e, val) in c.iter().enumerate() {
            if val.is_zero() {
                continue;
            }
            let e = e as u64;
            let i = ((u * e) % p as u64) as usize;
            let j = ((v * e) % m as u64) as usize;
            buckets[i][j] = &buckets[i][j] + val;
        }
        let y1 = reduce(m, &buckets[1]);
        if (2..p as usize).all(|i| reduce(m, &buckets[i]) == y1) {
            let y0 = reduce(m, &buckets[0]);
            let diff: Coeffs = y0.iter().zip(&y1).map(|(a, b)| a - b).collect();
            return Some((m, diff));
        }
    }
    None
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            n: 1,
            c: smallvec![Rational::ZERO],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_int(v))
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclo {
            n: 1,
            c: smallvec![q],
        }
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num, den))
    }

    /// `zeta_n^k` for any `n >= 1`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let mut buf = vec![Rational::ZERO; n as usize];
        buf[k.rem_euclid(n as i64) as usize] = Rational::ONE;
        Self::from_power_buffer(n, buf)
    }

    /// `sum_e coeffs[e] * zeta_n^e` for any `n >= 1`; exponents are taken mod `n`.
    pub fn from_terms(n: u32, terms: &[(u64, Rational)]) -> Self {
        assert!(n >= 1, "cyclotomic order 0");
        let mut buf = vec![Rational::ZERO; n as usize];
        for (e, q) in terms {
            let i = (*e % n as u64) as usize;
            buf[i] = &buf[i] + q;
        }
        Self::from_power_buffer(n, buf)
    }

    fn from_power_buffer(n: u32, buf: Vec<Rational>) -> Self {
        let (n, buf) = if n % 4 == 2 { halve_order(n, &buf) } else { (n, buf) };
        normalize(n, reduce(n, &buf))
    }

    /// The conductor: the least `n` (never `2 mod 4`) with the value in `Q(zeta_n)`.
    pub fn order(&self) -> u32 {
        self.n
    }

    /// Nonzero power-basis terms `(exponent, coefficient)` over `zeta_order`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.c.iter().enumerate().filter(|(_, q)| !q.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.c[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.c[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.n == 1).then(|| &self.c[0])
    }

    /// The value as an `i64` if it is a rational integer that fits.
    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational().and_then(Rational::to_i64)
    }

    fn lift(&self, target: u32) -> Coeffs {
        if self.n == target {
            return self.c.clone();
        }
        let step = (target / self.n) as usize;
        let mut buf = vec![Rational::ZERO; target as usize];
        for (e, q) in self.terms() {
            buf[e * step] = q.clone();
        }
        reduce(target, &buf)
    }

    fn scale(&self, q: &Rational) -> Cyclo {
        if q.is_zero() {
            return Cyclo::zero();
        }
        Cyclo {
            n: self.n,
            c: self.c.iter().map(|v| v * q).collect(),
        }
    }

    fn add_impl(&self, rhs: &Cyclo) -> Cyclo {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.n == 1 || self.n == 1 {
            // A rational shift never changes the conductor.
            let (big, q) = if rhs.n == 1 { (self, &rhs.c[0]) } else { (rhs, &self.c[0]) };
            let mut c = big.c.clone();
            c[0] = &c[0] + q;
            return Cyclo { n: big.n, c };
        }
        if self.n == rhs.n {
            let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect();
            return normalize(self.n, c);
        }
        let l = lcm(self.n, rhs.n);
        let a = self.lift(l);
        let b = rhs.lift(l);
        normalize(l, a.iter().zip(&b).map(|(x, y)| x + y).collect())
    }

    fn mul_impl(&self, rhs: &Cyclo) -> Cyclo {
        if self.n == 1 {
            return rhs.scale(&self.c[0]);
        }
        if rhs.n == 1 {
            return self.scale(&rhs.c[0]);
        }
        let l = lcm(self.n, rhs.n);
        let a = self.lift(l);
        let b = rhs.lift(l);
        let mut buf = vec![Rational::ZERO; l as usize];
        let lu = l as usize;
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % lu;
                buf[k].add_mul(x, y);
            }
        }
        normalize(l, reduce(l, &buf))
    }

    /// Image under `zeta_n -> zeta_n^k`; `k` must be a unit mod the order.
    pub fn galois(&self, k: i64) -> Cyclo {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        let k = k.rem_euclid(n);
        assert_eq!(k.gcd(&n), 1, "Galois exponent must be a unit");
        let mut buf = vec![Rational::ZERO; self.n as usize];
        for (e, q) in self.terms() {
            buf[((e as i64 * k) % n) as usize] = q.clone();
        }
        Cyclo {
            n: self.n,
            c: reduce(self.n, &buf),
        }
    }

    /// Complex conjugate (`zeta_n -> zeta_n^-1`).
    pub fn conj(&self) -> Cyclo {
        self.galois(-1)
    }

    /// Field norm down to `Q`, together with the product of the non-identity conjugates.
    fn norm_parts(&self) -> (Rational, Cyclo) {
        let mut others = Cyclo::one();
        for k in 2..self.n as i64 {
            if k.gcd(&(self.n as i64)) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others)
            .as_rational()
            .cloned()
            .expect("norm of a cyclotomic is rational");
        (norm, others)
    }

    pub fn norm(&self) -> Rational {
        if self.n == 1 {
            return self.c[0].clone();
        }
        self.norm_parts().0
    }

    /// Multiplicative inverse via the norm.
    pub fn inverse(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Cyclo::from_rational(self.c[0].recip()?));
        }
        let (norm, others) = self.norm_parts();
        Ok(others.scale(&norm.recip()?))
    }

    pub fn checked_div(&self, rhs: &Cyclo) -> Result<Cyclo> {
        Ok(self * &rhs.inverse()?)
    }

    /// `self^k`; negative powers require a nonzero base.
    pub fn pow(&self, k: i64) -> Result<Cyclo> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Cyclo::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Evaluation under `zeta_n -> exp(2 pi i / n)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, q) in self.terms() {
            let v = q.to_f64();
            let ang = std::f64::consts::TAU * e as f64 / self.n as f64;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    pub fn abs_f64(&self) -> f64 {
        let (re, im) = self.to_complex();
        re.hypot(im)
    }
}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_int(v)
    }
}

impl From<Rational> for Cyclo {
    fn from(q: Rational) -> Self {
        Cyclo::from_rational(q)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        self.add_impl(rhs)
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self.add_impl(&-rhs)
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        self.mul_impl(rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            n: self.n,
            c: self.c.iter().map(|q| -q).collect(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $f(self, rhs: Cyclo) -> Cyclo {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $f(self, rhs: &'a Cyclo) -> Cyclo {
                (&self).$f(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// A deterministic total order (conductor, then coefficients); not a field order.
impl Ord for Cyclo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.c.cmp(&other.c))
    }
}

impl PartialOrd for Cyclo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cyclo {
    /// Renders as `a0 + a1*z(n)^e1 + ...` over the conductor.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, q) in self.terms() {
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                write!(f, "z({})", self.n)?;
            } else {
                write!(f, "z({})^{e}", self.n)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn rational_json(q: &Rational) -> (serde_json::Value, serde_json::Value) {
    match q.parts_i64() {
        Some((n, d)) => (n.into(), d.into()),
        None => {
            let (n, d) = q.parts_string();
            (n.into(), d.into())
        }
    }
}

fn json_int_str(v: &serde_json::Value) -> Option<String> {
    match v {
        serde_json::Value::Number(n) if n.is_i64() => Some(n.to_string()),
        serde_json::Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

impl Cyclo {
    /// `{"n": order, "c": [[exp, num, den], ...]}` over nonzero terms.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(e, q)| {
                let (n, d) = rational_json(q);
                serde_json::json!([e, n, d])
            })
            .collect();
        serde_json::json!({ "n": self.n, "c": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Cyclo> {
        let n = u32::try_from(v.get("n")?.as_u64()?).ok().filter(|&n| n >= 1)?;
        let mut terms = Vec::new();
        for t in v.get("c")?.as_array()? {
            let t = t.as_array()?;
            if t.len() != 3 {
                return None;
            }
            let e = t[0].as_u64()?;
            let q = Rational::from_parts_str(&json_int_str(&t[1])?, &json_int_str(&t[2])?)?;
            terms.push((e, q));
        }
        Some(Cyclo::from_terms(n, &terms))
    }
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Cyclo::from_json(&v).ok_or_else(|| D::Error::custom("malformed cyclotomic"))
    }
}
