//! Exact sparse linear algebra over [`Cyclo`].
//!
//! Subspaces are kept in reduced row echelon form with unit pivots, which
//! is canonical: two subspaces are equal iff their row lists are equal.

use std::fmt;

use crate::cyclotomic::Cyclo;

/// Sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(usize, Cyclo)>;

pub fn sv_from_dense(v: &[Cyclo]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn sv_to_dense(v: &[(usize, Cyclo)], n: usize) -> Vec<Cyclo> {
    let mut out = vec![Cyclo::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

pub fn sv_get(v: &[(usize, Cyclo)], i: usize) -> Option<&Cyclo> {
    v.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &v[k].1)
}

/// `x + a*y`.
pub fn sv_axpy(x: &[(usize, Cyclo)], a: &Cyclo, y: &[(usize, Cyclo)]) -> SparseVec {
    if a.is_zero() {
        return x.to_vec();
    }
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let xi = x.get(i).map(|p| p.0).unwrap_or(usize::MAX);
        let yj = y.get(j).map(|p| p.0).unwrap_or(usize::MAX);
        if xi < yj {
            out.push(x[i].clone());
            i += 1;
        } else if yj < xi {
            out.push((yj, a * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + &(a * &y[j].1);
            if !v.is_zero() {
                out.push((xi, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sv_scale(x: &[(usize, Cyclo)], a: &Cyclo) -> SparseVec {
    if a.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, c)| (*i, c * a)).collect()
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn sv_collect(entries: impl IntoIterator<Item = (usize, Cyclo)>) -> SparseVec {
    let mut map: std::collections::BTreeMap<usize, Cyclo> = Default::default();
    for (i, c) in entries {
        if c.is_zero() {
            continue;
        }
        let slot = map.entry(i).or_default();
        *slot = &*slot + &c;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// A subspace of `k^ambient` in canonical reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    // Sorted by pivot; the pivot (first entry) of every row is 1 and every
    // other row is zero in that column.
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| vec![(i, Cyclo::one())]).collect(),
        }
    }

    pub fn from_vectors<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator,
        I::Item: AsRef<[(usize, Cyclo)]>,
    {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v.as_ref());
        }
        s
    }

    pub fn from_dense<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a [Cyclo]>) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(&sv_from_dense(v));
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The canonical echelon basis.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    fn pivot_row(&self, col: usize) -> Option<usize> {
        self.rows.binary_search_by_key(&col, |r| r[0].0).ok()
    }

    /// `v` minus its projection along the pivot columns; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[(usize, Cyclo)]) -> SparseVec {
        let mut r = v.to_vec();
        for (col, c) in v {
            if let Some(k) = self.pivot_row(*col) {
                r = sv_axpy(&r, &-c, &self.rows[k]);
            }
        }
        r
    }

    pub fn contains(&self, v: &[(usize, Cyclo)]) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_dense(&self, v: &[Cyclo]) -> bool {
        self.contains(&sv_from_dense(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[(usize, Cyclo)]) -> bool {
        debug_assert!(v.iter().all(|(i, _)| *i < self.ambient));
        let r = self.reduce(v);
        let Some((p, lead)) = r.first() else {
            return false;
        };
        let p = *p;
        let inv = lead.inverse().expect("nonzero pivot");
        let r = sv_scale(&r, &inv);
        for row in &mut self.rows {
            if let Some(c) = sv_get(row, p).cloned() {
                *row = sv_axpy(row, &-c, &r);
            }
        }
        let pos = self.rows.partition_point(|row| row[0].0 < p);
        self.rows.insert(pos, r);
        true
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[(usize, Cyclo)]) -> Option<Vec<Cyclo>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.rows
                .iter()
                .map(|r| sv_get(v, r[0].0).cloned().unwrap_or_default())
                .collect(),
        )
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x = sum y_i u_i lies in `other` iff sum y_i reduce(u_i) = 0.
        let residuals: Vec<SparseVec> = self.rows.iter().map(|u| other.reduce(u)).collect();
        let deps = kernel_of_columns(&residuals, self.ambient);
        let mut out = Subspace::zero(self.ambient);
        for y in deps.rows() {
            let mut x: SparseVec = Vec::new();
            for (i, c) in y {
                x = sv_axpy(&x, c, &self.rows[*i]);
            }
            out.insert(&x);
        }
        out
    }

    /// Basis vectors as dense coefficient lists.
    pub fn dense_rows(&self) -> Vec<Vec<Cyclo>> {
        self.rows
            .iter()
            .map(|r| sv_to_dense(r, self.ambient))
            .collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dim(), self.ambient)
    }
}

/// Canonical basis of `{y : sum_i y_i cols[i] = 0}` as a subspace of `k^cols.len()`.
pub fn kernel_of_columns(cols: &[SparseVec], nrows: usize) -> Subspace {
    let k = cols.len();
    let mut aug = Subspace::zero(nrows + k);
    for (i, c) in cols.iter().enumerate() {
        let mut v = c.clone();
        v.push((nrows + i, Cyclo::one()));
        aug.insert(&v);
    }
    let mut out = Subspace::zero(k);
    for r in aug.rows() {
        if r[0].0 >= nrows {
            let y: SparseVec = r.iter().map(|(i, c)| (i - nrows, c.clone())).collect();
            out.insert(&y);
        }
    }
    out
}

/// Canonical basis of `{x : <row, x> = 0 for every row}` in `k^ncols`.
pub fn nullspace(equations: &[SparseVec], ncols: usize) -> Subspace {
    let ech = Subspace::from_vectors(ncols, equations);
    let pivots: Vec<usize> = ech.pivots().collect();
    let mut out = Subspace::zero(ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v: SparseVec = vec![(f, Cyclo::one())];
        for r in ech.rows() {
            if let Some(c) = sv_get(r, f) {
                v.push((r[0].0, -c));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        out.insert(&v);
    }
    out
}

/// Some `x` with `sum_i x_i cols[i] = b`, if one exists.
pub fn solve_columns(cols: &[SparseVec], b: &[(usize, Cyclo)], nrows: usize) -> Option<Vec<Cyclo>> {
    let k = cols.len();
    let mut all = cols.to_vec();
    all.push(sv_scale(b, &Cyclo::from_int(-1)));
    let ker = kernel_of_columns(&all, nrows);
    let row = ker.rows().iter().find(|r| sv_get(r, k).is_some())?;
    let scale = sv_get(row, k)?.inverse().ok()?;
    let mut x = vec![Cyclo::zero(); k];
    for (i, c) in row {
        if *i < k {
            x[*i] = c * &scale;
        }
    }
    Some(x)
}

/// Repeated solves of `sum_i x_i cols[i] = b` against fixed columns.
///
/// Keeps the echelon form of the rows `(cols[i] | e_i)`; reducing `(b | 0)`
/// clears the first block exactly when `b` is in the column span, and the
/// negated second block is then a solution.
#[derive(Clone, Debug)]
pub struct ColumnSolver {
    nrows: usize,
    ncols: usize,
    aug: Subspace,
}

impl ColumnSolver {
    pub fn new(cols: &[SparseVec], nrows: usize) -> Self {
        let k = cols.len();
        let mut aug = Subspace::zero(nrows + k);
        for (i, c) in cols.iter().enumerate() {
            let mut v = c.clone();
            v.push((nrows + i, Cyclo::one()));
            aug.insert(&v);
        }
        ColumnSolver {
            nrows,
            ncols: k,
            aug,
        }
    }

    pub fn rank(&self) -> usize {
        self.aug.pivots().filter(|&p| p < self.nrows).count()
    }

    pub fn solve(&self, b: &[(usize, Cyclo)]) -> Option<Vec<Cyclo>> {
        let r = self.aug.reduce(b);
        if r.first().is_some_and(|(i, _)| *i < self.nrows) {
            return None;
        }
        let mut x = vec![Cyclo::zero(); self.ncols];
        for (i, c) in r {
            x[i - self.nrows] = -c;
        }
        Some(x)
    }
}

/// Dense matrix over [`Cyclo`], row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclo>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclo::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cyclo::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyclo) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclo) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclo::is_zero)
    }

    pub fn trace(&self) -> Cyclo {
        let mut t = Cyclo::zero();
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Kronecker product, `(A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Cyclo]) -> Vec<Cyclo> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Cyclo::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Cyclo> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        Subspace::from_dense(self.cols, (0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]))
            .dim()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(v: i64) -> Cyclo {
        Cyclo::from_int(v)
    }

    fn sv(d: &[i64]) -> SparseVec {
        sv_from_dense(&d.iter().map(|&x| c(x)).collect::<Vec<_>>())
    }

    #[test]
    fn echelon_is_canonical() {
        let a = Subspace::from_vectors(3, [sv(&[1, 2, 3]), sv(&[0, 1, 1])]);
        let b = Subspace::from_vectors(3, [sv(&[1, 3, 4]), sv(&[2, 4, 6]), sv(&[1, 1, 2])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&sv(&[2, 5, 7])));
        assert!(!a.contains(&sv(&[0, 0, 1])));
    }

    #[test]
    fn kernel_and_nullspace_agree() {
        let cols = vec![sv(&[1, 0]), sv(&[0, 1]), sv(&[1, 1])];
        let ker = kernel_of_columns(&cols, 2);
        assert_eq!(ker, Subspace::from_vectors(3, [sv(&[1, 1, -1])]));
        let rows = vec![sv(&[1, 0, 1]), sv(&[0, 1, 1])];
        assert_eq!(nullspace(&rows, 3), ker);
        let x = solve_columns(&cols[..2], &sv(&[3, 4]), 2).unwrap();
        assert_eq!(x, vec![c(3), c(4)]);
        assert!(solve_columns(&[sv(&[1, 1])], &sv(&[1, 0]), 2).is_none());
    }

    #[test]
    fn matrix_ops() {
        let a = Matrix::from_fn(2, 2, |i, j| c((i * 2 + j) as i64));
        let id = Matrix::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(a.kron(&id).trace(), &a.trace() * &c(2));
        assert_eq!(a.rank(), 2);
    }

    fn arb_vec(n: usize) -> impl Strategy<Value = SparseVec> {
        prop::collection::vec(-2i64..3, n).prop_map(|d| sv(&d))
    }

    proptest! {
        #[test]
        fn intersection_dimension(
            u in prop::collection::vec(arb_vec(5), 0..4),
            w in prop::collection::vec(arb_vec(5), 0..4),
        ) {
            let a = Subspace::from_vectors(5, &u);
            let b = Subspace::from_vectors(5, &w);
            let s = a.sum(&b);
            let i = a.intersect(&b);
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
            prop_assert!(a.is_subspace_of(&s) && b.is_subspace_of(&s));
        }

        #[test]
        fn insertion_order_irrelevant(u in prop::collection::vec(arb_vec(4), 0..5)) {
            let a = Subspace::from_vectors(4, &u);
            let b = Subspace::from_vectors(4, u.iter().rev());
            prop_assert_eq!(a, b);
        }
    }
}
