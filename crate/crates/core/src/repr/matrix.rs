use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::ReprError;
use crate::arith::{ArithError, Field, Ring};

/// Row-major sparse matrix over a commutative ring. Zero entries are never
/// stored, so equality is entry-wise on canonical values.
///
/// Shape mismatches in the arithmetic methods are programming errors and
/// panic.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, R>>,
}

impl<R: Ring> SparseMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag((0..n).map(|_| R::one()).collect())
    }

    pub fn diag(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, R)>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, j, x) in entries {
            let sum = match m.get(i, j) {
                Some(old) => old.add_ref(&x),
                None => x,
            };
            m.set(i, j, sum);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&R> {
        self.data[i].get(&j)
    }

    /// Value at `(i, j)`, zero when absent.
    pub fn entry(&self, i: usize, j: usize) -> R {
        self.get(i, j).cloned().unwrap_or_else(R::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        if x.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, x);
        }
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &R)> {
        self.data[i].iter().map(|(j, x)| (*j, x))
    }

    /// Stored entries in `(row, col)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.data.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, row)| row.len() == 1 && row.get(&i).is_some_and(|x| *x == R::one()))
    }

    /// `Some(c)` when the matrix is `c * I`.
    pub fn scalar_value(&self) -> Option<R> {
        if !self.is_square() {
            return None;
        }
        let c = self.entry(0, 0);
        let ok = self
            .data
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().all(|(j, x)| *j == i && *x == c) && (c.is_zero() || row.len() == 1));
        ok.then_some(c)
    }

    fn assert_same_shape(&self, other: &Self) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Option<&R>, Option<&R>) -> R) -> Self {
        self.assert_same_shape(other);
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            let mut keys: Vec<usize> = self.data[i].keys().chain(other.data[i].keys()).copied().collect();
            keys.sort_unstable();
            keys.dedup();
            for j in keys {
                out.set(i, j, f(self.data[i].get(&j), other.data[i].get(&j)));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => a.add_ref(b),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.clone(),
            (None, None) => R::zero(),
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => a.sub_ref(b),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.neg_ref(),
            (None, None) => R::zero(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg_ref())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        self.map(|x| x.mul_ref(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Vec<R>> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &rhs.data[*k] {
                        acc.entry(*j).or_default().push(a.mul_ref(b));
                    }
                }
                acc.into_iter()
                    .filter_map(|(j, parts)| {
                        let s = R::sum(parts);
                        (!s.is_zero()).then_some((j, s))
                    })
                    .collect()
            })
            .collect();
        Self { rows: self.rows, cols: rhs.cols, data }
    }

    /// Product of a sequence of square matrices, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Option<Self> {
        let mut it = factors.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.mul(m)))
    }

    pub fn pow(&self, n: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product; the left factor indexes the slow (outer) position.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for (i, j, a) in self.entries() {
            for (k, l, b) in other.entries() {
                out.data[i * other.rows + k].insert(j * other.cols + l, a.mul_ref(b));
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for (i, j, x) in self.entries() {
            out.data[j].insert(i, x.clone());
        }
        out
    }

    /// Applies `f` entry-wise; results that are zero are dropped.
    pub fn map<T: Ring>(&self, f: impl Fn(&R) -> T) -> SparseMatrix<T> {
        self.try_map(|x| Ok::<_, std::convert::Infallible>(f(x))).unwrap()
    }

    pub fn try_map<T: Ring, E>(&self, f: impl Fn(&R) -> Result<T, E>) -> Result<SparseMatrix<T>, E> {
        let mut out = SparseMatrix::<T>::zeros(self.rows, self.cols);
        for (i, j, x) in self.entries() {
            out.set(i, j, f(x)?);
        }
        Ok(out)
    }

    /// One line `row col :: value` per stored entry, sorted by `(row, col)`.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for (i, j, x) in self.entries() {
            let _ = writeln!(out, "{i} {j} :: {}", x.canonical_text());
        }
        out
    }

    /// The stored entry with the longest canonical text, as `(row, col, text)`.
    pub fn largest_entry(&self) -> Option<(usize, usize, String)> {
        self.entries()
            .map(|(i, j, x)| (i, j, x.canonical_text()))
            .max_by(|a, b| a.2.len().cmp(&b.2.len()).then_with(|| b.0.cmp(&a.0)).then_with(|| b.1.cmp(&a.1)))
    }
}

/// Exact inverse by fraction-free Gauss-Jordan elimination on `[A | I]`.
///
/// Each elimination step replaces row `i` by `(p * row_i - a_ik * row_k) / p_prev`,
/// which keeps entries as minors of `A` rather than nested fractions. The
/// result is checked by multiplying back.
pub fn matrix_inverse<F: Field>(m: &SparseMatrix<F>) -> Result<SparseMatrix<F>, ReprError> {
    if !m.is_square() {
        return Err(ReprError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut row = vec![F::zero(); 2 * n];
            for (j, x) in m.row(i) {
                row[j] = x.clone();
            }
            row[n + i] = F::one();
            row
        })
        .collect();
    let mut prev = F::one();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(ReprError::Singular)?;
        a.swap(k, pivot_row);
        let p = a[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let aik = a[i][k].clone();
            #[allow(clippy::needless_range_loop)]
            for j in 0..2 * n {
                let t = p.mul_ref(&a[i][j]).sub_ref(&aik.mul_ref(&a[k][j]));
                a[i][j] = t.try_div(&prev).map_err(arith_to_singular)?;
            }
        }
        prev = p;
    }
    let mut inv = SparseMatrix::zeros(n, n);
    for (i, row) in a.iter().enumerate() {
        let d = row[i].try_inv().map_err(arith_to_singular)?;
        for j in 0..n {
            inv.set(i, j, row[n + j].mul_ref(&d));
        }
    }
    if !m.mul(&inv).is_identity() {
        return Err(ReprError::InternalMismatch("inverse failed the product check".into()));
    }
    Ok(inv)
}

fn arith_to_singular(_: ArithError) -> ReprError {
    ReprError::Singular
}
