//! Row-compressed sparse matrices over a [`Ring`].
//!
//! Every representation matrix in this crate is a signed permutation or a
//! short sum of them, so a sorted `(column, value)` list per row is both the
//! simplest and the fastest layout.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{Gaussian, Rational, Ring};

/// Sorted `(index, value)` pairs with no stored zeros.
pub type SparseVec<T> = Vec<(usize, T)>;

/// `a + s * b` for sorted sparse vectors.
pub fn axpy<T: Ring>(a: &[(usize, T)], s: &T, b: &[(usize, T)]) -> SparseVec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = s.mul(&b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.add(&s.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Sorts by index, merges duplicates and drops zeros.
pub fn normalize<T: Ring>(mut entries: Vec<(usize, T)>) -> SparseVec<T> {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec<T> = Vec::with_capacity(entries.len());
    for (idx, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == idx => last.1 = last.1.add(&v),
            _ => out.push((idx, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

pub fn dot<T: Ring>(a: &[(usize, T)], b: &[(usize, T)]) -> T {
    let mut acc = T::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i].0 < b[j].0 {
            i += 1;
        } else if b[j].0 < a[i].0 {
            j += 1;
        } else {
            acc = acc.add(&a[i].1.mul(&b[j].1));
            i += 1;
            j += 1;
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<T>>,
}

impl<T: Ring> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, s: T) -> Self {
        let data = if s.is_zero() {
            vec![Vec::new(); n]
        } else {
            (0..n).map(|i| vec![(i, s.clone())]).collect()
        };
        SparseMatrix { rows: n, cols: n, data }
    }

    /// Builds from row lists; entries are sorted and merged.
    pub fn from_rows(rows: usize, cols: usize, data: Vec<Vec<(usize, T)>>) -> Self {
        assert_eq!(data.len(), rows);
        let data = data
            .into_iter()
            .map(|r| {
                let r = normalize(r);
                assert!(r.last().is_none_or(|e| e.0 < cols));
                r
            })
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn from_dense(dense: &[Vec<T>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        let data = dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i][*j] = v.clone();
            }
        }
        out
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

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(pos) => self.data[i][pos].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec<T>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        let data = self
            .data
            .iter()
            .map(|r| {
                r.iter()
                    .filter_map(|(j, v)| {
                        let w = f(v);
                        (!w.is_zero()).then_some((*j, w))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|v| v.mul(s))
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch { left: self.rows, right: other.rows });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.combine(other, &T::one()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.combine(other, &T::one().neg()))
    }

    /// `self + s * other`, shapes assumed equal.
    fn combine(&self, other: &Self, s: &T) -> Self {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| axpy(a, s, b)).collect();
        SparseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { left: self.cols, right: other.rows });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: SparseVec<T> = Vec::new();
                for (k, v) in row {
                    acc = axpy(&acc, v, &other.data[*k]);
                }
                acc
            })
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().fold(T::zero(), |acc, (j, a)| acc.add(&a.mul(&v[*j]))))
            .collect()
    }

    pub fn mul_sparse_vec(&self, v: &[(usize, T)]) -> SparseVec<T> {
        let mut out = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            let x = dot(row, v);
            if !x.is_zero() {
                out.push((i, x));
            }
        }
        out
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Kronecker product; row index of `a ⊗ b` is `i_a * rows_b + i_b`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, va) in ra {
                    for (jb, vb) in rb {
                        row.push((ja * other.cols + jb, va.mul(vb)));
                    }
                }
                row.retain(|e: &(usize, T)| !e.1.is_zero());
                data.push(row);
            }
        }
        SparseMatrix { rows, cols, data }
    }

    /// Block-diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut data = self.data.clone();
        for row in &other.data {
            data.push(row.iter().map(|(j, v)| (j + self.cols, v.clone())).collect());
        }
        SparseMatrix { rows: self.rows + other.rows, cols: self.cols + other.cols, data }
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.add(&self.get(i, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && self.add(&self.transpose()).is_ok_and(|s| s.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Whether the matrix has at most one nonzero entry per row and column.
    pub fn is_monomial(&self) -> bool {
        let mut seen = vec![false; self.cols];
        for row in &self.data {
            if row.len() > 1 {
                return false;
            }
            for (j, _) in row {
                if seen[*j] {
                    return false;
                }
                seen[*j] = true;
            }
        }
        true
    }

    /// Row-major flattening into a sparse vector of length `rows * cols`.
    pub fn flatten(&self) -> SparseVec<T> {
        let mut out = Vec::with_capacity(self.nnz());
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out.push((i * self.cols + j, v.clone()));
            }
        }
        out
    }
}

/// Exact rational matrix.
pub type QMatrix = SparseMatrix<Rational>;

impl SparseMatrix<Gaussian> {
    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    fn m(rows: &[&[i64]]) -> SparseMatrix<Rational> {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn product_and_commutator() {
        let a = m(&[&[0, -1], &[1, 0]]);
        let b = m(&[&[1, 0], &[0, -1]]);
        assert_eq!(a.mul(&a).unwrap(), SparseMatrix::scalar(2, q(-1)));
        let c = a.commutator(&b).unwrap();
        assert_eq!(c, m(&[&[0, 2], &[2, 0]]));
        assert!(a.commutator(&a).unwrap().is_zero());
    }

    #[test]
    fn kron_layout() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let id = SparseMatrix::<Rational>::identity(2);
        let k = a.kron(&id);
        assert_eq!(k.get(0, 2), q(2));
        assert_eq!(k.get(1, 3), q(2));
        assert_eq!(k.get(3, 1), q(3));
        assert_eq!(k.get(0, 1), q(0));
    }

    #[test]
    fn symmetry_predicates() {
        let a = m(&[&[0, -1], &[1, 0]]);
        assert!(a.is_antisymmetric());
        assert!(a.is_monomial());
        assert!(!a.is_symmetric());
        assert!(m(&[&[1, 1], &[1, 0]]).is_symmetric());
        assert!(!m(&[&[1, 1], &[1, 0]]).is_monomial());
    }

    #[test]
    fn axpy_cancels() {
        let a = vec![(0, q(1)), (3, q(2))];
        let b = vec![(3, q(1)), (5, q(1))];
        assert_eq!(axpy(&a, &q(-2), &b), vec![(0, q(1)), (5, q(-2))]);
    }
}
