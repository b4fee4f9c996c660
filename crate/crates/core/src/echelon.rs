//! Incremental sparse Gaussian elimination.
//!
//! Rows are streamed in one at a time and reduced against the pivots found so
//! far, so large homogeneous systems never need to be materialized. With exact
//! rationals the resulting rank and kernel are exact.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::sparse::{axpy, SparseVec};

/// Row echelon form of a growing set of sparse rows.
///
/// Each stored row has leading coefficient 1 at its pivot column and no
/// entries in columns that were already pivots when it was inserted.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    ncols: usize,
    pivots: Vec<Option<SparseVec<T>>>,
    order: Vec<usize>,
}

impl<T: Field> Echelon<T> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: vec![None; ncols], order: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.order.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    /// Pivot columns in insertion order.
    pub fn pivot_columns(&self) -> &[usize] {
        &self.order
    }

    /// Eliminates every pivot column from `row`.
    pub fn reduce(&self, mut row: SparseVec<T>) -> SparseVec<T> {
        let mut pos = 0;
        while pos < row.len() {
            let col = row[pos].0;
            match self.pivots.get(col).and_then(|p| p.as_ref()) {
                Some(pivot) => {
                    let s = row[pos].1.neg();
                    row = axpy(&row, &s, pivot);
                }
                None => pos += 1,
            }
        }
        row
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: SparseVec<T>) -> bool {
        debug_assert!(row.last().is_none_or(|e| e.0 < self.ncols));
        let row = self.reduce(row);
        let Some((lead, lead_val)) = row.first().cloned() else {
            return false;
        };
        let inv = lead_val.inv();
        let row: SparseVec<T> = row
            .into_iter()
            .map(|(j, v)| (j, if j == lead { T::one() } else { v.mul(&inv) }))
            .collect();
        self.pivots[lead] = Some(row);
        self.order.push(lead);
        true
    }

    pub fn contains(&self, row: SparseVec<T>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Fully reduced rows (pivot column, row) with entries only in free
    /// columns besides the pivot itself.
    pub fn reduced_rows(&self) -> Vec<(usize, SparseVec<T>)> {
        let mut fin: Vec<Option<SparseVec<T>>> = vec![None; self.ncols];
        for &p in self.order.iter().rev() {
            let mut row = self.pivots[p].clone().expect("pivot row");
            let mut pos = 0;
            while pos < row.len() {
                let col = row[pos].0;
                if col != p {
                    if let Some(f) = fin[col].as_ref() {
                        let s = row[pos].1.neg();
                        row = axpy(&row, &s, f);
                        continue;
                    }
                }
                pos += 1;
            }
            fin[p] = Some(row);
        }
        self.order
            .iter()
            .map(|&p| (p, fin[p].take().expect("reduced row")))
            .collect()
    }

    /// Basis of the kernel, one vector per free column (ascending), each with
    /// a 1 in its free column and 0 in every other free column.
    pub fn nullspace(&self) -> Vec<SparseVec<T>> {
        let free: Vec<usize> = (0..self.ncols).filter(|&c| self.pivots[c].is_none()).collect();
        let mut slot = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut vecs: Vec<SparseVec<T>> = free.iter().map(|&f| vec![(f, T::one())]).collect();
        for (p, row) in self.reduced_rows() {
            for (j, v) in row {
                if j != p {
                    vecs[slot[j]].push((p, v.neg()));
                }
            }
        }
        for v in vecs.iter_mut() {
            v.sort_by_key(|e| e.0);
        }
        vecs
    }
}

/// Rank of a list of sparse rows of width `ncols`.
pub fn rank<T: Field>(ncols: usize, rows: impl IntoIterator<Item = SparseVec<T>>) -> usize {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Expresses vectors in a fixed linearly independent basis.
#[derive(Clone, Debug)]
pub struct SpanSolver<T> {
    ncols: usize,
    len: usize,
    ech: Echelon<T>,
}

impl<T: Field> SpanSolver<T> {
    /// Fails with [`Error::InvalidArgument`] if the basis is dependent.
    pub fn new(ncols: usize, basis: &[SparseVec<T>]) -> Result<Self> {
        let len = basis.len();
        let mut ech = Echelon::new(ncols + len);
        for (i, b) in basis.iter().enumerate() {
            let mut row = b.clone();
            row.push((ncols + i, T::one()));
            ech.insert(row);
            if ech.order.last().is_none_or(|&p| p >= ncols) {
                return Err(Error::InvalidArgument("basis is linearly dependent".into()));
            }
        }
        Ok(SpanSolver { ncols, len, ech })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coefficients of `v` in the basis, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec<T>) -> Option<Vec<T>> {
        let rest = self.ech.reduce(v.clone());
        if rest.first().is_some_and(|e| e.0 < self.ncols) {
            return None;
        }
        let mut out = vec![T::zero(); self.len];
        for (j, c) in rest {
            out[j - self.ncols] = c.neg();
        }
        Some(out)
    }

    pub fn contains(&self, v: &SparseVec<T>) -> bool {
        self.coordinates(v).is_some()
    }
}
