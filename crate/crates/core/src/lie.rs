//! Invariants of matrix Lie algebras and the reference catalog they are
//! compared against.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::echelon::{Echelon, SpanSolver};
use crate::error::{Error, Result};
use crate::scalar::{q, Rational, Ring};
use crate::sparse::{QMatrix, SparseVec};

/// Killing form signature `(n₊, n₋, n₀)`.
pub type Signature = (usize, usize, usize);

/// Isomorphism invariants of a Lie algebra given by a matrix basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieInvariants {
    pub dim: usize,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub killing: Signature,
}

/// Structure constants `[x_i, x_j] = Σ_l c[i][j][l] x_l`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Vec<Vec<Rational>>>,
}

impl StructureConstants {
    /// Fails with [`Error::NotInSpan`] if some bracket leaves the span.
    pub fn from_basis(basis: &[QMatrix]) -> Result<Self> {
        let dim = basis.len();
        let width = basis.first().map_or(0, |b| b.rows() * b.cols());
        let flat: Vec<SparseVec<Rational>> = basis.iter().map(|b| b.flatten()).collect();
        let solver = SpanSolver::new(width, &flat)?;
        let mut c = vec![vec![vec![q(0); dim]; dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let br = basis[i].commutator(&basis[j])?.flatten();
                let coords = solver.coordinates(&br).ok_or(Error::NotInSpan)?;
                c[j][i] = coords.iter().map(|x| -x).collect();
                c[i][j] = coords;
            }
        }
        Ok(StructureConstants { dim, c })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &[Rational] {
        &self.c[i][j]
    }

    /// Matrix of `ad x_i` (column `j` holds `[x_i, x_j]`).
    pub fn ad(&self, i: usize) -> Vec<Vec<Rational>> {
        let n = self.dim;
        (0..n).map(|l| (0..n).map(|j| self.c[i][j][l].clone()).collect()).collect()
    }

    pub fn center_dim(&self) -> usize {
        let n = self.dim;
        let mut ech: Echelon<Rational> = Echelon::new(n);
        for j in 0..n {
            for l in 0..n {
                let row: SparseVec<Rational> = (0..n)
                    .filter(|&i| !Ring::is_zero(&self.c[i][j][l]))
                    .map(|i| (i, self.c[i][j][l].clone()))
                    .collect();
                ech.insert(row);
            }
        }
        ech.nullity()
    }

    pub fn derived_dim(&self) -> usize {
        let n = self.dim;
        let mut ech: Echelon<Rational> = Echelon::new(n);
        for i in 0..n {
            for j in i + 1..n {
                let row = self.c[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !Ring::is_zero(*v))
                    .map(|(l, v)| (l, v.clone()))
                    .collect();
                ech.insert(row);
            }
        }
        ech.rank()
    }

    /// `B(x_i, x_j) = tr(ad x_i ad x_j)`.
    pub fn killing(&self) -> Vec<Vec<Rational>> {
        let n = self.dim;
        let ads: Vec<_> = (0..n).map(|i| self.ad(i)).collect();
        let mut b = vec![vec![q(0); n]; n];
        for i in 0..n {
            for j in i..n {
                let mut t = q(0);
                for (a, row) in ads[i].iter().enumerate() {
                    for (c, x) in row.iter().enumerate() {
                        if !Ring::is_zero(x) && !Ring::is_zero(&ads[j][c][a]) {
                            t += x * &ads[j][c][a];
                        }
                    }
                }
                b[j][i] = t.clone();
                b[i][j] = t;
            }
        }
        b
    }
}

/// Signature of a symmetric rational matrix by congruence diagonalization.
pub fn signature(mut m: Vec<Vec<Rational>>) -> Signature {
    let n = m.len();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(p) = pick_pivot(&mut m, &active) {
        let d = m[p][p].clone();
        if d > q(0) {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            if Ring::is_zero(&m[i][p]) {
                continue;
            }
            let f = &m[i][p] / &d;
            for &j in &active {
                let v = &f * &m[p][j];
                m[i][j] -= v;
            }
        }
        for &i in &active {
            m[i][p] = q(0);
            m[p][i] = q(0);
        }
    }
    (pos, neg, n - pos - neg)
}

/// Returns an index with nonzero diagonal among `active`, creating one by
/// the congruence `x_i ← x_i + x_j` when only off-diagonal entries remain.
fn pick_pivot(m: &mut [Vec<Rational>], active: &[usize]) -> Option<usize> {
    if let Some(&p) = active.iter().find(|&&i| !Ring::is_zero(&m[i][i])) {
        return Some(p);
    }
    for &i in active {
        for &j in active {
            if i != j && !Ring::is_zero(&m[i][j]) {
                for &k in active {
                    let v = m[j][k].clone();
                    m[i][k] += v;
                }
                for &k in active {
                    let v = m[k][j].clone();
                    m[k][i] += v;
                }
                return Some(i);
            }
        }
    }
    None
}

pub fn invariants(basis: &[QMatrix]) -> Result<LieInvariants> {
    let sc = StructureConstants::from_basis(basis)?;
    Ok(LieInvariants {
        dim: sc.dim(),
        center_dim: sc.center_dim(),
        derived_dim: sc.derived_dim(),
        killing: signature(sc.killing()),
    })
}

/// Catalog entries; `so(0)`, `so(1)` and `sp(0)` are the zero algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieType {
    Zero,
    So(usize),
    U(usize),
    Sp(usize),
    SoSum(usize, usize),
    SpSum(usize, usize),
}

impl LieType {
    pub fn dim(self) -> usize {
        let so = |m: usize| m * m.saturating_sub(1) / 2;
        let sp = |m: usize| m * (2 * m + 1);
        match self {
            LieType::Zero => 0,
            LieType::So(m) => so(m),
            LieType::U(m) => m * m,
            LieType::Sp(m) => sp(m),
            LieType::SoSum(a, b) => so(a) + so(b),
            LieType::SpSum(a, b) => sp(a) + sp(b),
        }
    }

    /// An explicit matrix basis of the algebra.
    ///
    /// `u(m)` and `sp(m)` are realized as the commutants in `so(2m)` and
    /// `so(4m)` of left multiplication by `i` and by `i, j` respectively.
    pub fn reference_model(self) -> Result<Vec<QMatrix>> {
        match self {
            LieType::Zero => Ok(Vec::new()),
            LieType::So(m) => Ok(so_basis(m)),
            LieType::U(m) => {
                let j = complex_unit().kron(&QMatrix::identity(m));
                so_commutant(2 * m, &[j])
            }
            LieType::Sp(m) => {
                let id = QMatrix::identity(m);
                let (i, j, _) = quaternion_units();
                so_commutant(4 * m, &[i.kron(&id), j.kron(&id)])
            }
            LieType::SoSum(a, b) => Ok(block_sum(so_basis(a), a, so_basis(b), b)),
            LieType::SpSum(a, b) => {
                Ok(block_sum(LieType::Sp(a).reference_model()?, 4 * a, LieType::Sp(b).reference_model()?, 4 * b))
            }
        }
    }

    pub fn reference_invariants(self) -> Result<LieInvariants> {
        invariants(&self.reference_model()?)
    }

    /// Every catalog entry of dimension `dim` (summands of size ≥ 1, each
    /// sum listed once).
    pub fn candidates(dim: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        if dim == 0 {
            out.push(LieType::Zero);
        }
        let bound = dim + 2;
        for m in 1..=bound {
            for t in [LieType::So(m), LieType::U(m), LieType::Sp(m)] {
                if t.dim() == dim && dim > 0 {
                    out.push(t);
                }
            }
            for b in m..=bound {
                for t in [LieType::SoSum(m, b), LieType::SpSum(m, b)] {
                    if t.dim() == dim && dim > 0 {
                        out.push(t);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieType::Zero => write!(f, "0"),
            LieType::So(m) => write!(f, "so({m})"),
            LieType::U(m) => write!(f, "u({m})"),
            LieType::Sp(m) => write!(f, "sp({m})"),
            LieType::SoSum(a, b) => write!(f, "so({a})+so({b})"),
            LieType::SpSum(a, b) => write!(f, "sp({a})+sp({b})"),
        }
    }
}

/// `E_ab - E_ba`, `a < b`.
pub fn so_basis(m: usize) -> Vec<QMatrix> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let mut rows = vec![Vec::new(); m];
            rows[a].push((b, q(1)));
            rows[b].push((a, q(-1)));
            out.push(QMatrix::from_rows(m, m, rows));
        }
    }
    out
}

/// `[[0, -1], [1, 0]]`.
pub fn complex_unit() -> QMatrix {
    QMatrix::from_dense(&[vec![q(0), q(-1)], vec![q(1), q(0)]])
}

/// Left multiplication by `i, j, k` on `ℍ = span(1, i, j, k)`.
pub fn quaternion_units() -> (QMatrix, QMatrix, QMatrix) {
    let perm = |images: [(usize, i64); 4]| {
        let mut rows = vec![Vec::new(); 4];
        for (col, (row, s)) in images.into_iter().enumerate() {
            rows[row].push((col, q(s)));
        }
        QMatrix::from_rows(4, 4, rows)
    };
    let i = perm([(1, 1), (0, -1), (3, 1), (2, -1)]);
    let j = perm([(2, 1), (3, -1), (0, -1), (1, 1)]);
    let k = i.mul(&j).expect("4x4");
    (i, j, k)
}

fn block_sum(a: Vec<QMatrix>, da: usize, b: Vec<QMatrix>, db: usize) -> Vec<QMatrix> {
    let (za, zb) = (QMatrix::zeros(da, da), QMatrix::zeros(db, db));
    a.iter().map(|x| x.direct_sum(&zb)).chain(b.iter().map(|y| za.direct_sum(y))).collect()
}

/// Index of the unknown `x_ab` (`a < b`) in the upper triangle of `so(n)`.
pub(crate) fn upper_index(n: usize, a: usize, b: usize) -> usize {
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Antisymmetric matrix with upper-triangle coordinates `v`.
pub(crate) fn from_upper(n: usize, v: &[(usize, Rational)]) -> QMatrix {
    let mut rows = vec![Vec::new(); n];
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    for (idx, val) in v {
        let (a, b) = pairs[*idx];
        rows[a].push((b, val.clone()));
        rows[b].push((a, -val));
    }
    for r in rows.iter_mut() {
        r.sort_by_key(|e| e.0);
    }
    QMatrix::from_rows(n, n, rows)
}

/// Linear rows, in upper-triangle unknowns of `X ∈ so(n)`, expressing the
/// upper triangle of `[X, g]`.
pub(crate) fn commutator_rows<T: Ring>(n: usize, g: &QMatrix, conv: &impl Fn(&Rational) -> T) -> Vec<SparseVec<T>> {
    let gt = g.transpose();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let var = |a: usize, c: usize| -> Option<(usize, i64)> {
        match a.cmp(&c) {
            core::cmp::Ordering::Less => Some((upper_index(n, a, c), 1)),
            core::cmp::Ordering::Greater => Some((upper_index(n, c, a), -1)),
            core::cmp::Ordering::Equal => None,
        }
    };
    for a in 0..n {
        for b in a + 1..n {
            // ([X,g])_ab = Σ_c X_ac g_cb - Σ_c g_ac X_cb
            let mut row: Vec<(usize, T)> = Vec::new();
            for (c, v) in gt.row(b) {
                if let Some((k, s)) = var(a, *c) {
                    row.push((k, conv(&(v * q(s)))));
                }
            }
            for (c, v) in g.row(a) {
                if let Some((k, s)) = var(*c, b) {
                    row.push((k, conv(&(v * q(-s)))));
                }
            }
            out.push(crate::sparse::normalize(row));
        }
    }
    out
}

/// `{X ∈ so(n) : [X, g] = 0 for all g}` over the rationals.
pub fn so_commutant(n: usize, gens: &[QMatrix]) -> Result<Vec<QMatrix>> {
    let mut ech: Echelon<Rational> = Echelon::new(n * n.saturating_sub(1) / 2);
    for g in gens {
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch { left: g.rows(), right: n });
        }
        for row in commutator_rows(n, g, &|x: &Rational| x.clone()) {
            ech.insert(row);
        }
    }
    Ok(ech.nullspace().iter().map(|v| from_upper(n, v)).collect())
}

/// Human-readable `(n₊,n₋,n₀)`.
pub fn format_signature(s: Signature) -> String {
    format!("({},{},{})", s.0, s.1, s.2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so3_oracle() {
        let b = so_basis(3);
        let inv = invariants(&b).unwrap();
        assert_eq!(inv, LieInvariants { dim: 3, center_dim: 0, derived_dim: 3, killing: (0, 3, 0) });
        // [L01, L02] = -L12 with L_ab = E_ab - E_ba
        let sc = StructureConstants::from_basis(&b).unwrap();
        assert_eq!(sc.get(0, 1), &[q(0), q(0), q(-1)]);
    }

    #[test]
    fn one_dim_and_zero() {
        let inv = invariants(&[complex_unit()]).unwrap();
        assert_eq!(inv, LieInvariants { dim: 1, center_dim: 1, derived_dim: 0, killing: (0, 0, 1) });
        let zero = invariants(&[]).unwrap();
        assert_eq!(zero.dim, 0);
    }

    #[test]
    fn reference_dims() {
        for m in 1..=3 {
            for t in [LieType::So(m), LieType::U(m), LieType::Sp(m)] {
                assert_eq!(t.reference_model().unwrap().len(), t.dim(), "{t}");
            }
        }
        assert_eq!(LieType::SpSum(1, 2).reference_model().unwrap().len(), 13);
        let u2 = LieType::U(2).reference_invariants().unwrap();
        assert_eq!((u2.center_dim, u2.derived_dim, u2.killing), (1, 3, (0, 3, 1)));
        let sp1 = LieType::Sp(1).reference_invariants().unwrap();
        assert_eq!(sp1, LieType::So(3).reference_invariants().unwrap());
    }

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = quaternion_units();
        let minus = QMatrix::scalar(4, q(-1));
        for x in [&i, &j, &k] {
            assert_eq!(x.mul(x).unwrap(), minus);
            assert!(x.is_antisymmetric());
        }
        assert_eq!(j.mul(&k).unwrap(), i);
    }

    #[test]
    fn signature_needs_off_diagonal_pivot() {
        let m = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(signature(m), (1, 1, 0));
        let m = vec![vec![q(2), q(0), q(0)], vec![q(0), q(0), q(0)], vec![q(0), q(0), q(-3)]];
        assert_eq!(signature(m), (1, 1, 1));
    }

    #[test]
    fn candidates_cover_expected() {
        assert!(LieType::candidates(13).contains(&LieType::SpSum(1, 2)));
        assert!(LieType::candidates(4).contains(&LieType::U(2)));
        assert_eq!(LieType::candidates(0), vec![LieType::Zero]);
    }
}
