//! The complex spinor representation `κ_n : Cl_n → End(C^{2^k})`, `k = ⌊n/2⌋`.
//!
//! Generators are Kronecker products of the 2×2 matrices `g1`, `g2`, `T`.
//! Tensor factor 1 is the most significant one, so `e_1` acts on the last
//! factor and the spinor `u_{ε_1} ⊗ ... ⊗ u_{ε_k}` has `ε_1` leftmost.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex;

use crate::blade::{Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::scalar::{Gaussian, Ring};
use crate::sparse::SparseMatrix;

/// Complex matrix with Gaussian-rational entries.
pub type CMatrix = SparseMatrix<Gaussian>;

/// Dense complex vector with Gaussian-integer entries.
pub type ZVec = Vec<Complex<i64>>;

/// `(ε_1, ..., ε_k)` with entries `±1`.
pub type SignVector = Vec<i8>;

/// Largest `n` for which `κ_n` is built (spinor dimension `2^9`).
pub const MAX_KAPPA_N: usize = 19;

fn gm(entries: [[(i64, i64); 2]; 2]) -> CMatrix {
    let dense: Vec<Vec<Gaussian>> = entries
        .iter()
        .map(|row| row.iter().map(|&(a, b)| Gaussian::from_ints(a, b)).collect())
        .collect();
    SparseMatrix::from_dense(&dense)
}

pub fn g1() -> CMatrix {
    gm([[(0, 1), (0, 0)], [(0, 0), (0, -1)]])
}

pub fn g2() -> CMatrix {
    gm([[(0, 0), (0, 1)], [(0, 1), (0, 0)]])
}

pub fn t_matrix() -> CMatrix {
    gm([[(0, 0), (0, -1)], [(0, 1), (0, 0)]])
}

/// `(a ⊗ b)(v ⊗ w) = a(v) ⊗ b(w)`.
pub fn kronecker(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kron(b)
}

fn kron_all(factors: &[CMatrix]) -> CMatrix {
    factors.iter().fold(CMatrix::identity(1), |acc, f| kronecker(&acc, f))
}

/// Images of `e_1, ..., e_n` under `κ_n`.
#[derive(Clone, Debug)]
pub struct SpinorRep {
    n: usize,
    k: usize,
    gens: Vec<CMatrix>,
    monomials: Vec<Option<PhaseMonomial>>,
}

impl SpinorRep {
    /// Wraps arbitrary generator matrices, e.g. to test the relation checker.
    pub fn from_gens(n: usize, gens: Vec<CMatrix>) -> Result<Self> {
        if gens.len() != n {
            return Err(Error::DimensionMismatch { left: n, right: gens.len() });
        }
        let dim = gens.first().map_or(1, |g| g.rows());
        if gens.iter().any(|g| g.rows() != dim || g.cols() != dim) || !dim.is_power_of_two() {
            return Err(Error::InvalidArgument("generators must be square of equal power-of-two size".into()));
        }
        Ok(SpinorRep::assemble(n, dim.trailing_zeros() as usize, gens))
    }

    fn assemble(n: usize, k: usize, gens: Vec<CMatrix>) -> Self {
        let monomials = gens.iter().map(PhaseMonomial::from_matrix).collect();
        SpinorRep { n, k, gens, monomials }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        1 << self.k
    }

    pub fn gens(&self) -> &[CMatrix] {
        &self.gens
    }

    /// `κ(e_i)`, 1-based.
    pub fn gen(&self, i: usize) -> Result<&CMatrix> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n });
        }
        Ok(&self.gens[i - 1])
    }

    /// `κ(e_I)` as the ordered product of generator images.
    pub fn blade(&self, b: Blade) -> Result<CMatrix> {
        Ok(self.blade_monomial(b)?.to_matrix())
    }

    pub fn blade_monomial(&self, b: Blade) -> Result<PhaseMonomial> {
        if b.n() != self.n {
            return Err(Error::DimensionMismatch { left: b.n(), right: self.n });
        }
        let mut acc = PhaseMonomial::identity(self.dim());
        for i in b.indices() {
            let g = self.monomials[i - 1]
                .as_ref()
                .ok_or_else(|| Error::InvalidArgument("generator is not a phase monomial".into()))?;
            acc = acc.compose(g);
        }
        Ok(acc)
    }

    pub fn element(&self, x: &CliffordElement) -> Result<CMatrix> {
        let mut acc = CMatrix::zeros(self.dim(), self.dim());
        for (b, c) in x.terms() {
            acc = acc.add(&self.blade(*b)?.scale(&Gaussian::real(c.clone())))?;
        }
        Ok(acc)
    }
}

/// Builds `κ_n` from the generator table; `n = 1` gives `κ(e_1) = (i)`.
pub fn build_kappa(n: usize) -> Result<SpinorRep> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > MAX_KAPPA_N {
        return Err(Error::TooLarge { n, max: MAX_KAPPA_N });
    }
    let k = n / 2;
    let id = CMatrix::identity(2);
    let mut gens = Vec::with_capacity(n);
    for j in 1..=k {
        for g in [g1(), g2()] {
            let mut factors = vec![id.clone(); k - j];
            factors.push(g);
            factors.extend(std::iter::repeat_n(t_matrix(), j - 1));
            gens.push(kron_all(&factors));
        }
    }
    if n % 2 == 1 {
        let ts = vec![t_matrix(); k];
        gens.push(kron_all(&ts).scale(&Gaussian::i()));
    }
    Ok(SpinorRep::assemble(n, k, gens))
}

/// Checks `κ(e_i)κ(e_j) + κ(e_j)κ(e_i) = -2 δ_ij Id` for all pairs.
pub fn verify_clifford_relations(rep: &SpinorRep) -> bool {
    let dim = rep.dim();
    let minus_two = CMatrix::scalar(dim, Gaussian::from_ints(-2, 0));
    let zero = CMatrix::zeros(dim, dim);
    for i in 0..rep.n {
        for j in i..rep.n {
            let (a, b) = (&rep.gens[i], &rep.gens[j]);
            let anti = match a.mul(b).and_then(|ab| b.mul(a).and_then(|ba| ab.add(&ba))) {
                Ok(m) => m,
                Err(_) => return false,
            };
            if anti != if i == j { minus_two.clone() } else { zero.clone() } {
                return false;
            }
        }
    }
    true
}

/// Position of `u_ε` among the `2^k` sign vectors; `ε_1 = -1` sets the top bit.
pub fn sign_vector_index(eps: &[i8]) -> usize {
    eps.iter().fold(0, |acc, &e| (acc << 1) | usize::from(e < 0))
}

pub fn index_sign_vector(k: usize, idx: usize) -> SignVector {
    (0..k).map(|p| if idx >> (k - 1 - p) & 1 == 1 { -1 } else { 1 }).collect()
}

/// Unnormalized `u_ε` with `u_{±1} = (1, ∓i)`, so `|u_ε|^2 = 2^k`.
pub fn spinor_basis_vector(eps: &[i8]) -> ZVec {
    let mut v: ZVec = vec![Complex::new(1, 0)];
    for &e in eps {
        let second = Complex::new(0, -i64::from(e));
        v = v.iter().flat_map(|&a| [a, a * second]).collect();
    }
    v
}

pub fn to_gaussian(v: &[Complex<i64>]) -> Vec<Gaussian> {
    v.iter().map(|z| Gaussian::from_ints(z.re, z.im)).collect()
}

/// Standard Hermitian product `Σ v_a conj(w_a)`.
pub fn hermitian(v: &[Complex<i64>], w: &[Complex<i64>]) -> Complex<i64> {
    v.iter().zip(w).map(|(a, b)| a * b.conj()).sum()
}

/// The closed-form action `e_j · u_ε = phase · u_{ε'}`.
pub fn clifford_action_sign(j: usize, eps: &[i8], n: usize) -> Result<(Gaussian, SignVector)> {
    let k = n / 2;
    if eps.len() != k {
        return Err(Error::DimensionMismatch { left: eps.len(), right: k });
    }
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, max: n });
    }
    // ε is 1-based in the formulas
    let prod = |from: usize| -> i64 { (from..=k).map(|a| i64::from(eps[a - 1])).product() };
    let mut out = eps.to_vec();
    if j == 2 * k + 1 {
        let s = if k.is_multiple_of(2) { 1 } else { -1 } * prod(1);
        return Ok((Gaussian::from_ints(0, s), out));
    }
    let jj = j.div_ceil(2);
    let flip = k - jj + 1;
    out[flip - 1] = -out[flip - 1];
    let base = if (jj - 1).is_multiple_of(2) { 1 } else { -1 };
    let phase = if j % 2 == 1 {
        Gaussian::from_ints(0, base * prod(k - jj + 2))
    } else {
        Gaussian::from_ints(base * prod(k - jj + 1), 0)
    };
    Ok((phase, out))
}

/// Compares `κ(e_j) u_ε` with [`clifford_action_sign`] for every `j` and `ε`.
pub fn cross_check_action(n: usize) -> Result<bool> {
    let rep = build_kappa(n)?;
    let k = rep.k();
    for idx in 0..rep.dim() {
        let eps = index_sign_vector(k, idx);
        let u = to_gaussian(&spinor_basis_vector(&eps));
        for j in 1..=n {
            let lhs = rep.gen(j)?.mul_vec(&u);
            let (phase, eps2) = clifford_action_sign(j, &eps, n)?;
            let rhs: Vec<Gaussian> =
                to_gaussian(&spinor_basis_vector(&eps2)).iter().map(|z| z.mul(&phase)).collect();
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A matrix sending basis column `j` to `i^{phase[j]}` times column `target[j]`.
///
/// Every `κ(e_I)` has this form, and so does `γ_n`'s matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseMonomial {
    target: Vec<usize>,
    phase: Vec<u8>,
}

fn i_pow(p: u8) -> Complex<i64> {
    match p % 4 {
        0 => Complex::new(1, 0),
        1 => Complex::new(0, 1),
        2 => Complex::new(-1, 0),
        _ => Complex::new(0, -1),
    }
}

fn phase_of(v: &Gaussian) -> Option<u8> {
    [0u8, 1, 2, 3].into_iter().find(|&p| {
        let z = i_pow(p);
        *v == Gaussian::from_ints(z.re, z.im)
    })
}

impl PhaseMonomial {
    pub fn identity(dim: usize) -> Self {
        PhaseMonomial { target: (0..dim).collect(), phase: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    /// `None` unless the matrix has exactly one entry in `{±1, ±i}` per column
    /// and per row.
    pub fn from_matrix(m: &CMatrix) -> Option<Self> {
        if !m.is_square() || !m.is_monomial() {
            return None;
        }
        let dim = m.rows();
        let mut target = vec![usize::MAX; dim];
        let mut phase = vec![0; dim];
        for i in 0..dim {
            for (j, v) in m.row(i) {
                target[*j] = i;
                phase[*j] = phase_of(v)?;
            }
        }
        if target.contains(&usize::MAX) {
            return None;
        }
        Some(PhaseMonomial { target, phase })
    }

    pub fn to_matrix(&self) -> CMatrix {
        let dim = self.dim();
        let mut rows: Vec<Vec<(usize, Gaussian)>> = vec![Vec::new(); dim];
        for j in 0..dim {
            let z = i_pow(self.phase[j]);
            rows[self.target[j]].push((j, Gaussian::from_ints(z.re, z.im)));
        }
        SparseMatrix::from_rows(dim, dim, rows)
    }

    /// `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let (target, phase) = other
            .target
            .iter()
            .zip(&other.phase)
            .map(|(&t, &p)| (self.target[t], (p + self.phase[t]) % 4))
            .unzip();
        PhaseMonomial { target, phase }
    }

    /// Entrywise conjugate.
    pub fn conj(&self) -> Self {
        PhaseMonomial { target: self.target.clone(), phase: self.phase.iter().map(|p| (4 - p) % 4).collect() }
    }

    /// Multiplies by `i^p`.
    pub fn times_i_pow(&self, p: u8) -> Self {
        PhaseMonomial { target: self.target.clone(), phase: self.phase.iter().map(|q| (q + p) % 4).collect() }
    }

    pub fn apply(&self, v: &[Complex<i64>]) -> ZVec {
        let mut out = vec![Complex::new(0, 0); v.len()];
        for (j, z) in v.iter().enumerate() {
            out[self.target[j]] = i_pow(self.phase[j]) * z;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::blade_product;
    use proptest::prelude::*;

    fn gi(re: i64, im: i64) -> Gaussian {
        Gaussian::from_ints(re, im)
    }

    #[test]
    fn kronecker_examples() {
        let id = CMatrix::identity(2);
        assert_eq!(kronecker(&id, &id), CMatrix::identity(4));
        let d = kronecker(&g1(), &id);
        for i in 0..4 {
            assert_eq!(d.get(i, i), if i < 2 { gi(0, 1) } else { gi(0, -1) });
        }
        assert_eq!(d.nnz(), 4);
    }

    #[test]
    fn small_kappa() {
        let k2 = build_kappa(2).unwrap();
        assert_eq!(k2.gens(), &[g1(), g2()]);
        let k3 = build_kappa(3).unwrap();
        assert_eq!(k3.gen(3).unwrap(), &t_matrix().scale(&Gaussian::i()));
        let k1 = build_kappa(1).unwrap();
        assert_eq!(k1.dim(), 1);
        assert_eq!(k1.gen(1).unwrap().get(0, 0), Gaussian::i());
    }

    #[test]
    fn relations() {
        for n in 1..=9 {
            assert!(verify_clifford_relations(&build_kappa(n).unwrap()), "n = {n}");
        }
        let mut gens = build_kappa(4).unwrap().gens().to_vec();
        gens[0] = CMatrix::identity(4);
        assert!(!verify_clifford_relations(&SpinorRep::from_gens(4, gens).unwrap()));
    }

    #[test]
    fn skew_hermitian_generators() {
        let rep = build_kappa(7).unwrap();
        for g in rep.gens() {
            assert_eq!(g.adjoint(), g.neg());
        }
    }

    #[test]
    fn action_examples() {
        assert_eq!(clifford_action_sign(1, &[1], 2).unwrap(), (gi(0, 1), vec![-1]));
        assert_eq!(clifford_action_sign(1, &[-1], 2).unwrap(), (gi(0, 1), vec![1]));
        assert_eq!(clifford_action_sign(2, &[1], 2).unwrap(), (gi(1, 0), vec![-1]));
        assert_eq!(clifford_action_sign(3, &[1], 3).unwrap(), (gi(0, -1), vec![1]));
        assert_eq!(clifford_action_sign(3, &[-1], 3).unwrap(), (gi(0, 1), vec![-1]));
        assert!(clifford_action_sign(4, &[1], 3).is_err());
        for n in [2, 5, 7] {
            assert!(cross_check_action(n).unwrap());
        }
    }

    #[test]
    fn basis_is_orthogonal() {
        let k = 3;
        for a in 0..8 {
            for b in 0..8 {
                let h = hermitian(
                    &spinor_basis_vector(&index_sign_vector(k, a)),
                    &spinor_basis_vector(&index_sign_vector(k, b)),
                );
                assert_eq!(h, Complex::new(if a == b { 8 } else { 0 }, 0));
            }
        }
    }

    #[test]
    fn monomial_round_trip() {
        let rep = build_kappa(6).unwrap();
        for g in rep.gens() {
            let m = PhaseMonomial::from_matrix(g).unwrap();
            assert_eq!(&m.to_matrix(), g);
        }
        let a = PhaseMonomial::from_matrix(&rep.gens()[0]).unwrap();
        let b = PhaseMonomial::from_matrix(&rep.gens()[3]).unwrap();
        assert_eq!(a.compose(&b).to_matrix(), rep.gens()[0].mul(&rep.gens()[3]).unwrap());
    }

    proptest! {
        #[test]
        fn kappa_is_multiplicative(n in 2usize..=8, a in any::<u32>(), b in any::<u32>()) {
            let mask = (1u32 << n) - 1;
            let (a, b) = (a & mask, b & mask);
            let (a, b) = (Blade::from_bits(n, a).unwrap(), Blade::from_bits(n, b).unwrap());
            prop_assume!(a.is_even() && b.is_even());
            let rep = build_kappa(n).unwrap();
            let (sign, ab) = blade_product(a, b).unwrap();
            let lhs = rep.blade(a).unwrap().mul(&rep.blade(b).unwrap()).unwrap();
            let rhs = rep.blade(ab).unwrap().scale(&Gaussian::from_ints(i64::from(sign), 0));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mixed_product(entries in proptest::collection::vec(-3i64..=3, 32)) {
            let mk = |o: usize| gm([
                [(entries[o], entries[o + 1]), (entries[o + 2], entries[o + 3])],
                [(entries[o + 4], entries[o + 5]), (entries[o + 6], entries[o + 7])],
            ]);
            let (a, b, c, d) = (mk(0), mk(8), mk(16), mk(24));
            let lhs = kronecker(&a, &b).mul(&kronecker(&c, &d)).unwrap();
            let rhs = kronecker(&a.mul(&c).unwrap(), &b.mul(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
