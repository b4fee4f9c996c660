//! Real and quaternionic structures on `Δ_n`, and the real irreducible
//! `Cl⁰_r`-modules `Δ̃_r` cut out of a (possibly larger) complex spinor module.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex;
use num_traits::Zero;

use crate::blade::{spin_pairs, Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::scalar::{frac, q, Gaussian, Rational, Ring};
use crate::sparse::{QMatrix, SparseMatrix};
use crate::spinor::{
    build_kappa, hermitian, index_sign_vector, spinor_basis_vector, CMatrix, PhaseMonomial, SpinorRep, ZVec,
};

/// Largest `r` accepted by [`build_real_form`].
pub const MAX_REAL_R: usize = 16;

/// Dimension of a real irreducible `Cl⁰_r`-module.
pub fn d_dim(r: usize) -> Result<usize> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let h = r / 2;
    let exp = match r % 8 {
        1 | 7 => h,
        2 | 4 | 6 => h,
        3 | 5 => h + 1,
        _ => h - 1,
    };
    Ok(1 << exp)
}

/// Number of inequivalent real irreducible `Cl⁰_r`-modules.
pub fn v_count(r: usize) -> Result<usize> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    Ok(if r.is_multiple_of(4) { 2 } else { 1 })
}

/// `v ↦ mat · conj(v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AntilinearMap {
    mat: CMatrix,
}

impl AntilinearMap {
    pub fn new(mat: CMatrix) -> Self {
        AntilinearMap { mat }
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    /// Quaternionic structure `(z1, z2) ↦ (-conj z2, conj z1)` on `C^2`.
    pub fn alpha() -> Self {
        let m = |a| Gaussian::from_ints(a, 0);
        AntilinearMap::new(SparseMatrix::from_dense(&[vec![m(0), m(-1)], vec![m(1), m(0)]]))
    }

    /// Complex conjugation on `C^2`.
    pub fn beta() -> Self {
        AntilinearMap::new(CMatrix::identity(2))
    }

    /// Plain conjugation on `C^dim`.
    pub fn conjugation(dim: usize) -> Self {
        AntilinearMap::new(CMatrix::identity(dim))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        AntilinearMap::new(self.mat.kron(&other.mat))
    }

    /// `self ∘ other`, a linear map: `self.mat · conj(other.mat)`.
    pub fn compose(&self, other: &Self) -> Result<CMatrix> {
        self.mat.mul(&other.mat.conj())
    }

    pub fn square(&self) -> Result<CMatrix> {
        self.compose(self)
    }

    /// `+1` when the square is `Id`, `-1` when it is `-Id`.
    pub fn square_sign(&self) -> Result<i8> {
        let sq = self.square()?;
        let dim = self.mat.rows();
        if sq == CMatrix::identity(dim) {
            Ok(1)
        } else if sq == CMatrix::scalar(dim, Gaussian::from_ints(-1, 0)) {
            Ok(-1)
        } else {
            Err(Error::VerificationFailed("square of antilinear map is not ±Id".into()))
        }
    }

    pub fn apply(&self, v: &[Gaussian]) -> Vec<Gaussian> {
        let c: Vec<Gaussian> = v.iter().map(|z| z.conj()).collect();
        self.mat.mul_vec(&c)
    }

    fn monomial(&self) -> Result<PhaseMonomial> {
        PhaseMonomial::from_matrix(&self.mat)
            .ok_or_else(|| Error::InvalidArgument("antilinear map is not a phase monomial".into()))
    }
}

fn apply_antilinear(m: &PhaseMonomial, v: &[Complex<i64>]) -> ZVec {
    let c: ZVec = v.iter().map(|z| z.conj()).collect();
    m.apply(&c)
}

/// `γ_n` on `Δ_n = (C^2)^{⊗⌊n/2⌋}` by the residue of `n` mod 8.
///
/// For `n = 1` the empty tensor product leaves plain conjugation on `C`.
pub fn build_gamma(n: usize) -> Result<AntilinearMap> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let (a, b) = (AntilinearMap::alpha(), AntilinearMap::beta());
    let ab = a.tensor(&b);
    let ba = b.tensor(&a);
    let power = |m: &AntilinearMap, e: usize| (0..e).fold(AntilinearMap::conjugation(1), |acc, _| acc.tensor(m));
    let q = n / 8;
    Ok(match n % 8 {
        0 | 1 => power(&ab, 2 * q),
        2 | 3 => a.tensor(&power(&ba, 2 * q)),
        4 | 5 => power(&ab, 2 * q + 1),
        _ => a.tensor(&power(&ba, 2 * q + 1)),
    })
}

/// Checks the Hermitian identities of `γ_n` on the standard basis and that
/// `γ_n` commutes with every `κ(e_ie_j)`.
///
/// The identities checked are `<γv, γw> = conj<v, w>` and
/// `<γv, w> = s·conj<v, γw>` with `s = ±1` the sign of `γ^2`. The second one
/// picks up `s = -1` for quaternionic structures: already for `α` on `C^2`,
/// `v = (1, 0)` and `w = (0, 1)` give `<αv, w> = 1` and `<v, αw> = -1`.
pub fn gamma_equivariance_check(n: usize) -> Result<bool> {
    gamma_equivariance_check_with(n, &build_gamma(n)?)
}

/// [`gamma_equivariance_check`] for an arbitrary candidate map.
pub fn gamma_equivariance_check_with(n: usize, gamma: &AntilinearMap) -> Result<bool> {
    let kappa = build_kappa(n)?;
    let dim = kappa.dim();
    if gamma.mat.rows() != dim || gamma.mat.cols() != dim {
        return Err(Error::DimensionMismatch { left: gamma.mat.rows(), right: dim });
    }
    let s = match gamma.square_sign() {
        Ok(s) => Gaussian::from_ints(i64::from(s), 0),
        Err(_) => return Ok(false),
    };
    let m = gamma.mat.to_dense();
    let herm = |v: &[Gaussian], w: &[Gaussian]| v.iter().zip(w).fold(Gaussian::zero(), |acc, (a, b)| acc.add(&a.mul(&b.conj())));
    let unit = |a: usize| -> Vec<Gaussian> { (0..dim).map(|j| if j == a { Gaussian::one() } else { Gaussian::zero() }).collect() };
    let images: Vec<Vec<Gaussian>> = (0..dim).map(|a| (0..dim).map(|i| m[i][a].clone()).collect()).collect();
    for a in 0..dim {
        for b in 0..dim {
            let (ua, ub) = (unit(a), unit(b));
            if herm(&images[a], &ub) != herm(&ua, &images[b]).conj().mul(&s) {
                return Ok(false);
            }
            if herm(&images[a], &images[b]) != herm(&ua, &ub).conj() {
                return Ok(false);
            }
        }
    }
    for (i, j) in spin_pairs(n) {
        let g = kappa.blade(Blade::new(n, &[i, j])?)?;
        if gamma.mat.mul(&g.conj())? != g.mul(&gamma.mat)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Δ̃_r^+` or `Δ̃_r^-`, defined when `r ≡ 0 (mod 4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Plus,
    Minus,
}

impl Label {
    pub fn sign(self) -> i64 {
        match self {
            Label::Plus => 1,
            Label::Minus => -1,
        }
    }
}

/// Whether the ambient spinor module had to be enlarged past a quaternionic
/// structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    Real,
    QuaternionicAmbient,
}

/// Ambient Clifford dimension used for `Δ̃_r`.
pub fn ambient_dim(r: usize) -> usize {
    match r % 8 {
        1 | 2 | 7 => r,
        6 | 0 => r + 1,
        5 => r + 2,
        _ => r + 3,
    }
}

/// A real basis of `Δ̃_r` inside `Δ_ambient`.
///
/// Basis vectors have Gaussian-integer coordinates, are pairwise orthogonal
/// for the Hermitian form and share the same squared norm.
#[derive(Clone, Debug)]
pub struct RealForm {
    r: usize,
    ambient: usize,
    label: Option<Label>,
    kind: FormKind,
    basis: Vec<ZVec>,
    /// Basis vectors keyed by their entries.
    lookup: BTreeMap<Vec<(i64, i64)>, usize>,
    norm: i64,
    kappa: SpinorRep,
    gamma: AntilinearMap,
}

/// Flips `v` so its first nonzero entry is positive; reports whether it did.
fn canonical_sign(v: &mut ZVec) -> bool {
    if let Some(z) = v.iter().find(|z| !z.is_zero()) {
        if z.re < 0 || (z.re == 0 && z.im < 0) {
            for x in v.iter_mut() {
                *x = -*x;
            }
            return true;
        }
    }
    false
}

fn key(v: &[Complex<i64>]) -> Vec<(i64, i64)> {
    v.iter().map(|z| (z.re, z.im)).collect()
}

/// Builds `Δ̃_r` (or `Δ̃_r^±`) by sweeping `v ∈ {u_ε, i·u_ε}`, forming
/// `v + γ(v)`, applying the volume projector when the residue needs it, and
/// greedily keeping pairwise orthogonal results.
///
/// For `r ≡ 2 (mod 8)` only `u_ε` in the `+i` eigenspace of `e_1...e_r` are
/// swept; otherwise `γ` being quaternionic makes the span all of `Δ_r`.
pub fn build_real_form(r: usize, label: Option<Label>) -> Result<RealForm> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if r > MAX_REAL_R {
        return Err(Error::TooLarge { n: r, max: MAX_REAL_R });
    }
    if r.is_multiple_of(4) != label.is_some() {
        return Err(Error::InvalidArgument(format!("label must be given iff r ≡ 0 mod 4 (r = {r})")));
    }
    let ambient = ambient_dim(r);
    let kind = if matches!(r % 8, 3..=5) { FormKind::QuaternionicAmbient } else { FormKind::Real };
    let kappa = build_kappa(ambient)?;
    let gamma = build_gamma(ambient)?;
    let gm = gamma.monomial()?;
    let omega = kappa.blade_monomial(Blade::volume(ambient, r)?)?;
    let projector_sign = match r % 8 {
        3 => Some(1),
        0 | 4 => label.map(Label::sign),
        _ => None,
    };
    let chirality = r % 8 == 2;
    let k = kappa.k();
    let target = d_dim(r)?;

    let mut basis: Vec<ZVec> = Vec::new();
    let mut norm = 0i64;
    for idx in 0..kappa.dim() {
        let u = spinor_basis_vector(&index_sign_vector(k, idx));
        if chirality && omega.apply(&u) != u.iter().map(|z| z * Complex::new(0, 1)).collect::<ZVec>() {
            continue;
        }
        for c in [Complex::new(1, 0), Complex::new(0, 1)] {
            let v: ZVec = u.iter().map(|z| z * c).collect();
            let g = apply_antilinear(&gm, &v);
            let mut w: ZVec = v.iter().zip(&g).map(|(a, b)| a + b).collect();
            if let Some(s) = projector_sign {
                let ow = omega.apply(&w);
                w = w.iter().zip(&ow).map(|(a, b)| a + b * s).collect();
            }
            if w.iter().all(|z| z.is_zero()) {
                continue;
            }
            canonical_sign(&mut w);
            if basis.iter().all(|b| hermitian(&w, b).is_zero()) {
                let nw = hermitian(&w, &w).re;
                if basis.is_empty() {
                    norm = nw;
                } else if nw != norm {
                    return Err(Error::VerificationFailed(format!("unequal norms in real basis for r = {r}")));
                }
                basis.push(w);
            }
        }
    }
    if basis.len() != target {
        return Err(Error::VerificationFailed(format!(
            "real basis for r = {r} has {} vectors, expected {target}",
            basis.len()
        )));
    }
    let lookup = basis.iter().enumerate().map(|(i, b)| (key(b), i)).collect();
    Ok(RealForm { r, ambient, label, kind, basis, lookup, norm, kappa, gamma })
}

impl RealForm {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ZVec] {
        &self.basis
    }

    /// Common squared norm of the basis vectors.
    pub fn norm(&self) -> i64 {
        self.norm
    }

    pub fn kappa(&self) -> &SpinorRep {
        &self.kappa
    }

    pub fn gamma(&self) -> &AntilinearMap {
        &self.gamma
    }

    /// Whether every Hermitian pairing of basis vectors is real.
    pub fn pairings_are_real(&self) -> bool {
        self.basis.iter().all(|a| self.basis.iter().all(|b| hermitian(a, b).im == 0))
    }

    /// Whether every basis vector is fixed by `γ`; expected whenever the
    /// ambient `γ` is real, i.e. for every residue except `r ≡ 2 (mod 8)`.
    pub fn basis_is_gamma_fixed(&self) -> Result<bool> {
        let gm = self.gamma.monomial()?;
        Ok(self.basis.iter().all(|b| apply_antilinear(&gm, b) == *b))
    }

    /// Real coordinates of a vector lying in the span of the basis, as
    /// integer numerators over [`RealForm::norm`].
    pub fn coordinates(&self, y: &[Complex<i64>]) -> Result<Vec<i64>> {
        let mut nums = Vec::with_capacity(self.dim());
        let mut recon = vec![Complex::new(0i64, 0); y.len()];
        for b in &self.basis {
            let h = hermitian(y, b);
            if h.im != 0 {
                return Err(Error::NotReal(format!("pairing {h} in the real form of r = {}", self.r)));
            }
            for (acc, z) in recon.iter_mut().zip(b) {
                *acc += z * h.re;
            }
            nums.push(h.re);
        }
        let scaled: ZVec = y.iter().map(|z| z * self.norm).collect();
        if scaled != recon {
            return Err(Error::NotInvariant(format!("vector leaves the real form of r = {}", self.r)));
        }
        Ok(nums)
    }

    /// Matrix of a phase monomial acting on the real basis; entry `(d, c)` is
    /// the coefficient of basis vector `d` in the image of basis vector `c`.
    pub fn monomial_matrix(&self, m: &PhaseMonomial) -> Result<QMatrix> {
        let dim = self.dim();
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
        for (c, b) in self.basis.iter().enumerate() {
            let mut y = m.apply(b);
            let negated = canonical_sign(&mut y);
            if let Some(&d) = self.lookup.get(&key(&y)) {
                rows[d].push((c, q(if negated { -1 } else { 1 })));
                continue;
            }
            for (d, num) in self.coordinates(&m.apply(b))?.into_iter().enumerate() {
                if num != 0 {
                    rows[d].push((c, frac(num, self.norm)));
                }
            }
        }
        Ok(SparseMatrix::from_rows(dim, dim, rows))
    }

    pub fn blade_matrix(&self, b: Blade) -> Result<QMatrix> {
        self.monomial_matrix(&self.kappa.blade_monomial(b)?)
    }
}

/// `Δ̃_r` as an explicit real representation.
#[derive(Clone, Debug)]
pub struct RealRep {
    form: RealForm,
    spin_mats: Vec<QMatrix>,
}

/// Expresses every `κ(e_ie_j)`, `i < j ≤ r`, in the real basis.
pub fn realize_rep(form: RealForm) -> Result<RealRep> {
    let n = form.ambient;
    let spin_mats = spin_pairs(form.r)
        .into_iter()
        .map(|(i, j)| form.blade_matrix(Blade::new(n, &[i, j])?))
        .collect::<Result<Vec<_>>>()?;
    Ok(RealRep { form, spin_mats })
}

impl RealRep {
    pub fn r(&self) -> usize {
        self.form.r
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn label(&self) -> Option<Label> {
        self.form.label
    }

    pub fn form(&self) -> &RealForm {
        &self.form
    }

    /// Images of `e_ie_j` in lexicographic pair order.
    pub fn spin_mats(&self) -> &[QMatrix] {
        &self.spin_mats
    }

    /// Action of a blade of the ambient Clifford algebra.
    pub fn blade_action(&self, b: Blade) -> Result<QMatrix> {
        self.form.blade_matrix(b)
    }

    pub fn element_action(&self, x: &CliffordElement) -> Result<QMatrix> {
        let dim = self.dim();
        let mut acc = QMatrix::zeros(dim, dim);
        for (b, c) in x.terms() {
            acc = acc.add(&self.blade_action(*b)?.scale(c))?;
        }
        Ok(acc)
    }
}

/// Matrix of `e_1 ... e_r` on `Δ̃_r`.
pub fn volume_action(rep: &RealRep) -> Result<QMatrix> {
    rep.blade_action(Blade::volume(rep.form.ambient, rep.r())?)
}

/// `P_± = (1 ± ω)/2` for the volume `ω = e_1...e_r` acting on `Δ_n`.
///
/// Requires `ω^2 = +1`, which holds for `r ≡ 0, 3 (mod 4)`.
pub fn volume_projectors(r: usize, n: usize) -> Result<(CMatrix, CMatrix)> {
    let kappa = build_kappa(n)?;
    let w = kappa.blade(Blade::volume(n, r)?)?;
    let id = CMatrix::identity(kappa.dim());
    if w.mul(&w)? != id {
        return Err(Error::InvalidArgument(format!("volume of Cl_{r} does not square to +1")));
    }
    let half = Gaussian::real(frac(1, 2));
    Ok((id.add(&w)?.scale(&half), id.sub(&w)?.scale(&half)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn minus_id(d: usize) -> QMatrix {
        QMatrix::scalar(d, q(-1))
    }

    #[test]
    fn dimension_table() {
        let expect = [1, 2, 4, 4, 8, 8, 8, 8, 16, 32, 64, 64, 128, 128, 128, 128];
        for (r, &d) in (1..=16).zip(expect.iter()) {
            assert_eq!(d_dim(r).unwrap(), d, "r = {r}");
        }
        assert_eq!(v_count(4).unwrap(), 2);
        assert_eq!(v_count(6).unwrap(), 1);
        assert_eq!(v_count(8).unwrap(), 2);
        assert!(d_dim(0).is_err());
    }

    #[test]
    fn gamma_squares() {
        for n in 1..=11 {
            let expect = if matches!(n % 8, 0 | 1 | 6 | 7) { 1 } else { -1 };
            assert_eq!(build_gamma(n).unwrap().square_sign().unwrap(), expect, "n = {n}");
        }
        assert_eq!(AntilinearMap::alpha().square_sign().unwrap(), -1);
        assert_eq!(AntilinearMap::beta().square_sign().unwrap(), 1);
    }

    #[test]
    fn gamma_is_equivariant() {
        for n in [2, 3, 4, 7, 9] {
            assert!(gamma_equivariance_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn plain_conjugation() {
        // κ(e_1e_2) is a real matrix for n = 2, so conjugation alone commutes
        // with spin(2); from n = 3 on it no longer does.
        assert!(gamma_equivariance_check_with(2, &AntilinearMap::conjugation(2)).unwrap());
        assert!(!gamma_equivariance_check_with(3, &AntilinearMap::conjugation(2)).unwrap());
        assert!(!gamma_equivariance_check_with(4, &AntilinearMap::conjugation(4)).unwrap());
    }

    #[test]
    fn form_shapes() {
        let f7 = build_real_form(7, None).unwrap();
        assert_eq!((f7.ambient(), f7.dim(), f7.kind()), (7, 8, FormKind::Real));
        let f4 = build_real_form(4, Some(Label::Plus)).unwrap();
        assert_eq!((f4.ambient(), f4.dim(), f4.kind()), (7, 4, FormKind::QuaternionicAmbient));
        let f6 = build_real_form(6, None).unwrap();
        assert_eq!((f6.ambient(), f6.dim()), (7, 8));
        assert!(build_real_form(4, None).is_err());
        assert!(build_real_form(5, Some(Label::Minus)).is_err());
    }

    #[test]
    fn spin_matrices_are_complex_structures() {
        for r in 1..=9 {
            let labels: &[Option<Label>] = if r % 4 == 0 { &[Some(Label::Plus), Some(Label::Minus)] } else { &[None] };
            for &l in labels {
                let form = build_real_form(r, l).unwrap();
                assert!(form.pairings_are_real());
                if r % 8 != 2 {
                    assert!(form.basis_is_gamma_fixed().unwrap());
                }
                let rep = realize_rep(form).unwrap();
                assert_eq!(rep.dim(), d_dim(r).unwrap());
                for x in rep.spin_mats() {
                    assert!(x.is_antisymmetric());
                    assert_eq!(x.mul(x).unwrap(), minus_id(rep.dim()));
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        let r2 = realize_rep(build_real_form(2, None).unwrap()).unwrap();
        assert_eq!(r2.dim(), 2);
        let x = &r2.spin_mats()[0];
        assert!(x.is_antisymmetric() && x.get(0, 0) == q(0));

        let r3 = realize_rep(build_real_form(3, None).unwrap()).unwrap();
        let m = r3.spin_mats();
        // e12 e13 = e23 in Cl_3
        assert_eq!(m[0].mul(&m[1]).unwrap(), m[2]);
    }

    #[test]
    fn volume_actions() {
        for r in [2, 6, 10] {
            let rep = realize_rep(build_real_form(r, None).unwrap()).unwrap();
            let j = volume_action(&rep).unwrap();
            assert!(j.is_antisymmetric());
            assert_eq!(j.mul(&j).unwrap(), minus_id(rep.dim()));
        }
        for (r, l) in [(4, Label::Plus), (4, Label::Minus), (8, Label::Plus), (8, Label::Minus)] {
            let rep = realize_rep(build_real_form(r, Some(l)).unwrap()).unwrap();
            assert_eq!(volume_action(&rep).unwrap(), QMatrix::scalar(rep.dim(), q(l.sign())));
        }
    }

    #[test]
    fn projector_identities() {
        for (r, n) in [(4, 7), (8, 9), (3, 6)] {
            let (p, m) = volume_projectors(r, n).unwrap();
            let d = p.rows();
            assert_eq!(p.mul(&p).unwrap(), p);
            assert_eq!(m.mul(&m).unwrap(), m);
            assert!(p.mul(&m).unwrap().is_zero());
            assert_eq!(p.add(&m).unwrap(), CMatrix::identity(d));
        }
        assert!(volume_projectors(2, 2).is_err());
    }
}
