//! Representations of `spin(r)` built from `Δ̃_r`: tensor and symmetric
//! powers, exterior powers of the vector representation, fixed-point and
//! isotypic multiplicities, and the Clifford pairing `Φ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::blade::{chain_positions, spin_pairs, Blade, CliffordElement};
use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::real_form::{build_real_form, d_dim, realize_rep, Label, RealForm, RealRep};
use crate::scalar::{frac, q, Rational};
use crate::sparse::{normalize, QMatrix, SparseMatrix, SparseVec};

/// Exact matrices for the generators `e_ie_j` (`i < j ≤ r`, lexicographic).
#[derive(Clone, Debug, PartialEq)]
pub struct LinearRep {
    r: usize,
    dim: usize,
    gens: Vec<QMatrix>,
}

impl LinearRep {
    pub fn new(r: usize, dim: usize, gens: Vec<QMatrix>) -> Result<Self> {
        let expect = r * r.saturating_sub(1) / 2;
        if gens.len() != expect {
            return Err(Error::DimensionMismatch { left: gens.len(), right: expect });
        }
        if let Some(g) = gens.iter().find(|g| g.rows() != dim || g.cols() != dim) {
            return Err(Error::DimensionMismatch { left: g.rows(), right: dim });
        }
        Ok(LinearRep { r, dim, gens })
    }

    pub fn from_real_rep(rep: &RealRep) -> Self {
        LinearRep { r: rep.r(), dim: rep.dim(), gens: rep.spin_mats().to_vec() }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[QMatrix] {
        &self.gens
    }

    /// Restriction to `spin(s) ⊂ spin(r)`, keeping pairs with `j ≤ s`.
    pub fn restrict(&self, s: usize) -> Result<Self> {
        if s > self.r {
            return Err(Error::InvalidArgument(format!("cannot restrict spin({}) to spin({s})", self.r)));
        }
        let gens = spin_pairs(self.r)
            .into_iter()
            .zip(&self.gens)
            .filter(|((_, j), _)| *j <= s)
            .map(|(_, g)| g.clone())
            .collect();
        LinearRep::new(s, self.dim, gens)
    }

    fn same_r(&self, other: &Self) -> Result<()> {
        if self.r != other.r {
            return Err(Error::DimensionMismatch { left: self.r, right: other.r });
        }
        Ok(())
    }
}

/// `Δ̃_r` (or `Δ̃_r^±`) as a [`LinearRep`].
pub fn spinor_rep(r: usize, label: Option<Label>) -> Result<LinearRep> {
    Ok(LinearRep::from_real_rep(&realize_rep(build_real_form(r, label)?)?))
}

/// `X ↦ X ⊗ Id_m`; index `a·m + i` for spinor index `a` and copy `i`.
pub fn tensor_with_trivial(rep: &LinearRep, m: usize) -> Result<LinearRep> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let id = QMatrix::identity(m);
    LinearRep::new(rep.r, rep.dim * m, rep.gens.iter().map(|g| g.kron(&id)).collect())
}

/// Block-diagonal `A ⊕ B`.
pub fn direct_sum(a: &LinearRep, b: &LinearRep) -> Result<LinearRep> {
    a.same_r(b)?;
    LinearRep::new(a.r, a.dim + b.dim, a.gens.iter().zip(&b.gens).map(|(x, y)| x.direct_sum(y)).collect())
}

/// `X ⊗ Id + Id ⊗ Y`, materialized.
pub fn tensor_product(a: &LinearRep, b: &LinearRep) -> Result<LinearRep> {
    a.same_r(b)?;
    let (ia, ib) = (QMatrix::identity(a.dim), QMatrix::identity(b.dim));
    let gens = a
        .gens
        .iter()
        .zip(&b.gens)
        .map(|(x, y)| x.kron(&ib).add(&ia.kron(y)))
        .collect::<Result<Vec<_>>>()?;
    LinearRep::new(a.r, a.dim * b.dim, gens)
}

fn pair_index(d: usize) -> BTreeMap<(usize, usize), usize> {
    let mut idx = BTreeMap::new();
    for a in 0..d {
        for b in a + 1..d {
            let n = idx.len();
            idx.insert((a, b), n);
        }
    }
    idx
}

/// Derivation action on `Λ²V`, basis `v_a ∧ v_b` (`a < b`, lexicographic).
pub fn exterior_square(rep: &LinearRep) -> Result<LinearRep> {
    let d = rep.dim;
    let idx = pair_index(d);
    let dim = idx.len();
    let mut gens = Vec::with_capacity(rep.gens.len());
    for g in &rep.gens {
        let gt = g.transpose();
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
        for (&(a, b), &c) in &idx {
            // X(v_a ∧ v_b) = X v_a ∧ v_b + v_a ∧ X v_b
            for (x, v) in gt.row(a) {
                push_wedge(&idx, &mut cols[c], *x, b, v.clone());
            }
            for (x, v) in gt.row(b) {
                push_wedge(&idx, &mut cols[c], a, *x, v.clone());
            }
        }
        gens.push(from_columns(dim, cols));
    }
    LinearRep::new(rep.r, dim, gens)
}

fn push_wedge(idx: &BTreeMap<(usize, usize), usize>, col: &mut Vec<(usize, Rational)>, a: usize, b: usize, v: Rational) {
    if a == b {
        return;
    }
    if a < b {
        col.push((idx[&(a, b)], v));
    } else {
        col.push((idx[&(b, a)], -v));
    }
}

fn from_columns(dim: usize, cols: Vec<Vec<(usize, Rational)>>) -> QMatrix {
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
    for (c, col) in cols.into_iter().enumerate() {
        for (r, v) in col {
            rows[r].push((c, v));
        }
    }
    SparseMatrix::from_rows(dim, dim, rows)
}

/// Action `S ↦ XS - SX` on trace-free symmetric matrices.
///
/// Basis: `E_ab + E_ba` for `a < b` (lexicographic), then
/// `D_a = E_aa - E_{d-1,d-1}` for `a < d - 1`.
pub fn sym0_square(rep: &LinearRep) -> Result<LinearRep> {
    let d = rep.dim;
    if d == 0 {
        return LinearRep::new(rep.r, 0, rep.gens.clone());
    }
    let idx = pair_index(d);
    let off = idx.len();
    let dim = off + d - 1;
    let basis: Vec<Vec<(usize, usize, Rational)>> = idx
        .keys()
        .map(|&(a, b)| vec![(a, b, q(1)), (b, a, q(1))])
        .chain((0..d - 1).map(|a| vec![(a, a, q(1)), (d - 1, d - 1, q(-1))]))
        .collect();
    let mut gens = Vec::with_capacity(rep.gens.len());
    for g in &rep.gens {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
        let gt = g.transpose();
        for (c, s) in basis.iter().enumerate() {
            // entries of XS - SX as (row, col, value)
            let mut ent: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
            for (i, j, v) in s {
                for (x, gv) in gt.row(*i) {
                    *ent.entry((*x, *j)).or_insert_with(Rational::zero) += gv * v;
                }
                // (S X)_{iy} = S_{ij} X_{jy}
                for (y, gv) in g.row(*j) {
                    *ent.entry((*i, *y)).or_insert_with(Rational::zero) -= v * gv;
                }
            }
            for ((a, b), v) in ent {
                if v.is_zero() {
                    continue;
                }
                if a < b {
                    cols[c].push((idx[&(a, b)], v));
                } else if a == b && a < d - 1 {
                    cols[c].push((off + a, v));
                }
            }
        }
        gens.push(from_columns(dim, cols));
    }
    LinearRep::new(rep.r, dim, gens)
}

/// `k`-subsets of `{1..r}` as bit masks, in increasing numeric order.
pub fn subsets(r: usize, k: usize) -> Vec<u32> {
    (0u32..(1u32 << r)).filter(|m| m.count_ones() as usize == k).collect()
}

/// `spin(r)` on `Λ^k R^r`; `e_ie_j` maps `e_i ↦ 2e_j`, `e_j ↦ -2e_i`.
///
/// This scaling matches the Clifford commutator `[e_ie_j, e_i] = 2e_j`.
pub fn lambda_k_rep(r: usize, k: usize) -> Result<LinearRep> {
    if k > r {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds r = {r}")));
    }
    if r > 20 {
        return Err(Error::TooLarge { n: r, max: 20 });
    }
    let sets = subsets(r, k);
    let pos: BTreeMap<u32, usize> = sets.iter().enumerate().map(|(p, &m)| (m, p)).collect();
    let dim = sets.len();
    let mut gens = Vec::new();
    for (i, j) in spin_pairs(r) {
        let (bi, bj) = (1u32 << (i - 1), 1u32 << (j - 1));
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
        for (c, &m) in sets.iter().enumerate() {
            let (has_i, has_j) = (m & bi != 0, m & bj != 0);
            if has_i == has_j {
                continue;
            }
            // indices strictly between i and j change the sorting sign
            let between = (m & (bj - 1) & !(bi | (bi - 1))).count_ones();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            let (target, value) = if has_i { (m ^ bi ^ bj, 2 * sign) } else { (m ^ bi ^ bj, -2 * sign) };
            cols[c].push((pos[&target], q(value)));
        }
        gens.push(from_columns(dim, cols));
    }
    LinearRep::new(r, dim, gens)
}

/// Checks `[ρ(a), ρ(b)] = ρ([a, b])` for all pairs of generators, with the
/// bracket computed in the Clifford algebra.
pub fn verify_representation(rep: &LinearRep) -> Result<bool> {
    let r = rep.r;
    let pairs = spin_pairs(r);
    let pos: BTreeMap<u32, usize> = pairs
        .iter()
        .enumerate()
        .map(|(p, &(i, j))| ((1u32 << (i - 1)) | (1u32 << (j - 1)), p))
        .collect();
    let elems: Vec<CliffordElement> = pairs
        .iter()
        .map(|&(i, j)| Ok(CliffordElement::blade(Blade::new(r, &[i, j])?)))
        .collect::<Result<_>>()?;
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let br = elems[a].commutator(&elems[b])?;
            let mut expect = QMatrix::zeros(rep.dim, rep.dim);
            for (blade, c) in br.terms() {
                let p = pos.get(&blade.bits()).ok_or_else(|| {
                    Error::VerificationFailed(format!("bracket leaves spin({r}): {blade}"))
                })?;
                expect = expect.add(&rep.gens[*p].scale(c))?;
            }
            if rep.gens[a].commutator(&rep.gens[b])? != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lazy derivation action on `A_1 ⊗ ... ⊗ A_s` (first factor most
/// significant); rows are produced on demand and never stored together.
#[derive(Clone, Debug)]
pub struct TensorView<'a> {
    factors: Vec<&'a LinearRep>,
    strides: Vec<usize>,
    dim: usize,
    r: usize,
}

impl<'a> TensorView<'a> {
    pub fn new(factors: &[&'a LinearRep]) -> Result<Self> {
        let r = factors.first().map_or(0, |f| f.r);
        if let Some(f) = factors.iter().find(|f| f.r != r) {
            return Err(Error::DimensionMismatch { left: f.r, right: r });
        }
        let mut strides = vec![1; factors.len()];
        for t in (0..factors.len().saturating_sub(1)).rev() {
            strides[t] = strides[t + 1] * factors[t + 1].dim;
        }
        let dim = factors.iter().map(|f| f.dim).product();
        Ok(TensorView { factors: factors.to_vec(), strides, dim, r })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row `i` of generator `g` acting on the tensor product.
    pub fn row(&self, g: usize, i: usize) -> SparseVec<Rational> {
        let mut out = Vec::new();
        for (t, f) in self.factors.iter().enumerate() {
            let s = self.strides[t];
            let it = (i / s) % f.dim;
            let base = i - it * s;
            for (j, v) in f.gens[g].row(it) {
                out.push((base + j * s, v.clone()));
            }
        }
        normalize(out)
    }

    /// Dimension of the common kernel of all generators.
    ///
    /// Only the chain `e_ie_{i+1}` is imposed: a vector killed by those is
    /// killed by their brackets, hence by all of `spin(r)`.
    pub fn trivial_multiplicity(&self) -> usize {
        if self.factors.is_empty() {
            return 1;
        }
        let mut ech: Echelon<Rational> = Echelon::new(self.dim);
        for g in chain_positions(self.r) {
            for i in 0..self.dim {
                ech.insert(self.row(g, i));
                if ech.nullity() == 0 {
                    return 0;
                }
            }
        }
        ech.nullity()
    }

    /// Basis of the common kernel.
    pub fn invariants(&self) -> Vec<SparseVec<Rational>> {
        let mut ech: Echelon<Rational> = Echelon::new(self.dim);
        for g in chain_positions(self.r) {
            for i in 0..self.dim {
                ech.insert(self.row(g, i));
            }
        }
        ech.nullspace()
    }
}

/// `dim ∩ ker ρ(g)`; for `r = 1` this is the whole dimension.
pub fn trivial_multiplicity(rep: &LinearRep) -> usize {
    TensorView::new(&[rep]).expect("single factor").trivial_multiplicity()
}

/// `dim Hom_spin(source, target_1 ⊗ ... ⊗ target_s)`, as the invariants of
/// `source ⊗ target` (orthogonal representations are self-dual).
pub fn hom_dimension(source: &LinearRep, target: &[&LinearRep]) -> Result<usize> {
    let mut factors = vec![source];
    factors.extend_from_slice(target);
    Ok(TensorView::new(&factors)?.trivial_multiplicity())
}

/// Number of copies of `irrep` in `target_1 ⊗ ... ⊗ target_s`:
/// `dim Hom / dim End`, which must divide exactly.
pub fn multiplicity(irrep: &LinearRep, target: &[&LinearRep]) -> Result<usize> {
    let hom = hom_dimension(irrep, target)?;
    let end = hom_dimension(irrep, &[irrep])?;
    if end == 0 || hom % end != 0 {
        return Err(Error::InexactMultiplicity { hom, end });
    }
    Ok(hom / end)
}

/// Copies of `Λ^k R^r` in the given tensor product.
pub fn isotypic_multiplicity(target: &[&LinearRep], r: usize, k: usize) -> Result<usize> {
    multiplicity(&lambda_k_rep(r, k)?, target)
}

/// Isotypic multiplicities of `Λ^j R^r` for `0 ≤ j ≤ ⌊r/2⌋`.
///
/// `Λ^j` and `Λ^{r-j}` are isomorphic, so entry `j` counts both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub r: usize,
    pub ambient_dim: usize,
    pub entries: Vec<(usize, usize)>,
}

impl MultiplicityTable {
    /// `Σ mult_j · dim Λ^j`.
    pub fn accounted_dim(&self) -> usize {
        self.entries.iter().map(|&(j, m)| m * binomial(self.r, j)).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.accounted_dim() == self.ambient_dim
    }

    pub fn get(&self, j: usize) -> Option<usize> {
        self.entries.iter().find(|e| e.0 == j).map(|e| e.1)
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn decomposition_table(target: &[&LinearRep], r: usize) -> Result<MultiplicityTable> {
    let ambient_dim = target.iter().map(|t| t.dim).product();
    let entries = (0..=r / 2)
        .map(|j| Ok((j, isotypic_multiplicity(target, r, j)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityTable { r, ambient_dim, entries })
}

/// `2⟨e_J·b_a, b_b⟩ / |b|^2` for real-form basis vectors `b_a`, `b_b`; equal
/// to `2^{-k}⟨e_J v, w⟩` when `|b|^2 = 2^{k+1}`.
///
/// For even `|J|` the Hermitian pairing must be real. Odd `|J|` only occurs
/// for `r ≡ 2 (mod 8)`, where `e_J` swaps the two chirality halves and the
/// pairing is purely imaginary; its imaginary part is returned. Either way a
/// component that should vanish but does not is an error.
pub fn phi_pairing(form: &RealForm, j: Blade, a: usize, b: usize) -> Result<Rational> {
    let basis = form.basis();
    if a >= basis.len() || b >= basis.len() {
        return Err(Error::IndexOutOfRange { index: a.max(b), max: basis.len() });
    }
    let y = form.kappa().blade_monomial(j)?.apply(&basis[a]);
    let h = crate::spinor::hermitian(&y, &basis[b]);
    let (value, stray) = if j.is_even() { (h.re, h.im) } else { (h.im, h.re) };
    if stray != 0 {
        return Err(Error::NotReal(format!("Φ pairing for {j} is {h}")));
    }
    Ok(frac(2 * value, form.norm()))
}

/// Degrees `|J|` covered by the `Φ` checks: even ones for `r ≡ ±1 (mod 8)`,
/// all of `0..=r` for `r ≡ 2 (mod 8)`.
pub fn phi_degrees(r: usize) -> Result<Vec<usize>> {
    match r % 8 {
        1 | 7 => Ok((0..=r).step_by(2).collect()),
        2 => Ok((0..=r).collect()),
        _ => Err(Error::InvalidArgument(format!("Φ checks need r ≡ ±1, 2 mod 8, got {r}"))),
    }
}

/// For each degree of the case, finds a blade and basis pair with nonzero
/// pairing.
pub fn phi_surjectivity_check(r: usize) -> Result<bool> {
    let form = build_real_form(r, None)?;
    let n = form.ambient();
    for deg in phi_degrees(r)? {
        let j = Blade::range(n, 1, deg)?;
        let mut hit = false;
        'outer: for a in 0..form.dim() {
            for b in 0..form.dim() {
                if !phi_pairing(&form, j, a, b)?.is_zero() {
                    hit = true;
                    break 'outer;
                }
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `+1` if `Φ_J` is symmetric, `-1` if antisymmetric, by `|J| mod 4`.
///
/// `e_J` is self-adjoint up to `σ = (-1)^{|J|(|J|+1)/2}`; for odd `|J|` the
/// extra factor `i` in [`phi_pairing`] flips that sign.
pub fn expected_phi_symmetry(grade: usize) -> i64 {
    match grade % 4 {
        0 | 1 => 1,
        _ => -1,
    }
}

/// Checks on every basis pair that `Φ_J(a, b) = ±Φ_J(b, a)` with the sign
/// from [`expected_phi_symmetry`]; so the pairing vanishes on antisymmetric
/// tensors in symmetric degrees and on symmetric tensors in the others.
pub fn phi_parity_check(r: usize, blades: &[Blade]) -> Result<bool> {
    let form = build_real_form(r, None)?;
    let allowed = phi_degrees(r)?;
    for &j in blades {
        if !allowed.contains(&j.grade()) {
            return Err(Error::InvalidArgument(format!("degree {} not in the Φ range for r = {r}", j.grade())));
        }
        let s = q(expected_phi_symmetry(j.grade()));
        for a in 0..form.dim() {
            for b in a..form.dim() {
                if phi_pairing(&form, j, a, b)? != &s * phi_pairing(&form, j, b, a)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// One row of the branching table: copies of `Δ̃_{r-1}` (per label) in the
/// restriction of `Δ̃_r` (per label).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingRow {
    pub r: usize,
    pub label: Option<Label>,
    pub restricted_dim: usize,
    pub multiplicities: Vec<(Option<Label>, usize)>,
}

impl BranchingRow {
    pub fn accounted_dim(&self) -> usize {
        let d = d_dim(self.r - 1).unwrap_or(0);
        self.multiplicities.iter().map(|m| m.1 * d).sum()
    }
}

fn labels(r: usize) -> Vec<Option<Label>> {
    if r.is_multiple_of(4) {
        vec![Some(Label::Plus), Some(Label::Minus)]
    } else {
        vec![None]
    }
}

/// Restricts each `Δ̃_r^{(±)}` to `spin(r-1)` and counts the `Δ̃_{r-1}^{(±)}`.
pub fn branching_check(r: usize) -> Result<Vec<BranchingRow>> {
    if r < 2 {
        return Err(Error::InvalidArgument("branching needs r ≥ 2".into()));
    }
    let smaller: Vec<(Option<Label>, LinearRep)> =
        labels(r - 1).into_iter().map(|l| Ok((l, spinor_rep(r - 1, l)?))).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for l in labels(r) {
        let res = spinor_rep(r, l)?.restrict(r - 1)?;
        let multiplicities = smaller
            .iter()
            .map(|(sl, s)| Ok((*sl, multiplicity(s, &[&res])?)))
            .collect::<Result<Vec<_>>>()?;
        rows.push(BranchingRow { r, label: l, restricted_dim: res.dim, multiplicities });
    }
    Ok(rows)
}

/// The paper's Table 2 prediction: copies of each `Δ̃_{r-1}^{(±)}`.
pub fn expected_branching(r: usize) -> Vec<(Option<Label>, usize)> {
    match r % 8 {
        1 | 5 => vec![(Some(Label::Plus), 1), (Some(Label::Minus), 1)],
        2 | 3 => vec![(None, 2)],
        _ => vec![(None, 1)],
    }
}

/// `Λ²`, `Sym₀²` and the two-sided products whose invariants the
/// proposition tabulates.
pub fn trivial_counts(r: usize) -> Result<(usize, usize, Option<usize>)> {
    let ls = labels(r);
    let reps: Vec<LinearRep> = ls.iter().map(|&l| spinor_rep(r, l)).collect::<Result<_>>()?;
    let wedge = trivial_multiplicity(&exterior_square(&reps[0])?);
    let sym = trivial_multiplicity(&sym0_square(&reps[0])?);
    let mixed = if reps.len() == 2 {
        Some(TensorView::new(&[&reps[0], &reps[1]])?.trivial_multiplicity())
    } else {
        None
    };
    Ok((wedge, sym, mixed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_with_trivial_keeps_structure() {
        let d2 = spinor_rep(2, None).unwrap();
        let t = tensor_with_trivial(&d2, 2).unwrap();
        assert_eq!(t.dim(), 4);
        let t3 = tensor_with_trivial(&spinor_rep(3, None).unwrap(), 3).unwrap();
        assert_eq!(t3.dim(), 12);
        for g in t3.gens() {
            assert!(g.is_antisymmetric());
            assert_eq!(g.mul(g).unwrap(), QMatrix::scalar(12, q(-1)));
        }
    }

    #[test]
    fn square_dimensions() {
        let d3 = spinor_rep(3, None).unwrap();
        let w = exterior_square(&d3).unwrap();
        let s = sym0_square(&d3).unwrap();
        assert_eq!((w.dim(), s.dim()), (6, 9));
        assert!(verify_representation(&w).unwrap());
        assert!(verify_representation(&s).unwrap());
        let d2 = spinor_rep(2, None).unwrap();
        let w2 = exterior_square(&d2).unwrap();
        assert_eq!(w2.dim(), 1);
        assert!(w2.gens()[0].is_zero());
    }

    #[test]
    fn trivial_examples() {
        let d3 = spinor_rep(3, None).unwrap();
        assert_eq!(trivial_multiplicity(&exterior_square(&d3).unwrap()), 3);
        let d2 = spinor_rep(2, None).unwrap();
        assert_eq!(trivial_multiplicity(&sym0_square(&d2).unwrap()), 0);
        let (p, m) = (spinor_rep(4, Some(Label::Plus)).unwrap(), spinor_rep(4, Some(Label::Minus)).unwrap());
        assert_eq!(TensorView::new(&[&p, &m]).unwrap().trivial_multiplicity(), 0);
        assert_eq!(trivial_multiplicity(&tensor_product(&p, &m).unwrap()), 0);
    }

    #[test]
    fn lambda_reps() {
        let l0 = lambda_k_rep(3, 0).unwrap();
        assert_eq!(l0.dim(), 1);
        assert!(l0.gens().iter().all(|g| g.is_zero()));
        let l3 = lambda_k_rep(3, 3).unwrap();
        assert!(l3.gens().iter().all(|g| g.is_zero()));
        let l1 = lambda_k_rep(3, 1).unwrap();
        // e12 sends e1 to 2e2
        assert_eq!(l1.gens()[0].get(1, 0), q(2));
        assert_eq!(l1.gens()[0].get(0, 1), q(-2));
        for r in 2..=5 {
            for k in 0..=r {
                assert!(verify_representation(&lambda_k_rep(r, k).unwrap()).unwrap(), "r={r} k={k}");
            }
        }
    }

    #[test]
    fn spinor_reps_are_representations() {
        for r in 2..=6 {
            for l in labels(r) {
                assert!(verify_representation(&spinor_rep(r, l).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn view_matches_materialized_product() {
        let a = spinor_rep(3, None).unwrap();
        let b = lambda_k_rep(3, 1).unwrap();
        let t = tensor_product(&a, &b).unwrap();
        let v = TensorView::new(&[&a, &b]).unwrap();
        for g in 0..3 {
            for i in 0..t.dim() {
                assert_eq!(v.row(g, i), t.gens()[g].row(i).to_vec());
            }
        }
    }

    #[test]
    fn small_decompositions() {
        let d2 = spinor_rep(2, None).unwrap();
        let t = decomposition_table(&[&d2, &d2], 2).unwrap();
        assert_eq!(t.entries, vec![(0, 2), (1, 1)]);
        assert!(t.is_complete());
        let d3 = spinor_rep(3, None).unwrap();
        let t3 = decomposition_table(&[&d3, &d3], 3).unwrap();
        assert_eq!(t3.entries, vec![(0, 4), (1, 4)]);
        assert!(t3.is_complete());
    }

    #[test]
    fn phi_examples() {
        let form = build_real_form(7, None).unwrap();
        let n = form.ambient();
        assert_eq!(phi_pairing(&form, Blade::scalar(n), 0, 0).unwrap(), q(2));
        assert!(phi_surjectivity_check(2).unwrap());
        assert!(phi_surjectivity_check(7).unwrap());
        let blades: Vec<Blade> = (0..=2).map(|d| Blade::range(2, 1, d).unwrap()).collect();
        assert!(phi_parity_check(2, &blades).unwrap());
        let blades: Vec<Blade> = (0..=7).step_by(2).map(|d| Blade::range(7, 1, d).unwrap()).collect();
        assert!(phi_parity_check(7, &blades).unwrap());
    }

    #[test]
    fn branching_small() {
        for r in 2..=5 {
            for row in branching_check(r).unwrap() {
                assert_eq!(row.multiplicities, expected_branching(r), "r = {r}");
                assert_eq!(row.accounted_dim(), row.restricted_dim);
            }
        }
    }
}
