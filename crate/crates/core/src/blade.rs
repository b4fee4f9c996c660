//! Basis-blade arithmetic in the Clifford algebra `Cl_n` with `e_i^2 = -1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Largest ambient dimension for which all `2^n` blades are enumerated.
pub const MAX_ENUMERATION_N: usize = 16;

/// Largest ambient dimension a [`Blade`] can index.
pub const MAX_N: usize = 31;

/// A product `e_{i_1} ... e_{i_s}` with `i_1 < ... < i_s`, stored as a bit set.
///
/// Bit `i - 1` marks generator `e_i`; the empty set is the unit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade {
    n: u8,
    bits: u32,
}

impl Blade {
    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::TooLarge { n, max: MAX_N });
        }
        if n < 32 && bits >> n != 0 {
            return Err(Error::IndexOutOfRange { index: 32 - bits.leading_zeros() as usize, max: n });
        }
        Ok(Blade { n: n as u8, bits })
    }

    /// Blade from 1-based generator indices; order does not matter, repeats do.
    pub fn new(n: usize, indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, max: n });
            }
            let bit = 1u32 << (i - 1);
            if bits & bit != 0 {
                return Err(Error::InvalidArgument(alloc::format!("repeated index {i} in blade")));
            }
            bits |= bit;
        }
        Self::from_bits(n, bits)
    }

    pub fn scalar(n: usize) -> Self {
        Blade { n: n as u8, bits: 0 }
    }

    /// `e_lo e_{lo+1} ... e_hi`; empty when `lo > hi`.
    pub fn range(n: usize, lo: usize, hi: usize) -> Result<Self> {
        let idx: Vec<usize> = (lo..=hi).collect();
        Self::new(n, &idx)
    }

    /// The volume element `e_1 ... e_r` of `Cl_r`, seen inside `Cl_n`.
    pub fn volume(n: usize, r: usize) -> Result<Self> {
        Self::range(n, 1, r)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn grade(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_even(&self) -> bool {
        self.grade().is_multiple_of(2)
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=32).contains(&i) && self.bits & (1 << (i - 1)) != 0
    }

    /// Ascending 1-based indices.
    pub fn indices(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.contains(i)).collect()
    }

    /// All `2^n` blades of `Cl_n` in bit order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = Blade>> {
        if n > MAX_ENUMERATION_N {
            return Err(Error::TooLarge { n, max: MAX_ENUMERATION_N });
        }
        Ok((0u32..(1u32 << n)).map(move |bits| Blade { n: n as u8, bits }))
    }

    /// All blades of a given grade, in bit order.
    pub fn of_grade(n: usize, grade: usize) -> Result<Vec<Blade>> {
        Ok(Self::all(n)?.filter(|b| b.grade() == grade).collect())
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("1");
        }
        f.write_str("e{")?;
        for (k, i) in self.indices().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Clifford product of two blades: `a * b = sign * result`.
///
/// The sign counts the transpositions needed to sort the concatenated index
/// lists, times `-1` for every contracted pair `e_i e_i`.
pub fn blade_product(a: Blade, b: Blade) -> Result<(i8, Blade)> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    let mut swaps = 0u32;
    let mut rest = b.bits;
    while rest != 0 {
        let low = rest.trailing_zeros();
        // generators of `a` strictly above index `low` must cross this one
        swaps += (a.bits >> (low + 1)).count_ones();
        rest &= rest - 1;
    }
    swaps += (a.bits & b.bits).count_ones();
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    Ok((sign, Blade { n: a.n, bits: a.bits ^ b.bits }))
}

/// A finite rational combination of blades of `Cl_n`, with no zero terms.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffordElement {
    n: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl CliffordElement {
    pub fn zero(n: usize) -> Self {
        CliffordElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_blade(Blade::scalar(n), Rational::one())
    }

    pub fn from_blade(blade: Blade, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(blade, coeff);
        }
        CliffordElement { n: blade.n(), terms }
    }

    pub fn blade(blade: Blade) -> Self {
        Self::from_blade(blade, Rational::one())
    }

    /// `e_i`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(Self::blade(Blade::new(n, &[i])?))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Blade, Rational)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (b, c) in terms {
            if b.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: b.n() });
            }
            out.accumulate(b, c);
        }
        Ok(out)
    }

    fn accumulate(&mut self, blade: Blade, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, blade: &Blade) -> Rational {
        self.terms.get(blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Even iff every blade has even grade (the zero element is even).
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.is_even())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.accumulate(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        CliffordElement {
            n: self.n,
            terms: self.terms.iter().map(|(b, c)| (*b, c * s)).collect(),
        }
    }

    /// Clifford product, the bilinear extension of [`blade_product`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (sign, blade) = blade_product(*a, *b)?;
                let c = ca * cb;
                out.accumulate(blade, if sign > 0 { c } else { -c });
            }
        }
        Ok(out)
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{b}")?;
        }
        Ok(())
    }
}

/// `spin(r)` sitting inside `Cl_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinSubalgebraSpec {
    r: usize,
    n: usize,
}

impl SpinSubalgebraSpec {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::InvalidArgument(alloc::format!("need 1 <= r <= n, got r={r}, n={n}")));
        }
        if n > MAX_N {
            return Err(Error::TooLarge { n, max: MAX_N });
        }
        Ok(SpinSubalgebraSpec { r, n })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Index pairs `(i, j)`, `1 <= i < j <= r`, in lexicographic order.
///
/// This is the fixed generator ordering shared by every representation.
pub fn spin_pairs(r: usize) -> Vec<(usize, usize)> {
    (1..=r).flat_map(|i| (i + 1..=r).map(move |j| (i, j))).collect()
}

/// Positions in [`spin_pairs`] of the Lie-generating chain `e_i e_{i+1}`.
pub fn chain_positions(r: usize) -> Vec<usize> {
    spin_pairs(r)
        .iter()
        .enumerate()
        .filter(|(_, (i, j))| *j == i + 1)
        .map(|(k, _)| k)
        .collect()
}

/// `{e_i e_j : 1 <= i < j <= r}` in [`spin_pairs`] order; empty for `r = 1`.
pub fn spin_generators(spec: SpinSubalgebraSpec) -> Vec<CliffordElement> {
    spin_pairs(spec.r)
        .into_iter()
        .map(|(i, j)| CliffordElement::blade(Blade::new(spec.n, &[i, j]).expect("valid pair")))
        .collect()
}

/// Closed-form test for `e_I` commuting with `spin(r)`: either `I` avoids
/// `{1..r}` or contains all of it.
pub fn lemma_commute_predicate(blade: Blade, spec: SpinSubalgebraSpec) -> Result<bool> {
    if blade.n() != spec.n {
        return Err(Error::DimensionMismatch { left: blade.n(), right: spec.n });
    }
    let low: u32 = if spec.r >= 32 { u32::MAX } else { (1u32 << spec.r) - 1 };
    let inside = blade.bits() & low;
    Ok(inside == 0 || inside == low)
}

/// Checks `[x, g] = 0` for every generator of `spin(r)` by direct expansion.
pub fn commutes_with_spin_bruteforce(x: &CliffordElement, spec: SpinSubalgebraSpec) -> Result<bool> {
    if x.n() != spec.n {
        return Err(Error::DimensionMismatch { left: x.n(), right: spec.n });
    }
    for g in spin_generators(spec) {
        if !x.commutator(&g)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    All,
    Even,
}

/// Blades spanning the centralizer of `spin(r)` in `Cl_n` (or in `Cl_n^0`).
///
/// The centralizer is spanned by blades because conjugation by each `e_ie_j`
/// maps every blade to plus or minus itself.
pub fn clifford_centralizer(spec: SpinSubalgebraSpec, parity: Parity) -> Result<Vec<Blade>> {
    let mut out = Vec::new();
    for b in Blade::all(spec.n)? {
        if parity == Parity::Even && !b.is_even() {
            continue;
        }
        if lemma_commute_predicate(b, spec)? {
            out.push(b);
        }
    }
    Ok(out)
}
