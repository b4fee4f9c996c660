//! Centralizers of embedded `spin(r)` inside `so(N)` and their identification.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::blade::{chain_positions, Blade};
use crate::echelon::{Echelon, SpanSolver};
use crate::error::{Error, Result};
use crate::lie::{self, commutator_rows, from_upper, LieInvariants, LieType};
use crate::real_form::{build_real_form, d_dim, realize_rep, volume_action, Label, RealRep};
use crate::scalar::{q, Approx, Rational};
use crate::sparse::{QMatrix, SparseVec};
use crate::tensor::{spinor_rep, tensor_with_trivial, LinearRep};

pub const MAX_EXACT_N: usize = 256;
pub const MAX_FLOAT_N: usize = 1024;

/// How `ℝ^N` is assembled from copies of `Δ̃_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    /// `Δ̃_r ⊗ ℝ^m`
    Single(usize),
    /// `Δ̃_r^+ ⊗ ℝ^{m₁} ⊕ Δ̃_r^- ⊗ ℝ^{m₂}`
    Pair(usize, usize),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Single(m) => write!(f, "m={m}"),
            Shape::Pair(a, b) => write!(f, "m=({a},{b})"),
        }
    }
}

/// A block `offset .. offset + d·m` laid out as `Δ̃ ⊗ ℝ^m` (index `a·m + i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub offset: usize,
    pub d: usize,
    pub m: usize,
}

#[derive(Clone, Debug)]
pub struct EmbeddedSpin {
    r: usize,
    n: usize,
    shape: Shape,
    blocks: Vec<Block>,
    gens: Vec<QMatrix>,
}

impl EmbeddedSpin {
    pub fn r(&self) -> usize {
        self.r
    }

    /// `N`, the size of the ambient `so(N)`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Images of `e_ie_j`, `i < j ≤ r`, lexicographic.
    pub fn gens(&self) -> &[QMatrix] {
        &self.gens
    }

    /// `gᵀ = -g` and `g² = -Id` for every generator.
    pub fn check_generators(&self) -> Result<bool> {
        let minus = QMatrix::scalar(self.n, q(-1));
        for g in &self.gens {
            if !g.is_antisymmetric() || g.mul(g)? != minus {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `N = d_r·m` for `r ≢ 0 (mod 4)`, or the full size if it would be built.
pub fn embedding_size(r: usize, shape: Shape) -> Result<usize> {
    let d = d_dim(r)?;
    Ok(match shape {
        Shape::Single(m) => d * m,
        Shape::Pair(a, b) => d * (a + b),
    })
}

pub fn build_embedding_t1(r: usize, m: usize) -> Result<EmbeddedSpin> {
    if r.is_multiple_of(4) {
        return Err(Error::InvalidArgument(format!("r = {r} ≡ 0 mod 4 needs a pair of multiplicities")));
    }
    let rep = tensor_with_trivial(&spinor_rep(r, None)?, m)?;
    let d = rep.dim() / m;
    Ok(EmbeddedSpin {
        r,
        n: rep.dim(),
        shape: Shape::Single(m),
        blocks: vec![Block { offset: 0, d, m }],
        gens: rep.gens().to_vec(),
    })
}

/// Block-diagonal embedding; a zero multiplicity drops that block.
pub fn build_embedding_t2(r: usize, m1: usize, m2: usize) -> Result<EmbeddedSpin> {
    if !r.is_multiple_of(4) || r == 0 {
        return Err(Error::InvalidArgument(format!("r = {r} is not a positive multiple of 4")));
    }
    if m1 + m2 == 0 {
        return Err(Error::InvalidArgument("m₁ + m₂ must be at least 1".into()));
    }
    let mut parts: Vec<LinearRep> = Vec::new();
    let mut blocks = Vec::new();
    let mut offset = 0;
    for (label, m) in [(Label::Plus, m1), (Label::Minus, m2)] {
        if m == 0 {
            continue;
        }
        let rep = tensor_with_trivial(&spinor_rep(r, Some(label))?, m)?;
        blocks.push(Block { offset, d: rep.dim() / m, m });
        offset += rep.dim();
        parts.push(rep);
    }
    let rep = match parts.as_slice() {
        [a] => a.clone(),
        [a, b] => crate::tensor::direct_sum(a, b)?,
        _ => unreachable!(),
    };
    Ok(EmbeddedSpin { r, n: rep.dim(), shape: Shape::Pair(m1, m2), blocks, gens: rep.gens().to_vec() })
}

pub fn build_embedding(r: usize, shape: Shape) -> Result<EmbeddedSpin> {
    match shape {
        Shape::Single(m) => build_embedding_t1(r, m),
        Shape::Pair(a, b) => build_embedding_t2(r, a, b),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    /// `f64` elimination with [`Approx::TOLERANCE`]; the kernel is rounded
    /// back to rationals and checked exactly.
    Float,
}

#[derive(Clone, Debug)]
pub struct CentralizerBasis {
    basis: Vec<QMatrix>,
    source: EmbeddedSpin,
    backend: Backend,
}

impl CentralizerBasis {
    pub fn n(&self) -> usize {
        self.source.n
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn source(&self) -> &EmbeddedSpin {
        &self.source
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// Every bracket of basis elements lies in the span.
    pub fn is_subalgebra(&self) -> Result<bool> {
        match lie::StructureConstants::from_basis(&self.basis) {
            Ok(_) => Ok(true),
            Err(Error::NotInSpan) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Whether `x` lies in the span of the basis.
    pub fn contains(&self, x: &QMatrix) -> Result<bool> {
        Ok(self.solver()?.contains(&x.flatten()))
    }

    fn solver(&self) -> Result<SpanSolver<Rational>> {
        let flat: Vec<_> = self.basis.iter().map(|b| b.flatten()).collect();
        SpanSolver::new(self.n() * self.n(), &flat)
    }
}

/// Solves `[X, e_ie_{i+1}] = 0` over `X ∈ so(N)`, then checks the result
/// against every generator.
pub fn so_centralizer(emb: &EmbeddedSpin, backend: Backend) -> Result<CentralizerBasis> {
    let n = emb.n;
    let limit = match backend {
        Backend::Exact => MAX_EXACT_N,
        Backend::Float => MAX_FLOAT_N,
    };
    if n > limit {
        return Err(Error::TooLarge { n, max: limit });
    }
    let chain: Vec<&QMatrix> = chain_positions(emb.r).into_iter().map(|p| &emb.gens[p]).collect();
    let unknowns = n * n.saturating_sub(1) / 2;
    let kernel: Vec<SparseVec<Rational>> = match backend {
        Backend::Exact => {
            let mut ech: Echelon<Rational> = Echelon::new(unknowns);
            for g in &chain {
                for row in commutator_rows(n, g, &|x: &Rational| x.clone()) {
                    ech.insert(row);
                }
            }
            ech.nullspace()
        }
        Backend::Float => {
            let mut ech: Echelon<Approx> = Echelon::new(unknowns);
            for g in &chain {
                for row in commutator_rows(n, g, &|x: &Rational| Approx(x.to_f64().unwrap_or(f64::NAN))) {
                    let scale = row.iter().map(|e| e.1.abs()).fold(0.0, f64::max);
                    if scale > 0.0 {
                        ech.insert(row.into_iter().map(|(j, v)| (j, Approx(v.0 / scale))).collect());
                    }
                }
            }
            ech.nullspace()
                .into_iter()
                .map(|v| v.into_iter().map(|(j, x)| Ok((j, round_rational(x.0)?))).collect::<Result<_>>())
                .collect::<Result<_>>()?
        }
    };
    let basis: Vec<QMatrix> = kernel.iter().map(|v| from_upper(n, v)).collect();
    for x in &basis {
        for g in &emb.gens {
            if !x.commutator(g)?.is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "centralizer element fails to commute with a generator (r={}, {})",
                    emb.r, emb.shape
                )));
            }
        }
    }
    Ok(CentralizerBasis { basis, source: emb.clone(), backend })
}

fn round_rational(x: f64) -> Result<Rational> {
    let r: Ratio<i64> = Ratio::approximate_float(x)
        .ok_or_else(|| Error::VerificationFailed(format!("cannot round {x} to a rational")))?;
    Ok(Rational::new((*r.numer()).into(), (*r.denom()).into()))
}

/// Explicit structure maps found inside the centralizer on one block.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// `J ⊗ Id_m` with `J² = -Id`, as a matrix on the block.
    Complex { block: usize, j: QMatrix },
    /// `I, J, K ⊗ Id_m` with `I² = J² = K² = -Id`, `IJ = K`.
    Quaternionic { block: usize, i: QMatrix, j: QMatrix, k: QMatrix },
}

#[derive(Clone, Debug)]
pub struct LieReport {
    pub invariants: LieInvariants,
    /// Catalog entries whose reference models share all invariants.
    pub matches: Vec<LieType>,
    /// Preferred match: quaternionic certificates favour `sp`, complex ones
    /// `u`, otherwise `so`; `None` when nothing matches.
    pub identified: Option<LieType>,
    pub certificates: Vec<Certificate>,
}

impl LieReport {
    pub fn dim(&self) -> usize {
        self.invariants.dim
    }
}

pub fn lie_classify(cb: &CentralizerBasis) -> Result<LieReport> {
    let invariants = lie::invariants(&cb.basis)?;
    let mut matches = Vec::new();
    for t in LieType::candidates(invariants.dim) {
        if t.reference_invariants()? == invariants {
            matches.push(t);
        }
    }
    let mut certificates = Vec::new();
    for (idx, block) in cb.source.blocks.iter().enumerate() {
        if let Some(c) = find_certificate(cb, idx, *block)? {
            certificates.push(c);
        }
    }
    let quaternionic = certificates.iter().any(|c| matches!(c, Certificate::Quaternionic { .. }));
    let complex = certificates.iter().any(|c| matches!(c, Certificate::Complex { .. }));
    let rank = |t: &LieType| -> u8 {
        match t {
            LieType::Sp(_) | LieType::SpSum(..) if quaternionic => 0,
            LieType::U(_) if complex => 0,
            LieType::So(_) | LieType::SoSum(..) | LieType::Zero => 1,
            _ => 2,
        }
    };
    let identified = matches.iter().copied().min_by_key(|t| (rank(t), *t));
    Ok(LieReport { invariants, matches, identified, certificates })
}

/// Elements of the centralizer of the form `M ⊗ Id_m` supported on one
/// block, normalized into a complex or quaternionic structure when they span
/// a 1- or 3-dimensional space.
fn find_certificate(cb: &CentralizerBasis, idx: usize, block: Block) -> Result<Option<Certificate>> {
    let k = cb.basis.len();
    let n = cb.n();
    let Block { offset, d, m } = block;
    let inside = |x: usize| x >= offset && x < offset + d * m;
    // matrix entry -> coefficients over basis elements of its constraint
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (bi, b) in cb.basis.iter().enumerate() {
        for row in 0..n {
            for (col, v) in b.row(row) {
                let col = *col;
                if !(inside(row) && inside(col)) {
                    rows.entry((row, col)).or_default().push((bi, v.clone()));
                    continue;
                }
                let (a, i) = ((row - offset) / m, (row - offset) % m);
                let (c, j) = ((col - offset) / m, (col - offset) % m);
                if i != j || i > 0 {
                    rows.entry((row, col)).or_default().push((bi, v.clone()));
                } else {
                    // copy 0 is the reference for the other diagonal copies
                    for t in 1..m {
                        rows.entry((offset + a * m + t, offset + c * m + t)).or_default().push((bi, -v));
                    }
                }
            }
        }
    }
    let mut ech: Echelon<Rational> = Echelon::new(k);
    for (_, r) in rows {
        ech.insert(crate::sparse::normalize(r));
    }
    let sol: Vec<QMatrix> = ech
        .nullspace()
        .iter()
        .map(|c| Ok(sub_block(&combine(&cb.basis, c, n)?, offset, d * m)))
        .collect::<Result<_>>()?;
    match sol.len() {
        1 => Ok(unit_multiple(&sol[0])?.map(|j| Certificate::Complex { block: idx, j })),
        3 => quaternion_triple(&sol).map(|t| t.map(|(i, j, k)| Certificate::Quaternionic { block: idx, i, j, k })),
        _ => Ok(None),
    }
}

fn sub_block(x: &QMatrix, offset: usize, size: usize) -> QMatrix {
    let rows = (offset..offset + size)
        .map(|i| x.row(i).iter().map(|(j, v)| (j - offset, v.clone())).collect())
        .collect();
    QMatrix::from_rows(size, size, rows)
}

fn combine(basis: &[QMatrix], coeffs: &SparseVec<Rational>, n: usize) -> Result<QMatrix> {
    let mut acc = QMatrix::zeros(n, n);
    for (i, c) in coeffs {
        acc = acc.add(&basis[*i].scale(c))?;
    }
    Ok(acc)
}

/// `X / √c` when `X² = -c·Id` with `c` a positive rational square.
fn unit_multiple(x: &QMatrix) -> Result<Option<QMatrix>> {
    let Some(c) = square_scalar(x)? else { return Ok(None) };
    Ok(rational_sqrt(&(-c)).map(|s| x.scale(&s.recip())))
}

/// `s` with `x² = s·Id`, if any.
fn square_scalar(x: &QMatrix) -> Result<Option<Rational>> {
    let sq = x.mul(x)?;
    let s = sq.get(0, 0);
    Ok((sq == QMatrix::scalar(x.rows(), s.clone())).then_some(s))
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if *x <= q(0) {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

/// Orthonormalizes three matrices under `XY + YX = -2⟨X,Y⟩·Id` and orients
/// them so that `IJ = K`.
fn quaternion_triple(v: &[QMatrix]) -> Result<Option<(QMatrix, QMatrix, QMatrix)>> {
    let n = v[0].rows();
    let inner = |x: &QMatrix, y: &QMatrix| -> Result<Option<Rational>> {
        let s = x.mul(y)?.add(&y.mul(x)?)?;
        let c = s.get(0, 0);
        Ok((s == QMatrix::scalar(n, c.clone())).then(|| -c / q(2)))
    };
    let mut ortho: Vec<QMatrix> = Vec::new();
    for x in v {
        let mut y = x.clone();
        for u in &ortho {
            let (Some(a), Some(b)) = (inner(x, u)?, inner(u, u)?) else { return Ok(None) };
            y = y.sub(&u.scale(&(a / b)))?;
        }
        ortho.push(y);
    }
    let mut units = Vec::new();
    for y in &ortho {
        match unit_multiple(y)? {
            Some(u) => units.push(u),
            None => return Ok(None),
        }
    }
    let (i, j, mut k) = (units[0].clone(), units[1].clone(), units[2].clone());
    let ij = i.mul(&j)?;
    if ij == k.neg() {
        k = k.neg();
    }
    let ok = ij == k && j.mul(&i)? == k.neg() && j.mul(&k)? == i && k.mul(&i)? == j;
    Ok(ok.then_some((i, j, k)))
}

/// The predicted centralizer type by `r mod 8`.
pub fn expected_centralizer(r: usize, shape: Shape) -> Result<LieType> {
    match (r % 8, shape) {
        (0, Shape::Pair(a, b)) => Ok(LieType::SoSum(a, b)),
        (4, Shape::Pair(a, b)) => Ok(LieType::SpSum(a, b)),
        (1 | 7, Shape::Single(m)) => Ok(LieType::So(m)),
        (2 | 6, Shape::Single(m)) => Ok(LieType::U(m)),
        (3 | 5, Shape::Single(m)) => Ok(LieType::Sp(m)),
        _ => Err(Error::InvalidArgument(format!("no catalog entry for r = {r} with {shape}"))),
    }
}

/// `Id_d ⊗ so(m) ⊕ Σ_S S ⊗ Sym²ℝ^m` over the structure maps `S` of the case,
/// as a span of matrices.
pub fn structural_span_t1(rep: &RealRep, m: usize) -> Result<Vec<QMatrix>> {
    let r = rep.r();
    let d = rep.dim();
    let n_amb = rep.form().ambient();
    let blade = |idx: &[usize]| -> Result<QMatrix> { rep.blade_action(Blade::new(n_amb, idx)?) };
    let range = |hi: usize, extra: &[usize]| -> Vec<usize> { (1..=hi).chain(extra.iter().copied()).collect() };
    let structures: Vec<QMatrix> = match r % 8 {
        1 | 7 => Vec::new(),
        2 | 6 => vec![volume_action(rep)?],
        5 => vec![blade(&[r + 1, r + 2])?, blade(&range(r + 1, &[]))?, blade(&range(r, &[r + 2]))?],
        3 => vec![blade(&[r + 1, r + 2])?, blade(&[r + 1, r + 3])?, blade(&[r + 2, r + 3])?],
        _ => return Err(Error::InvalidArgument(format!("r = {r} ≡ 0 mod 4 has no single-block certificate"))),
    };
    let id_d = QMatrix::identity(d);
    let mut span: Vec<QMatrix> = lie::so_basis(m).iter().map(|x| id_d.kron(x)).collect();
    for s in &structures {
        for a in 0..m {
            for b in a..m {
                let mut rows = vec![Vec::new(); m];
                rows[a].push((b, q(1)));
                if a != b {
                    rows[b].push((a, q(1)));
                }
                span.push(s.kron(&QMatrix::from_rows(m, m, rows)));
            }
        }
    }
    Ok(span)
}

/// The computed centralizer equals the explicit span of
/// [`structural_span_t1`] as a subspace of `so(N)`.
pub fn structural_certificate_t1(r: usize, m: usize, cb: &CentralizerBasis) -> Result<bool> {
    if cb.source.shape != Shape::Single(m) || cb.source.r != r {
        return Err(Error::InvalidArgument("centralizer was computed for a different case".into()));
    }
    let rep = realize_rep(build_real_form(r, None)?)?;
    let span = structural_span_t1(&rep, m)?;
    for s in &span {
        if !s.is_antisymmetric() {
            return Ok(false);
        }
    }
    let flat: Vec<_> = span.iter().map(|s| s.flatten()).collect();
    let independent = crate::echelon::rank(cb.n() * cb.n(), flat.iter().cloned()) == span.len();
    if !independent || span.len() != cb.dim() {
        return Ok(false);
    }
    let solver = cb.solver()?;
    Ok(flat.iter().all(|f| solver.contains(f)))
}

/// One centralizer case end to end.
#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub r: usize,
    pub shape: Shape,
    pub n: usize,
    pub expected: LieType,
    pub expected_invariants: LieInvariants,
    pub report: LieReport,
    /// `None` outside the single-block case.
    pub structural: Option<bool>,
}

impl CaseOutcome {
    pub fn pass(&self) -> bool {
        self.report.invariants == self.expected_invariants
            && self.report.dim() == self.expected.dim()
            && self.structural != Some(false)
    }
}

pub fn run_case(r: usize, shape: Shape, backend: Backend) -> Result<CaseOutcome> {
    let expected = expected_centralizer(r, shape)?;
    let emb = build_embedding(r, shape)?;
    let cb = so_centralizer(&emb, backend)?;
    let report = lie_classify(&cb)?;
    let structural = match shape {
        Shape::Single(m) => Some(structural_certificate_t1(r, m, &cb)?),
        Shape::Pair(..) => None,
    };
    Ok(CaseOutcome {
        r,
        shape,
        n: emb.n,
        expected,
        expected_invariants: expected.reference_invariants()?,
        report,
        structural,
    })
}
