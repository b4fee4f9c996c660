//! Verification suites: deterministic case lists and a runner per case.
//!
//! Cases are independent, so callers may run them in any order or in
//! parallel; [`Case`] ordering is the canonical report order.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::blade::{clifford_centralizer, commutes_with_spin_bruteforce, Blade, CliffordElement, Parity, SpinSubalgebraSpec};
use crate::centralizer::{build_embedding, run_case, so_centralizer, Backend, Shape};
use crate::error::{Error, Result};
use crate::lie::{format_signature, Signature};
use crate::real_form::{build_gamma, build_real_form, d_dim, gamma_equivariance_check, realize_rep, Label};
use crate::tensor::{
    binomial, branching_check, decomposition_table, expected_branching, spinor_rep, trivial_counts, TensorView,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteKind {
    Prop1,
    Thm1,
    Thm2,
    Lemma,
    Table2,
    Decomp,
    Gamma,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 7] = [
        SuiteKind::Prop1,
        SuiteKind::Thm1,
        SuiteKind::Thm2,
        SuiteKind::Lemma,
        SuiteKind::Table2,
        SuiteKind::Decomp,
        SuiteKind::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Prop1 => "prop1",
            SuiteKind::Thm1 => "thm1",
            SuiteKind::Thm2 => "thm2",
            SuiteKind::Lemma => "lemma",
            SuiteKind::Table2 => "table2",
            SuiteKind::Decomp => "decomp",
            SuiteKind::Gamma => "gamma",
        }
    }

    /// Cases in report order; `r_max` drops cases whose `r` (or `n`) exceeds it.
    pub fn cases(self, r_max: Option<usize>) -> Vec<Case> {
        let all = match self {
            SuiteKind::Prop1 => [1, 2, 3, 4, 0].into_iter().map(Case::Prop1).collect(),
            SuiteKind::Thm1 => {
                let mut v = Vec::new();
                for r in [2, 3, 5, 6, 7] {
                    for m in 1..=3 {
                        v.push(Case::Centralize { r, shape: Shape::Single(m) });
                    }
                }
                for r in [9, 10, 11] {
                    for m in 1..=2 {
                        v.push(Case::Centralize { r, shape: Shape::Single(m) });
                    }
                }
                v
            }
            SuiteKind::Thm2 => {
                let mut v = Vec::new();
                for r in [4, 8] {
                    for (a, b) in [(1, 1), (1, 2), (2, 2)] {
                        v.push(Case::Centralize { r, shape: Shape::Pair(a, b) });
                    }
                }
                v
            }
            SuiteKind::Lemma => (1..=7).map(Case::Lemma).collect(),
            SuiteKind::Table2 => (2..=9).map(Case::Table2).collect(),
            SuiteKind::Decomp => [2, 3, 4, 5, 7, 8, 9, 10].into_iter().map(Case::Decomp).collect(),
            SuiteKind::Gamma => (1..=11).map(Case::Gamma).chain((1..=12).map(Case::RealForm)).collect(),
        };
        match r_max {
            Some(max) => all.into_iter().filter(|c: &Case| c.size() <= max).collect(),
            None => all,
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    /// Residue class `±c (mod 8)` for `c = 1, 2, 3`, or `c = 4, 0`; runs
    /// every `r ∈ 2..=11` in the class.
    Prop1(usize),
    Centralize { r: usize, shape: Shape },
    Lemma(usize),
    Table2(usize),
    Decomp(usize),
    Gamma(usize),
    RealForm(usize),
}

impl Case {
    /// Largest `r` or `n` the case touches.
    pub fn size(&self) -> usize {
        match *self {
            Case::Prop1(c) => prop1_class(c).into_iter().max().unwrap_or(0),
            Case::Centralize { r, .. } => r,
            Case::Lemma(n) | Case::Table2(n) | Case::Decomp(n) | Case::Gamma(n) | Case::RealForm(n) => n,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Prop1(1) => write!(f, "r≡±1"),
            Case::Prop1(2) => write!(f, "r≡±2"),
            Case::Prop1(3) => write!(f, "r≡±3"),
            Case::Prop1(c) => write!(f, "r≡{c}"),
            Case::Centralize { r, shape } => write!(f, "r={r} {shape}"),
            Case::Lemma(n) => write!(f, "n={n}"),
            Case::Table2(r) | Case::Decomp(r) => write!(f, "r={r}"),
            Case::Gamma(n) => write!(f, "gamma n={n}"),
            Case::RealForm(r) => write!(f, "real form r={r}"),
        }
    }
}

/// One line of a suite report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub suite: SuiteKind,
    pub case: Case,
    /// Table row the expectation comes from, e.g. `thm1 r≡5`.
    pub source: String,
    pub expected_type: String,
    pub expected_dim: Option<usize>,
    pub computed_type: String,
    pub computed_dim: Option<usize>,
    pub center: Option<usize>,
    pub derived: Option<usize>,
    pub killing: Option<Signature>,
    pub detail: String,
    pub pass: bool,
}

impl Row {
    fn new(suite: SuiteKind, case: Case, source: String) -> Self {
        Row {
            suite,
            case,
            source,
            expected_type: String::new(),
            expected_dim: None,
            computed_type: String::new(),
            computed_dim: None,
            center: None,
            derived: None,
            killing: None,
            detail: String::new(),
            pass: false,
        }
    }

    pub fn killing_string(&self) -> String {
        self.killing.map(format_signature).unwrap_or_default()
    }
}

fn prop1_class(c: usize) -> Vec<usize> {
    (2..=11)
        .filter(|r| {
            let k = r % 8;
            k == c || (c != 0 && c != 4 && k == 8 - c)
        })
        .collect()
}

/// `(centralizer dim, Λ² trivial count)` predicted for the class.
fn prop1_expected(c: usize) -> (usize, usize) {
    match c {
        2 => (1, 1),
        3 => (3, 3),
        4 => (6, 3),
        _ => (0, 0),
    }
}

pub fn run(suite: SuiteKind, case: Case) -> Result<Row> {
    match case {
        Case::Prop1(c) => prop1_row(suite, c),
        Case::Centralize { r, shape } => centralize_row(suite, r, shape),
        Case::Lemma(n) => lemma_row(suite, n),
        Case::Table2(r) => table2_row(suite, r),
        Case::Decomp(r) => decomp_row(suite, r),
        Case::Gamma(n) => gamma_row(suite, n),
        Case::RealForm(r) => real_form_row(suite, r),
    }
}

/// Runs every case sequentially.
pub fn run_suite(suite: SuiteKind, r_max: Option<usize>) -> Result<Vec<Row>> {
    suite.cases(r_max).into_iter().map(|c| run(suite, c)).collect()
}

fn prop1_row(suite: SuiteKind, c: usize) -> Result<Row> {
    let case = Case::Prop1(c);
    let mut row = Row::new(suite, case, format!("prop1 {case}"));
    let (cdim, wedge_expected) = prop1_expected(c);
    row.expected_dim = Some(cdim);
    row.expected_type = match c {
        1 => "0",
        2 => "u(1)",
        3 => "sp(1)",
        4 => "sp(1)+sp(1)",
        _ => "0",
    }
    .into();
    let mut pass = true;
    let mut details = Vec::new();
    let mut dims = Vec::new();
    for r in prop1_class(c) {
        let shape = if r % 4 == 0 { Shape::Pair(1, 1) } else { Shape::Single(1) };
        let out = run_case(r, shape, Backend::Exact)?;
        let (wedge, sym, mixed) = trivial_counts(r)?;
        let ok = out.pass() && out.report.dim() == cdim && wedge == wedge_expected && sym == 0 && mixed.unwrap_or(0) == 0;
        pass &= ok;
        dims.push(out.report.dim());
        if row.killing.is_none() {
            row.center = Some(out.report.invariants.center_dim);
            row.derived = Some(out.report.invariants.derived_dim);
            row.killing = Some(out.report.invariants.killing);
            row.computed_type = out.report.identified.map(|t| t.to_string()).unwrap_or_else(|| "unidentified".into());
        }
        details.push(format!(
            "r={r}: dim={} wedge={wedge} sym0={sym}{}",
            out.report.dim(),
            mixed.map(|m| format!(" mixed={m}")).unwrap_or_default()
        ));
    }
    dims.dedup();
    row.computed_dim = if dims.len() == 1 { Some(dims[0]) } else { None };
    row.detail = details.join("; ");
    row.pass = pass;
    Ok(row)
}

fn centralize_row(suite: SuiteKind, r: usize, shape: Shape) -> Result<Row> {
    centralizer_row(suite, r, shape, Backend::Exact)
}

/// Full pipeline for one embedding, reported against its catalog entry.
pub fn centralizer_row(suite: SuiteKind, r: usize, shape: Shape, backend: Backend) -> Result<Row> {
    let case = Case::Centralize { r, shape };
    let mut row = Row::new(suite, case, format!("{suite} r≡{}", r % 8));
    let out = run_case(r, shape, backend)?;
    row.expected_type = out.expected.to_string();
    row.expected_dim = Some(out.expected.dim());
    row.computed_type = out.report.identified.map(|t| t.to_string()).unwrap_or_else(|| "unidentified".into());
    row.computed_dim = Some(out.report.dim());
    row.center = Some(out.report.invariants.center_dim);
    row.derived = Some(out.report.invariants.derived_dim);
    row.killing = Some(out.report.invariants.killing);
    let matches: Vec<String> = out.report.matches.iter().map(|t| t.to_string()).collect();
    row.detail = format!(
        "N={} matches=[{}] certificates={} structural={}",
        out.n,
        matches.join(","),
        out.report.certificates.len(),
        out.structural.map(|s| s.to_string()).unwrap_or_else(|| "n/a".into())
    );
    row.pass = out.pass();
    Ok(row)
}

/// Closed-form commutation predicate agrees with brute force on every blade
/// of `Cl_n`, for every `r ≤ n`.
pub fn lemma_check(n: usize) -> Result<bool> {
    for r in 1..=n {
        let spec = SpinSubalgebraSpec::new(r, n)?;
        let predicted = clifford_centralizer(spec, Parity::All)?;
        let mut brute = Vec::new();
        for b in Blade::all(n)? {
            if commutes_with_spin_bruteforce(&CliffordElement::blade(b), spec)? {
                brute.push(b);
            }
        }
        if predicted != brute {
            return Ok(false);
        }
    }
    Ok(true)
}

fn lemma_row(suite: SuiteKind, n: usize) -> Result<Row> {
    let case = Case::Lemma(n);
    let mut row = Row::new(suite, case, "lemma".into());
    row.expected_type = "predicate = brute force".into();
    row.pass = lemma_check(n)?;
    row.computed_type = if row.pass { "agree" } else { "disagree" }.into();
    row.detail = format!("{} blades, r = 1..{n}", 1usize << n);
    Ok(row)
}

fn label_str(l: Option<Label>) -> &'static str {
    match l {
        None => "",
        Some(Label::Plus) => "+",
        Some(Label::Minus) => "-",
    }
}

fn table2_row(suite: SuiteKind, r: usize) -> Result<Row> {
    let case = Case::Table2(r);
    let mut row = Row::new(suite, case, format!("table2 r≡{}", r % 8));
    let expected = expected_branching(r);
    let fmt_mults = |m: &[(Option<Label>, usize)]| -> String {
        m.iter().filter(|e| e.1 > 0).map(|(l, k)| format!("{k}·Δ{}{}", r - 1, label_str(*l))).collect::<Vec<_>>().join("+")
    };
    row.expected_type = fmt_mults(&expected);
    let rows = branching_check(r)?;
    let mut pass = true;
    let mut computed = Vec::new();
    for b in &rows {
        let got: Vec<_> = b.multiplicities.iter().copied().filter(|e| e.1 > 0).collect();
        pass &= got == expected && b.accounted_dim() == b.restricted_dim;
        computed.push(format!("Δ{r}{}| = {}", label_str(b.label), fmt_mults(&b.multiplicities)));
    }
    row.computed_type = computed.join("; ");
    row.expected_dim = Some(d_dim(r)?);
    row.computed_dim = rows.first().map(|b| b.accounted_dim());
    row.pass = pass;
    Ok(row)
}

/// Expected normalized multiplicities `(j, mult)` for `0 ≤ j ≤ ⌊r/2⌋`.
pub fn expected_decomposition(r: usize) -> Option<Vec<(usize, usize)>> {
    let half = r / 2;
    match r % 8 {
        1 | 7 => Some((0..=half).map(|j| (j, 1)).collect()),
        2 | 6 => Some((0..=half).map(|j| (j, if 2 * j == r { 1 } else { 2 })).collect()),
        3 | 5 => Some((0..=half).map(|j| (j, 4)).collect()),
        _ => None,
    }
}

/// For `r ≡ 0 (mod 4)`: trivial-summand count and raw invariant dimension of
/// `(Δ̃^+ ⊕ Δ̃^-) ⊗ (Δ̃^+ ⊕ Δ̃^-)`.
pub fn two_sided_trivial(r: usize) -> Result<(usize, usize)> {
    let reps = [spinor_rep(r, Some(Label::Plus))?, spinor_rep(r, Some(Label::Minus))?];
    let (mut summands, mut raw) = (0, 0);
    for a in &reps {
        let end = TensorView::new(&[a, a])?.trivial_multiplicity();
        for b in &reps {
            let t = TensorView::new(&[a, b])?.trivial_multiplicity();
            raw += t;
            if t % end != 0 {
                return Err(Error::InexactMultiplicity { hom: t, end });
            }
            summands += t / end;
        }
    }
    Ok((summands, raw))
}

fn decomp_row(suite: SuiteKind, r: usize) -> Result<Row> {
    let case = Case::Decomp(r);
    let mut row = Row::new(suite, case, format!("decomp r≡{}", r % 8));
    if r.is_multiple_of(4) {
        let (summands, raw) = two_sided_trivial(r)?;
        let raw_expected = if r % 8 == 4 { 8 } else { 2 };
        row.expected_type = "2 trivial summands".into();
        row.expected_dim = Some(raw_expected);
        row.computed_type = format!("{summands} trivial summands");
        row.computed_dim = Some(raw);
        row.pass = summands == 2 && raw == raw_expected;
        return Ok(row);
    }
    let expected = expected_decomposition(r).ok_or_else(|| Error::InvalidArgument(format!("no decomposition for r = {r}")))?;
    let d = spinor_rep(r, None)?;
    let table = decomposition_table(&[&d, &d], r)?;
    let show = |e: &[(usize, usize)]| e.iter().map(|(j, m)| format!("{m}Λ{j}")).collect::<Vec<_>>().join("+");
    row.expected_type = show(&expected);
    row.computed_type = show(&table.entries);
    row.expected_dim = Some(d.dim() * d.dim());
    row.computed_dim = Some(table.accounted_dim());
    row.pass = table.entries == expected && table.is_complete();
    row.detail = format!("dim Λ^j: {}", (0..=r / 2).map(|j| binomial(r, j).to_string()).collect::<Vec<_>>().join(","));
    Ok(row)
}

/// `+1` for `n ≡ 0, 1, 6, 7 (mod 8)`, else `-1`.
pub fn expected_gamma_square(n: usize) -> i8 {
    if matches!(n % 8, 0 | 1 | 6 | 7) {
        1
    } else {
        -1
    }
}

fn gamma_row(suite: SuiteKind, n: usize) -> Result<Row> {
    let case = Case::Gamma(n);
    let mut row = Row::new(suite, case, "gamma".into());
    let sign = build_gamma(n)?.square_sign()?;
    let equiv = gamma_equivariance_check(n)?;
    row.expected_type = format!("γ²={} equivariant", expected_gamma_square(n));
    row.computed_type = format!("γ²={sign}{}", if equiv { " equivariant" } else { "" });
    row.pass = sign == expected_gamma_square(n) && equiv;
    Ok(row)
}

/// Real pairings, spin generators antisymmetric with square `-Id`, and the
/// representation dimension `d_r`.
pub fn real_form_check(r: usize) -> Result<bool> {
    let labels: Vec<Option<Label>> =
        if r.is_multiple_of(4) { vec![Some(Label::Plus), Some(Label::Minus)] } else { vec![None] };
    for l in labels {
        let form = build_real_form(r, l)?;
        if !form.pairings_are_real() || form.dim() != d_dim(r)? {
            return Ok(false);
        }
        let rep = realize_rep(form)?;
        let minus = crate::sparse::QMatrix::scalar(rep.dim(), crate::scalar::q(-1));
        for g in rep.spin_mats() {
            if !g.is_antisymmetric() || g.mul(g)? != minus {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn real_form_row(suite: SuiteKind, r: usize) -> Result<Row> {
    let case = Case::RealForm(r);
    let mut row = Row::new(suite, case, "real form".into());
    row.expected_type = "real pairings, J²=-Id".into();
    row.expected_dim = Some(d_dim(r)?);
    row.pass = real_form_check(r)?;
    row.computed_type = if row.pass { "ok" } else { "failed" }.into();
    row.computed_dim = Some(d_dim(r)?);
    Ok(row)
}

/// Centralizer dimension of `spin(r)` in `so(d_r)` (or `so(d_r) ⊕ so(d_r)`
/// for `r ≡ 0 mod 4`).
pub fn prop1_centralizer_dim(r: usize) -> Result<usize> {
    let shape = if r.is_multiple_of(4) { Shape::Pair(1, 1) } else { Shape::Single(1) };
    Ok(so_centralizer(&build_embedding(r, shape)?, Backend::Exact)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        for k in SuiteKind::ALL {
            assert_eq!(k.name().parse::<SuiteKind>().unwrap(), k);
        }
        assert!("nope".parse::<SuiteKind>().is_err());
    }

    #[test]
    fn prop1_classes() {
        assert_eq!(prop1_class(1), vec![7, 9]);
        assert_eq!(prop1_class(2), vec![2, 6, 10]);
        assert_eq!(prop1_class(3), vec![3, 5, 11]);
        assert_eq!(prop1_class(4), vec![4]);
        assert_eq!(prop1_class(0), vec![8]);
        assert_eq!(SuiteKind::Prop1.cases(None).len(), 5);
    }

    #[test]
    fn small_suites_pass() {
        for suite in [SuiteKind::Lemma, SuiteKind::Table2, SuiteKind::Gamma] {
            for row in run_suite(suite, Some(5)).unwrap() {
                assert!(row.pass, "{suite} {}", row.case);
            }
        }
        for row in run_suite(SuiteKind::Decomp, Some(5)).unwrap() {
            assert!(row.pass, "{row:?}");
        }
    }

    #[test]
    fn r_max_filters() {
        assert!(SuiteKind::Thm1.cases(Some(3)).iter().all(|c| c.size() <= 3));
        assert_eq!(SuiteKind::Thm2.cases(None).len(), 6);
    }
}
