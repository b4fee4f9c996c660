//! Exact matrix export: rationals as `"p/q"`, Gaussian rationals as
//! `"p/q+r/s*i"`, dense row-major.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use spincent_core::centralizer::{build_embedding, so_centralizer, Backend, Shape};
use spincent_core::real_form::Label;
use spincent_core::scalar::{Gaussian, Rational};
use spincent_core::sparse::{QMatrix, SparseMatrix};
use spincent_core::spinor::{build_kappa, CMatrix};
use spincent_core::tensor::spinor_rep;

use crate::error::{CliError, Result};
use crate::report::SCHEMA_VERSION;

pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| CliError::Parse(format!("{s:?}: {e}")))
}

pub fn format_gaussian(z: &Gaussian) -> String {
    let im = format_rational(&z.im);
    let sign = if im.starts_with('-') { "" } else { "+" };
    format!("{}{sign}{im}*i", format_rational(&z.re))
}

pub fn parse_gaussian(s: &str) -> Result<Gaussian> {
    let bad = || CliError::Parse(format!("{s:?} is not of the form p/q+r/s*i"));
    let body = s.trim().strip_suffix("*i").ok_or_else(bad)?;
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last()
        .ok_or_else(bad)?;
    let (re, im) = body.split_at(split);
    let im = im.strip_prefix('+').unwrap_or(im);
    Ok(Gaussian::new(parse_rational(re)?, parse_rational(im)?))
}

/// A list of square matrices with enough context to rebuild them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixSet {
    pub schema_version: u32,
    /// `rep`, `centralizer` or `kappa`.
    pub kind: String,
    /// `rational` or `gaussian`.
    pub field: String,
    pub r: usize,
    pub label: Option<String>,
    pub m: Option<usize>,
    pub m2: Option<usize>,
    pub size: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
}

impl MatrixSet {
    fn new(kind: &str, field: &str, r: usize, size: usize, matrices: Vec<Vec<Vec<String>>>) -> Self {
        MatrixSet {
            schema_version: SCHEMA_VERSION,
            kind: kind.into(),
            field: field.into(),
            r,
            label: None,
            m: None,
            m2: None,
            size,
            matrices,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn rational_matrices(&self) -> Result<Vec<QMatrix>> {
        self.expect_field("rational")?;
        self.matrices.iter().map(|m| decode(m, parse_rational)).collect()
    }

    pub fn gaussian_matrices(&self) -> Result<Vec<CMatrix>> {
        self.expect_field("gaussian")?;
        self.matrices.iter().map(|m| decode(m, parse_gaussian)).collect()
    }

    fn expect_field(&self, field: &str) -> Result<()> {
        if self.field != field {
            return Err(CliError::Parse(format!("matrix set holds {} entries, not {field}", self.field)));
        }
        Ok(())
    }
}

pub fn encode_rational(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_dense().iter().map(|row| row.iter().map(format_rational).collect()).collect()
}

pub fn encode_gaussian(m: &CMatrix) -> Vec<Vec<String>> {
    m.to_dense().iter().map(|row| row.iter().map(format_gaussian).collect()).collect()
}

fn decode<T: spincent_core::scalar::Ring>(
    rows: &[Vec<String>],
    parse: impl Fn(&str) -> Result<T>,
) -> Result<SparseMatrix<T>> {
    let dense = rows.iter().map(|r| r.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    if dense.iter().any(|r| r.len() != dense.len()) {
        return Err(CliError::Parse("matrix is not square".into()));
    }
    Ok(SparseMatrix::from_dense(&dense))
}

fn label_name(l: Label) -> &'static str {
    match l {
        Label::Plus => "plus",
        Label::Minus => "minus",
    }
}

/// Generators `e_ie_j` acting on `Δ̃_r` (or `Δ̃_r^±`).
pub fn export_rep(r: usize, label: Option<Label>) -> Result<MatrixSet> {
    let rep = spinor_rep(r, label)?;
    let mut set = MatrixSet::new("rep", "rational", r, rep.dim(), rep.gens().iter().map(encode_rational).collect());
    set.label = label.map(|l| label_name(l).into());
    Ok(set)
}

pub fn export_centralizer(r: usize, shape: Shape, backend: Backend) -> Result<MatrixSet> {
    let emb = build_embedding(r, shape)?;
    let cb = so_centralizer(&emb, backend)?;
    let mut set = MatrixSet::new("centralizer", "rational", r, emb.n(), cb.basis().iter().map(encode_rational).collect());
    match shape {
        Shape::Single(m) => set.m = Some(m),
        Shape::Pair(a, b) => {
            set.m = Some(a);
            set.m2 = Some(b);
        }
    }
    Ok(set)
}

/// The complex generators `κ_n(e_1), ..., κ_n(e_n)`.
pub fn export_kappa(n: usize) -> Result<MatrixSet> {
    let k = build_kappa(n)?;
    Ok(MatrixSet::new("kappa", "gaussian", n, k.dim(), k.gens().iter().map(encode_gaussian).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use spincent_core::scalar::frac as ratio;

    #[test]
    fn scalar_strings() {
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&ratio(5, 1)), "5/1");
        assert_eq!(parse_rational("7").unwrap(), ratio(7, 1));
        assert!(parse_rational("1/0").is_err());
        let z = Gaussian::new(ratio(1, 2), ratio(-3, 4));
        assert_eq!(format_gaussian(&z), "1/2-3/4*i");
        assert_eq!(parse_gaussian("1/2-3/4*i").unwrap(), z);
        assert_eq!(parse_gaussian("-1/1+0/1*i").unwrap(), Gaussian::new(ratio(-1, 1), ratio(0, 1)));
        assert!(parse_gaussian("1/2").is_err());
    }

    #[test]
    fn rep_export_shapes() {
        let set = export_rep(4, Some(Label::Plus)).unwrap();
        assert_eq!(set.matrices.len(), 6);
        assert_eq!(set.size, 4);
        let back = MatrixSet::from_json(&set.to_json().unwrap()).unwrap();
        assert_eq!(back.rational_matrices().unwrap(), spinor_rep(4, Some(Label::Plus)).unwrap().gens());
    }

    #[test]
    fn centralizer_exports() {
        assert_eq!(export_centralizer(3, Shape::Single(1), Backend::Exact).unwrap().matrices.len(), 3);
        assert!(export_centralizer(8, Shape::Pair(1, 1), Backend::Exact).unwrap().matrices.is_empty());
    }

    #[test]
    fn kappa_round_trip() {
        let set = export_kappa(3).unwrap();
        let back = MatrixSet::from_json(&set.to_json().unwrap()).unwrap();
        assert_eq!(back.gaussian_matrices().unwrap(), build_kappa(3).unwrap().gens());
        assert!(back.rational_matrices().is_err());
    }
}
