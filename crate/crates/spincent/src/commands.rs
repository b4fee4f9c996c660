//! The four commands; each returns a [`Report`] or a [`MatrixSet`].

use std::time::Instant;

use rayon::prelude::*;
use spincent_core::centralizer::{embedding_size, Backend, Shape, MAX_EXACT_N, MAX_FLOAT_N};
use spincent_core::real_form::{build_real_form, d_dim, realize_rep, v_count, volume_action, Label, MAX_REAL_R};
use spincent_core::sparse::QMatrix;
use spincent_core::suite::{self, SuiteKind};

use crate::config::{BackendArg, RunConfig};
use crate::error::{CliError, Result};
use crate::export::{export_centralizer, export_kappa, export_rep, MatrixSet};
use crate::phi::{phi_check, phi_plan, phi_row};
use crate::report::{Report, ReportRow};

fn elapsed_ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn echo(cfg: &RunConfig) -> serde_json::Value {
    serde_json::to_value(cfg).unwrap_or(serde_json::Value::Null)
}

/// Realized dimension of `Δ̃_r` and the number of inequivalent modules,
/// told apart by the scalar through which the volume element acts.
pub fn realized_dims(r: usize) -> Result<(usize, usize)> {
    if !r.is_multiple_of(4) {
        return Ok((build_real_form(r, None)?.dim(), 1));
    }
    let mut scalars = Vec::new();
    let mut dim = 0;
    for l in [Label::Plus, Label::Minus] {
        let rep = realize_rep(build_real_form(r, Some(l))?)?;
        dim = rep.dim();
        let w = volume_action(&rep)?;
        let s = w.get(0, 0);
        if w != QMatrix::scalar(dim, s.clone()) {
            return Err(CliError::Core(spincent_core::Error::VerificationFailed(format!(
                "volume element is not scalar on Δ̃_{r}"
            ))));
        }
        if !scalars.contains(&s) {
            scalars.push(s);
        }
    }
    Ok((dim, scalars.len()))
}

/// `d_r`, `v_r` for `r = 1..=r_max`: residue formula against the realized forms.
pub fn dims(cfg: &RunConfig) -> Result<Report> {
    let t = Instant::now();
    let r_max = cfg.r.unwrap_or(MAX_REAL_R);
    if r_max == 0 || r_max > MAX_REAL_R {
        return Err(CliError::Usage(format!("dims needs 1 ≤ r ≤ {MAX_REAL_R}")));
    }
    let rows = (1..=r_max)
        .into_par_iter()
        .map(|r| {
            let (d, v) = (d_dim(r)?, v_count(r)?);
            let (dr, vr) = realized_dims(r)?;
            Ok(ReportRow {
                suite: "dims".into(),
                case: format!("r={r}"),
                source: format!("dims r≡{}", r % 8),
                expected_type: format!("d={d} v={v}"),
                expected_dim: Some(d),
                computed_type: format!("d={dr} v={vr}"),
                computed_dim: Some(dr),
                center: None,
                derived: None,
                killing: None,
                detail: String::new(),
                pass: d == dr && v == vr,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(echo(cfg), rows, elapsed_ms(t)))
}

pub fn shape_of(cfg: &RunConfig, r: usize) -> Result<Shape> {
    let m = cfg.m.ok_or_else(|| CliError::Usage("--m is required".into()))?;
    match (r.is_multiple_of(4), cfg.m2) {
        (true, Some(m2)) => Ok(Shape::Pair(m, m2)),
        (true, None) => Err(CliError::Usage(format!("r = {r} ≡ 0 mod 4 needs --m2"))),
        (false, None) => Ok(Shape::Single(m)),
        (false, Some(_)) => Err(CliError::Usage(format!("--m2 only applies when r ≡ 0 mod 4, got r = {r}"))),
    }
}

/// Rejects cases larger than the configured guard or the backend's cap.
fn guard(cfg: &RunConfig, r: usize, shape: Shape) -> Result<()> {
    if r > MAX_REAL_R {
        return Err(CliError::Usage(format!("r must be at most {MAX_REAL_R}")));
    }
    let n = embedding_size(r, shape)?;
    cfg.check_size(n)?;
    let cap = match cfg.backend {
        BackendArg::Exact => MAX_EXACT_N,
        BackendArg::Float => MAX_FLOAT_N,
    };
    if n > cap {
        return Err(CliError::Guard { n, max: cap });
    }
    Ok(())
}

pub fn centralize(cfg: &RunConfig) -> Result<Report> {
    let t = Instant::now();
    let r = cfg.require_r()?;
    let shape = shape_of(cfg, r)?;
    guard(cfg, r, shape)?;
    let kind = if matches!(shape, Shape::Pair(..)) { SuiteKind::Thm2 } else { SuiteKind::Thm1 };
    let row = suite::centralizer_row(kind, r, shape, cfg.backend.into())?;
    Ok(Report::new(echo(cfg), vec![ReportRow::from(&row)], elapsed_ms(t)))
}

/// Suite names accepted by `verify`, in `all` order.
pub const VERIFY_SUITES: [&str; 8] = ["prop1", "thm1", "thm2", "lemma", "table2", "decomp", "gamma", "phi"];

/// Runs a suite (or `all`) with the exact backend; rows keep case order.
pub fn verify(cfg: &RunConfig, name: &str) -> Result<Report> {
    let t = Instant::now();
    if cfg.backend == BackendArg::Float {
        return Err(CliError::Usage("verify always runs exactly; --backend float is rejected".into()));
    }
    let names: Vec<&str> = match name {
        "all" => VERIFY_SUITES.to_vec(),
        n if VERIFY_SUITES.contains(&n) => vec![n],
        n => return Err(CliError::Usage(format!("unknown suite {n:?}; expected one of {VERIFY_SUITES:?} or all"))),
    };
    let mut rows = Vec::new();
    for n in names {
        if n == "phi" {
            let plan = phi_plan(cfg.r, cfg.seed);
            let outs = plan.into_par_iter().map(|(r, s)| phi_check(r, s)).collect::<Result<Vec<_>>>()?;
            rows.extend(outs.iter().map(phi_row));
            continue;
        }
        let kind: SuiteKind = n.parse()?;
        let out = kind
            .cases(cfg.r)
            .into_par_iter()
            .map(|c| suite::run(kind, c))
            .collect::<spincent_core::Result<Vec<_>>>()?;
        rows.extend(out.iter().map(ReportRow::from));
    }
    Ok(Report::new(echo(cfg), rows, elapsed_ms(t)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportKind {
    Rep,
    Centralizer,
    Kappa,
}

pub fn export(cfg: &RunConfig, kind: ExportKind) -> Result<MatrixSet> {
    let r = cfg.require_r()?;
    match kind {
        ExportKind::Rep => {
            let label = cfg.label.map(Label::from);
            if (r % 4 == 0) != label.is_some() {
                return Err(CliError::Usage("--label plus|minus is required exactly when r ≡ 0 mod 4".into()));
            }
            cfg.check_size(d_dim(r)?)?;
            export_rep(r, label)
        }
        ExportKind::Centralizer => {
            let shape = shape_of(cfg, r)?;
            guard(cfg, r, shape)?;
            export_centralizer(r, shape, Backend::from(cfg.backend))
        }
        ExportKind::Kappa => {
            cfg.check_size(1 << (r / 2))?;
            export_kappa(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(r: usize, m: Option<usize>, m2: Option<usize>) -> RunConfig {
        let mut c = RunConfig::new("test");
        c.r = Some(r);
        c.m = m;
        c.m2 = m2;
        c
    }

    #[test]
    fn shapes() {
        assert_eq!(shape_of(&cfg(4, Some(1), Some(1)), 4).unwrap(), Shape::Pair(1, 1));
        assert!(shape_of(&cfg(4, Some(1), None), 4).is_err());
        assert!(shape_of(&cfg(3, Some(1), Some(2)), 3).is_err());
        assert!(shape_of(&cfg(3, None, None), 3).is_err());
    }

    #[test]
    fn centralize_examples() {
        for (r, m, m2, ty) in [(2, 2, None, "u(2)"), (4, 1, Some(1), "sp(1)+sp(1)"), (7, 2, None, "so(2)")] {
            let rep = centralize(&cfg(r, Some(m), m2)).unwrap();
            assert!(rep.all_pass);
            assert_eq!(rep.rows[0].expected_type, ty);
        }
    }

    #[test]
    fn guards() {
        let mut c = cfg(11, Some(2), None);
        c.max_n = 64;
        assert!(matches!(centralize(&c), Err(CliError::Guard { n: 128, max: 64 })));
        let mut c = cfg(3, Some(1), None);
        c.backend = BackendArg::Float;
        assert!(matches!(verify(&c, "lemma"), Err(CliError::Usage(_))));
        assert!(matches!(verify(&cfg(3, None, None), "nope"), Err(CliError::Usage(_))));
    }

    #[test]
    fn small_dims() {
        let rep = dims(&cfg(8, None, None)).unwrap();
        assert!(rep.all_pass);
        let d: Vec<_> = rep.rows.iter().map(|r| r.computed_dim.unwrap()).collect();
        assert_eq!(d, [1, 2, 4, 4, 8, 8, 8, 8]);
    }
}
