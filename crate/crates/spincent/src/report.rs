//! Machine-readable reports (JSON, CSV) and a plain-text table.

use std::io::Write;

use serde::{Deserialize, Serialize};
use spincent_core::suite::Row;

use crate::config::OutputFormat;
use crate::error::Result;

/// Bumped on any breaking change to [`Report`] or [`ReportRow`].
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: serde_json::Value,
    pub rows: Vec<ReportRow>,
    pub all_pass: bool,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: serde_json::Value, rows: Vec<ReportRow>, elapsed_ms: u64) -> Self {
        let all_pass = rows.iter().all(|r| r.pass);
        Report { schema_version: SCHEMA_VERSION, command, rows, all_pass, elapsed_ms }
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub suite: String,
    pub case: String,
    /// Table row the expected values are taken from.
    pub source: String,
    pub expected_type: String,
    pub expected_dim: Option<usize>,
    pub computed_type: String,
    pub computed_dim: Option<usize>,
    pub center: Option<usize>,
    pub derived: Option<usize>,
    pub killing: Option<String>,
    pub detail: String,
    pub pass: bool,
}

impl From<&Row> for ReportRow {
    fn from(r: &Row) -> Self {
        ReportRow {
            suite: r.suite.to_string(),
            case: r.case.to_string(),
            source: r.source.clone(),
            expected_type: r.expected_type.clone(),
            expected_dim: r.expected_dim,
            computed_type: r.computed_type.clone(),
            computed_dim: r.computed_dim,
            center: r.center,
            derived: r.derived,
            killing: r.killing.map(spincent_core::lie::format_signature),
            detail: r.detail.clone(),
            pass: r.pass,
        }
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    case: &'a str,
    expected_type: &'a str,
    expected_dim: Option<usize>,
    computed_dim: Option<usize>,
    center: Option<usize>,
    derived: Option<usize>,
    killing: &'a str,
    pass: bool,
}

pub fn write_report(report: &Report, format: OutputFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &report.rows {
                let case = format!("{} {}", r.suite, r.case);
                w.serialize(CsvRow {
                    case: &case,
                    expected_type: &r.expected_type,
                    expected_dim: r.expected_dim,
                    computed_dim: r.computed_dim,
                    center: r.center,
                    derived: r.derived,
                    killing: r.killing.as_deref().unwrap_or(""),
                    pass: r.pass,
                })?;
            }
            w.flush()?;
        }
        OutputFormat::Pretty => write_pretty(report, out)?,
    }
    Ok(())
}

fn write_pretty(report: &Report, out: &mut dyn Write) -> Result<()> {
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    let header = ["case", "expected", "exp dim", "computed", "dim", "center", "derived", "killing", "pass"];
    let rows: Vec<[String; 9]> = report
        .rows
        .iter()
        .map(|r| {
            [
                format!("{} {}", r.suite, r.case),
                r.expected_type.clone(),
                opt(r.expected_dim),
                r.computed_type.clone(),
                opt(r.computed_dim),
                opt(r.center),
                opt(r.derived),
                r.killing.clone().unwrap_or_else(|| "-".into()),
                if r.pass { "PASS" } else { "FAIL" }.into(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in &rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    writeln!(
        out,
        "{} of {} rows pass ({} ms)",
        report.rows.iter().filter(|r| r.pass).count(),
        report.rows.len(),
        report.elapsed_ms
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let row = ReportRow {
            suite: "thm1".into(),
            case: "r=6 m=2".into(),
            source: "thm1 r≡6".into(),
            expected_type: "u(2)".into(),
            expected_dim: Some(4),
            computed_type: "u(2)".into(),
            computed_dim: Some(4),
            center: Some(1),
            derived: Some(3),
            killing: Some("(0,3,1)".into()),
            detail: String::new(),
            pass: true,
        };
        Report::new(serde_json::json!({"name": "verify"}), vec![row], 3)
    }

    #[test]
    fn json_round_trip() {
        let rep = sample();
        let mut buf = Vec::new();
        write_report(&rep, OutputFormat::Json, &mut buf).unwrap();
        let back: Report = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.schema_version, SCHEMA_VERSION);
    }

    #[test]
    fn csv_columns() {
        let mut buf = Vec::new();
        write_report(&sample(), OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "case,expected_type,expected_dim,computed_dim,center,derived,killing,pass"
        );
        assert_eq!(lines.next().unwrap(), "thm1 r=6 m=2,u(2),4,4,1,3,\"(0,3,1)\",true");
    }

    #[test]
    fn pretty_mentions_status() {
        let mut buf = Vec::new();
        write_report(&sample(), OutputFormat::Pretty, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("PASS"));
        assert!(text.contains("1 of 1 rows pass"));
    }
}
