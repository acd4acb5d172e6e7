//! Plain-table, CSV and JSON-lines renderings of an [`IndexReport`].

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::indices::{IndexReport, Rational, VoterIndices};

pub const COLUMNS: [&str; 11] = [
    "voter",
    "weights",
    "tbp",
    "pbp",
    "pii",
    "ppi",
    "sat",
    "nsat",
    "psat",
    "pgi",
    "formula_used",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Plain,
    Csv,
    JsonLines,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(ReportFormat::Plain),
            "csv" => Ok(ReportFormat::Csv),
            "jsonl" => Ok(ReportFormat::JsonLines),
            other => Err(Error::InvalidSystem(format!("unknown format `{other}`"))),
        }
    }
}

/// Exact `p/q`, denominator always shown.
pub fn exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal to six places.
pub fn decimal(r: &Rational) -> String {
    format!("{:.6}", *r.numer() as f64 / *r.denom() as f64)
}

fn both(r: &Rational) -> String {
    format!("{} ({})", exact(r), decimal(r))
}

fn maybe(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "undefined".to_string(), both)
}

fn weights(v: &VoterIndices) -> String {
    if v.weights.is_empty() {
        "-".to_string()
    } else {
        v.weights
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn cells(v: &VoterIndices) -> [String; 11] {
    [
        v.name.clone(),
        weights(v),
        v.tbp.to_string(),
        both(&v.pbp),
        maybe(&v.pii),
        maybe(&v.ppi),
        both(&v.sat),
        maybe(&v.nsat),
        maybe(&v.psat),
        v.pgi.to_string(),
        v.formula_used.to_string(),
    ]
}

fn json_rational(r: &Option<Rational>) -> Value {
    match r {
        Some(r) => json!({ "exact": exact(r), "decimal": decimal(r) }),
        None => json!("undefined"),
    }
}

/// One JSON object per voter, keys in column order.
pub fn voter_json(v: &VoterIndices) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("voter".into(), json!(v.name));
    map.insert("weights".into(), json!(v.weights));
    map.insert("tbp".into(), json!(v.tbp));
    map.insert("pbp".into(), json_rational(&Some(v.pbp)));
    map.insert("pii".into(), json_rational(&v.pii));
    map.insert("ppi".into(), json_rational(&v.ppi));
    map.insert("sat".into(), json_rational(&Some(v.sat)));
    map.insert("nsat".into(), json_rational(&v.nsat));
    map.insert("psat".into(), json_rational(&v.psat));
    map.insert("pgi".into(), json!(v.pgi));
    map.insert("formula_used".into(), json!(v.formula_used.name()));
    Value::Object(map)
}

pub fn render(report: &IndexReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Plain => plain(report),
        ReportFormat::Csv => csv_table(report),
        ReportFormat::JsonLines => report
            .voters
            .iter()
            .map(|v| voter_json(v).to_string() + "\n")
            .collect(),
    }
}

fn plain(report: &IndexReport) -> String {
    let rows: Vec<[String; 11]> = report.voters.iter().map(cells).collect();
    let mut widths = COLUMNS.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &[&str]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut out, &COLUMNS);
    for row in &rows {
        line(&mut out, &row.each_ref().map(String::as_str));
    }
    let _ = writeln!(
        out,
        "\nn = {}, wt(f) = {}, wt(~f) = {}",
        report.n, report.passing, report.failing
    );
    if report.restricted {
        out.push_str(
            "restricted: forbidden coalitions fail; pii, ppi, sat, nsat and psat are taken over all 2^n assignments\n",
        );
    }
    out
}

fn csv_table(report: &IndexReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS).expect("write to memory");
    for v in &report.voters {
        w.write_record(cells(v)).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 cells")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::full_report;
    use crate::voting::VotingSystem;

    fn report() -> IndexReport {
        full_report(&VotingSystem::k_out_of_n(2, 3).unwrap(), 24).unwrap()
    }

    #[test]
    fn rational_forms() {
        assert_eq!(exact(&Rational::new(2, 4)), "1/2");
        assert_eq!(exact(&Rational::new(3, 1)), "3/1");
        assert_eq!(decimal(&Rational::new(1, 3)), "0.333333");
    }

    #[test]
    fn plain_has_header_and_rows() {
        let text = render(&report(), ReportFormat::Plain);
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("voter"));
        let x1 = lines.next().unwrap();
        assert!(x1.starts_with("X1"));
        assert!(x1.contains("1/2 (0.500000)"));
        assert!(x1.contains("quotient-difference"));
    }

    #[test]
    fn csv_columns() {
        let text = render(&report(), ReportFormat::Csv);
        let first = text.lines().next().unwrap();
        assert_eq!(first, COLUMNS.join(","));
        assert_eq!(text.lines().count(), 4);
    }

    #[test]
    fn jsonl_keys_in_order() {
        let text = render(&report(), ReportFormat::JsonLines);
        let v: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, COLUMNS);
        assert_eq!(v["pbp"]["exact"], "1/2");
    }

    #[test]
    fn formats_parse() {
        assert_eq!("jsonl".parse::<ReportFormat>().unwrap(), ReportFormat::JsonLines);
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
