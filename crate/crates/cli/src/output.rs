//! Rendering of command results. Coefficients and other big values are
//! always emitted as decimal strings.

use clap::ValueEnum;
use serde::Serialize;

use borwein_core::asymptotics::Cutoff;
use borwein_core::classify::{format_set, render_markdown, SignTable, ZeroCheckReport};
use borwein_core::identities::RegistryReport;
use borwein_core::qseries::IntegerSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    Tsv,
}

/// A header row plus data rows, rendered in any of the tabular formats.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv | Format::Tsv => {
                let delim = if format == Format::Csv { b',' } else { b'\t' };
                let mut w = csv::WriterBuilder::new().delimiter(delim).from_writer(vec![]);
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Markdown => {
                let mut out = format!("| {} |\n|{}\n", self.header.join(" | "), "---|".repeat(self.header.len()));
                for r in &self.rows {
                    out.push_str(&format!("| {} |\n", r.join(" | ")));
                }
                out
            }
            Format::Json => unreachable!("JSON is rendered from the typed value"),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data");
    s.push('\n');
    s
}

/// Series: `n<TAB>c` lines for tsv, an array of decimal strings for JSON.
pub fn series(s: &IntegerSeries, format: Format) -> String {
    match format {
        Format::Tsv => s.to_tsv(),
        Format::Json => {
            let mut out = s.to_json().to_string();
            out.push('\n');
            out
        }
        _ => Table {
            header: vec!["n", "coefficient"],
            rows: s.coeffs().iter().enumerate().map(|(n, c)| vec![n.to_string(), c.to_string()]).collect(),
        }
        .render(format),
    }
}

pub fn sign_tables(tables: &[SignTable], format: Format) -> String {
    match format {
        Format::Json => json(&tables.iter().map(SignTable::to_json).collect::<Vec<_>>()),
        Format::Markdown if tables.iter().all(|r| r.t == tables[0].t) && !tables.is_empty() => {
            render_markdown(tables[0].t, tables, tables.iter().any(|r| r.e.is_some()))
        }
        _ => {
            let opt = |x: Option<u64>| x.map(|v| v.to_string()).unwrap_or_default();
            Table {
                header: vec!["t", "m", "P", "N", "Z", "E", "B", "ups_period", "special_case"],
                rows: tables
                    .iter()
                    .map(|r| {
                        vec![
                            r.t.to_string(),
                            r.m.to_string(),
                            format_set(&r.sets.p),
                            format_set(&r.sets.n),
                            format_set(&r.sets.z),
                            r.e.as_deref().map(format_set).unwrap_or_default(),
                            opt(r.b),
                            opt(r.ups_period),
                            r.special_case.map(|s| s.label().to_string()).unwrap_or_default(),
                        ]
                    })
                    .collect(),
            }
            .render(format)
        }
    }
}

pub fn cutoff(c: &Cutoff, format: Format) -> String {
    if format == Format::Json {
        return json(c);
    }
    Table {
        header: vec!["t", "m", "B", "c_min", "last_nonpositive", "first_certified", "monotone_from"],
        rows: c
            .per_m
            .iter()
            .map(|d| {
                vec![
                    c.t.to_string(),
                    d.m.to_string(),
                    c.b.to_string(),
                    d.c_min.clone(),
                    d.last_nonpositive.to_string(),
                    d.first_certified.to_string(),
                    d.monotone_from.to_string(),
                ]
            })
            .collect(),
    }
    .render(format)
}

/// `alpha_t^(m)(r)` as `sum_k coefficients[k] zeta^k`, `zeta = exp(2 pi i / root_order)`,
/// reduced modulo the cyclotomic polynomial, with a decimal enclosure.
#[derive(Serialize)]
pub struct AlphaReport {
    pub t: u64,
    pub m: u64,
    pub r: u64,
    pub root_order: u32,
    pub coefficients: Vec<i64>,
    pub sign: String,
    pub lower: String,
    pub upper: String,
}

pub fn alpha(a: &AlphaReport, format: Format) -> String {
    if format == Format::Json {
        return json(a);
    }
    let coeffs = a.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
    Table {
        header: vec!["t", "m", "r", "sign", "lower", "upper", "root_order", "coefficients"],
        rows: vec![vec![
            a.t.to_string(),
            a.m.to_string(),
            a.r.to_string(),
            a.sign.clone(),
            a.lower.clone(),
            a.upper.clone(),
            a.root_order.to_string(),
            coeffs,
        ]],
    }
    .render(format)
}

pub fn identities(report: &RegistryReport, format: Format) -> String {
    if format == Format::Json {
        return json(report);
    }
    let mut out = Table {
        header: vec!["id", "order", "status", "first_discrepancy", "statement"],
        rows: report
            .results
            .iter()
            .map(|r| {
                let status = match (&r.error, r.holds) {
                    (Some(e), _) => format!("error: {e}"),
                    (None, true) => "ok".into(),
                    (None, false) => "FAILED".into(),
                };
                vec![r.id.to_string(), r.order.to_string(), status, r.first_discrepancy.map(|n| n.to_string()).unwrap_or_default(), r.statement.to_string()]
            })
            .collect(),
    }
    .render(format);
    if format == Format::Markdown {
        let failed = report.results.iter().filter(|r| !r.holds).count();
        out.push_str(&format!("\n{} identities, {failed} failed\n", report.results.len()));
    }
    out
}

pub fn zero_check(r: &ZeroCheckReport, format: Format) -> String {
    if format == Format::Json {
        return json(r);
    }
    let mut rows: Vec<Vec<String>> = r.flagged.iter().map(|(n, v)| vec![n.to_string(), v.clone(), v.clone(), "documented exception".into()]).collect();
    rows.extend(r.violations.iter().map(|v| vec![v.n.to_string(), v.value.clone(), v.expected.clone(), "violation".into()]));
    let mut out = Table { header: vec!["n", "value", "expected", "kind"], rows }.render(format);
    if format == Format::Markdown {
        out.push_str(&format!(
            "\n({}, {}) up to n = {}: {} zero-residue coefficients checked, {}\n",
            r.t,
            r.m,
            r.n_check,
            r.checked,
            if r.passed { "passed" } else { "FAILED" }
        ));
    }
    out
}
