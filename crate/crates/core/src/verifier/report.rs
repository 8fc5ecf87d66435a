use std::fmt;
use std::io::{self, Write};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::descriptor::{Family, GroupSpec};
use super::millis;

/// Verdict for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub spec: GroupSpec,
    pub order: u64,
    pub s_value: u64,
    pub phi_value: u64,
    pub exponent: u64,
    pub sylow_cyclic: bool,
    /// `s_value == order`
    pub equality: bool,
    /// `equality == sylow_cyclic`
    pub consistent: bool,
    /// Lattice-formula `S`, zm family only.
    pub formula_s: Option<u64>,
    pub elapsed: Duration,
    pub violations: Vec<String>,
}

/// The line-delimited wire form of a [`TheoremReport`].
///
/// `ms` is only present when timings are requested, so that default output is
/// byte-stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub label: String,
    pub family: Family,
    pub order: u64,
    pub s: u64,
    pub phi: u64,
    pub exponent: u64,
    pub sylow_cyclic: bool,
    pub equality: bool,
    pub consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula_s: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
}

impl TheoremReport {
    pub fn record(&self, timings: bool) -> ReportRecord {
        ReportRecord {
            label: self.spec.label().to_string(),
            family: self.spec.family(),
            order: self.order,
            s: self.s_value,
            phi: self.phi_value,
            exponent: self.exponent,
            sylow_cyclic: self.sylow_cyclic,
            equality: self.equality,
            consistent: self.consistent,
            formula_s: self.formula_s,
            ms: timings.then(|| millis(self.elapsed)),
        }
    }
}

impl ReportRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record fields are plain values")
    }
}

pub fn write_jsonl<'a, W: Write + ?Sized>(
    out: &mut W,
    reports: impl IntoIterator<Item = &'a TheoremReport>,
    timings: bool,
) -> io::Result<()> {
    for r in reports {
        writeln!(out, "{}", r.record(timings).to_json_line())?;
    }
    Ok(())
}

pub fn write_csv<'a, W: Write + ?Sized>(
    out: &mut W,
    reports: impl IntoIterator<Item = &'a TheoremReport>,
    timings: bool,
) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec![
        "label", "family", "order", "s", "phi", "exponent", "sylow_cyclic", "equality",
        "consistent", "formula_s",
    ];
    if timings {
        header.push("ms");
    }
    w.write_record(&header)?;
    for r in reports {
        let rec = r.record(timings);
        let mut row = vec![
            rec.label,
            rec.family.to_string(),
            rec.order.to_string(),
            rec.s.to_string(),
            rec.phi.to_string(),
            rec.exponent.to_string(),
            rec.sylow_cyclic.to_string(),
            rec.equality.to_string(),
            rec.consistent.to_string(),
            rec.formula_s.map(|v| v.to_string()).unwrap_or_default(),
        ];
        if let Some(ms) = rec.ms {
            row.push(ms.to_string());
        }
        w.write_record(&row)?;
    }
    w.flush()
}

pub fn write_table<'a, W: Write + ?Sized>(
    out: &mut W,
    reports: impl IntoIterator<Item = &'a TheoremReport>,
    timings: bool,
) -> io::Result<()> {
    let reports: Vec<&TheoremReport> = reports.into_iter().collect();
    let width = reports
        .iter()
        .map(|r| r.spec.label().len())
        .max()
        .unwrap_or(0)
        .max("group".len());
    write!(
        out,
        "{:<width$}  {:>6}  {:>6}  {:>6}  {:>6}  {:>5}  {:>8}  {:>10}  {:>9}",
        "group", "|G|", "S(G)", "φ(G)", "exp", "sylow", "equality", "consistent", "formula_S"
    )?;
    if timings {
        write!(out, "  {:>6}", "ms")?;
    }
    writeln!(out)?;
    for r in reports {
        write!(
            out,
            "{:<width$}  {:>6}  {:>6}  {:>6}  {:>6}  {:>5}  {:>8}  {:>10}  {:>9}",
            r.spec.label(),
            r.order,
            r.s_value,
            r.phi_value,
            r.exponent,
            yes_no(r.sylow_cyclic),
            yes_no(r.equality),
            yes_no(r.consistent),
            r.formula_s.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
        )?;
        if timings {
            write!(out, "  {:>6}", millis(r.elapsed))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Counts over a corpus run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub equality: usize,
    pub strict: usize,
    pub violations: usize,
    pub errors: usize,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "groups checked: {}, equality cases: {}, strict cases: {}, violations: {}, errors: {}",
            self.groups, self.equality, self.strict, self.violations, self.errors
        )
    }
}
