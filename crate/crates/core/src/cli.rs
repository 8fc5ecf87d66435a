//! The `zmgroup` command line.
//!
//! Exit codes: 0 success, 1 domain failure (invalid triple, theorem
//! violation), 2 usage or parse error, 3 resource cap exceeded.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::group_engine::DEFAULT_ORDER_CAP;
use crate::verifier::{
    self, build_corpus, run_corpus, Caps, Family, GroupAnalysis, GroupSpec, VerifyError,
};
use crate::zm::{self, ZmError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Jsonl,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "zmgroup", version, about = "Subgroup sums S(G) and ZM-group lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check gcd(m,n) = gcd(m,r-1) = 1 and r^n ≡ 1 (mod m)
    CheckParams {
        m: u64,
        n: u64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
    },
    /// List the subgroup lattice of ZM(m,n,r) by triples (m1, n1, s)
    Lattice {
        m: u64,
        n: u64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
        /// Also list the members b^x a^y of each subgroup as (x,y)
        #[arg(long)]
        elements: bool,
    },
    /// Compute |G|, exp(G), φ(G) and S(G) for a group descriptor
    Sfun {
        /// cyclic:N, dihedral:K, dicyclic:K, symmetric:N, alternating:N,
        /// metacyclic:M,N,R, zm:M,N,R or product:(DESC)x(DESC)
        desc: String,
        #[arg(long)]
        subgroups: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Check the theorem over a corpus of small groups
    Verify {
        #[arg(long, default_value_t = 64)]
        max_order: u64,
        /// Comma-separated families (default: all)
        #[arg(long, value_delimiter = ',')]
        families: Vec<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
        #[arg(long)]
        parallel: bool,
        /// Also write the jsonl stream to this file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include per-group elapsed milliseconds (output is then not byte-stable)
        #[arg(long)]
        timings: bool,
    },
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = BufWriter::new(stdout.lock());
    let mut err = stderr.lock();
    let code = run_with(args, &mut out, &mut err);
    let _ = out.flush();
    code
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::CheckParams { m, n, r } => check_params(out, m, n, r),
        Command::Lattice {
            m,
            n,
            r,
            format,
            elements,
        } => lattice(out, m, n, r, format, elements),
        Command::Sfun {
            desc,
            subgroups,
            format,
        } => sfun(out, &desc, subgroups, format),
        Command::Verify {
            max_order,
            families,
            format,
            parallel,
            out: path,
            timings,
        } => verify(out, err, max_order, &families, format, parallel, path, timings),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "zmgroup: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_FAILURE, format!("I/O error: {e}"))
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let code = match &e {
            e if e.is_cap() => EXIT_CAP,
            VerifyError::Parse(_) => EXIT_USAGE,
            VerifyError::Zm(ZmError::Zero(_)) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ZmError> for Failure {
    fn from(e: ZmError) -> Self {
        VerifyError::from(e).into()
    }
}

type CmdResult = Result<i32, Failure>;

fn check_params(out: &mut dyn Write, m: u64, n: u64, r: i64) -> CmdResult {
    let (canonical, checks) = zm::check_conditions(m, n, r)?;
    writeln!(out, "ZM({m},{n},{canonical})")?;
    for c in &checks {
        let verdict = if c.holds { "pass" } else { "FAIL" };
        writeln!(out, "  {verdict}  {}", c.detail)?;
    }
    if checks.iter().all(|c| c.holds) {
        writeln!(out, "valid: |G| = {}", m * n)?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "invalid")?;
        Ok(EXIT_FAILURE)
    }
}

#[derive(Serialize)]
struct LatticeRow {
    m1: u64,
    n1: u64,
    s: u64,
    order: u64,
    cyclic: bool,
    phi: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<[u64; 2]>>,
}

#[derive(Serialize)]
struct LatticeFooter {
    s: u64,
    order: u64,
    equality: bool,
}

fn lattice(
    out: &mut dyn Write,
    m: u64,
    n: u64,
    r: i64,
    format: OutputFormat,
    elements: bool,
) -> CmdResult {
    let p = match zm::validate_zm_params(m, n, r) {
        Ok(p) => p,
        Err(ZmError::Invalid(violations)) => {
            let list: Vec<&str> = violations.iter().map(|v| v.detail.as_str()).collect();
            return Err(Failure::new(
                EXIT_FAILURE,
                format!("ZM({m},{n},{r}) is invalid: {}", list.join("; ")),
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let entries = zm::lattice(&p, elements);
    let total: u64 = entries.iter().map(|e| e.phi_value).sum();
    let footer = if total == p.order() {
        format!("S = {total} = |G|")
    } else {
        format!("S = {total} ≠ |G| = {}", p.order())
    };
    let rows: Vec<LatticeRow> = entries
        .iter()
        .map(|e| LatticeRow {
            m1: e.triple.m1,
            n1: e.triple.n1,
            s: e.triple.s,
            order: e.order,
            cyclic: e.cyclic,
            phi: e.phi_value,
            elements: e
                .members
                .as_ref()
                .map(|set| set.iter().map(|x| [x.x, x.y]).collect()),
        })
        .collect();
    match format {
        OutputFormat::Table => {
            writeln!(out, "{p}, |G| = {}", p.order())?;
            writeln!(out, "{:>5} {:>5} {:>5} {:>6} {:>6} {:>6}", "m1", "n1", "s", "order", "cyclic", "φ")?;
            for (row, e) in rows.iter().zip(&entries) {
                write!(
                    out,
                    "{:>5} {:>5} {:>5} {:>6} {:>6} {:>6}",
                    row.m1,
                    row.n1,
                    row.s,
                    row.order,
                    if row.cyclic { "yes" } else { "no" },
                    row.phi
                )?;
                if let Some(members) = &e.members {
                    let list: Vec<String> = members.iter().map(|x| x.to_string()).collect();
                    write!(out, "  {{{}}}", list.join(","))?;
                }
                writeln!(out)?;
            }
            writeln!(out, "{footer}")?;
        }
        OutputFormat::Jsonl => {
            for row in &rows {
                writeln!(out, "{}", serde_json::to_string(row).expect("plain values"))?;
            }
            let f = LatticeFooter {
                s: total,
                order: p.order(),
                equality: total == p.order(),
            };
            writeln!(out, "{}", serde_json::to_string(&f).expect("plain values"))?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["m1", "n1", "s", "order", "cyclic", "phi", "elements"])
                .map_err(io::Error::from)?;
            for (row, e) in rows.iter().zip(&entries) {
                let members = e
                    .members
                    .as_ref()
                    .map(|set| set.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                w.write_record([
                    row.m1.to_string(),
                    row.n1.to_string(),
                    row.s.to_string(),
                    row.order.to_string(),
                    row.cyclic.to_string(),
                    row.phi.to_string(),
                    members,
                ])
                .map_err(io::Error::from)?;
            }
            w.flush()?;
        }
    }
    Ok(if total == p.order() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

#[derive(Serialize)]
struct SubgroupRow {
    order: usize,
    exponent: u64,
    phi: u64,
    cyclic: bool,
}

fn sfun(out: &mut dyn Write, desc: &str, subgroups: bool, format: OutputFormat) -> CmdResult {
    let spec: GroupSpec = desc.parse()?;
    let analysis = GroupAnalysis::new(&spec, Caps::default())?;
    let report = analysis.theorem_report();
    let g = analysis.group();
    let rows: Vec<SubgroupRow> = analysis
        .subgroups()
        .iter()
        .map(|h| SubgroupRow {
            order: h.order(),
            exponent: h.exponent(g),
            phi: h.phi(g),
            cyclic: h.is_cyclic(g),
        })
        .collect();
    match format {
        OutputFormat::Table => {
            writeln!(out, "group   {}", spec.label())?;
            writeln!(out, "|G|     {}", report.order)?;
            writeln!(out, "exp(G)  {}", report.exponent)?;
            writeln!(out, "φ(G)    {}", report.phi_value)?;
            writeln!(out, "S(G)    {}", report.s_value)?;
            if let Some(f) = report.formula_s {
                writeln!(out, "S(G) from lattice formula  {f}")?;
            }
            writeln!(
                out,
                "all Sylow subgroups cyclic: {}",
                if report.sylow_cyclic { "yes" } else { "no" }
            )?;
            if report.equality {
                writeln!(out, "equality: S(G) = |G| = {}", report.order)?;
            } else {
                writeln!(out, "strict: S(G) = {} > |G| = {}", report.s_value, report.order)?;
            }
            if subgroups {
                writeln!(out, "{} subgroups:", rows.len())?;
                writeln!(out, "{:>6} {:>6} {:>6} {:>6}", "order", "exp", "φ", "cyclic")?;
                for row in &rows {
                    writeln!(
                        out,
                        "{:>6} {:>6} {:>6} {:>6}",
                        row.order,
                        row.exponent,
                        row.phi,
                        if row.cyclic { "yes" } else { "no" }
                    )?;
                }
            }
        }
        OutputFormat::Jsonl => {
            writeln!(out, "{}", report.record(false).to_json_line())?;
            if subgroups {
                for row in &rows {
                    writeln!(out, "{}", serde_json::to_string(row).expect("plain values"))?;
                }
            }
        }
        OutputFormat::Csv => {
            verifier::write_csv(out, [&report], false)?;
            if subgroups {
                writeln!(out)?;
                let mut w = csv::Writer::from_writer(&mut *out);
                for row in &rows {
                    w.serialize(row).map_err(io::Error::from)?;
                }
                w.flush()?;
            }
        }
    }
    if report.violations.is_empty() {
        Ok(EXIT_OK)
    } else {
        Err(Failure::new(EXIT_FAILURE, report.violations.join("; ")))
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    out: &mut dyn Write,
    err: &mut dyn Write,
    max_order: u64,
    families: &[String],
    format: OutputFormat,
    parallel: bool,
    path: Option<PathBuf>,
    timings: bool,
) -> CmdResult {
    if max_order == 0 {
        return Err(Failure::new(EXIT_USAGE, "--max-order must be positive"));
    }
    if max_order > DEFAULT_ORDER_CAP as u64 {
        return Err(Failure::new(
            EXIT_CAP,
            format!("--max-order {max_order} exceeds the order cap {DEFAULT_ORDER_CAP}"),
        ));
    }
    let families: BTreeSet<Family> = if families.is_empty() {
        Family::ALL.into_iter().collect()
    } else {
        families
            .iter()
            .map(|f| f.parse())
            .collect::<Result<_, VerifyError>>()?
    };
    let specs = build_corpus(max_order, &families);
    let run = run_corpus(&specs, Caps::default(), parallel);

    match format {
        OutputFormat::Table => verifier::write_table(out, run.reports(), timings)?,
        OutputFormat::Jsonl => verifier::write_jsonl(out, run.reports(), timings)?,
        OutputFormat::Csv => verifier::write_csv(out, run.reports(), timings)?,
    }
    if let Some(path) = path {
        let mut file = BufWriter::new(File::create(&path)?);
        verifier::write_jsonl(&mut file, run.reports(), timings)?;
        file.flush()?;
    }

    for o in &run.outcomes {
        for v in o.violations() {
            writeln!(err, "violation: {}: {v}", o.report.spec.label())?;
        }
    }
    for (label, e) in &run.errors {
        writeln!(err, "error: {label}: {e}")?;
    }
    let summary = run.summary();
    match format {
        OutputFormat::Table => writeln!(out, "{summary}")?,
        _ => writeln!(err, "{summary}")?,
    }

    Ok(if summary.violations > 0 {
        EXIT_FAILURE
    } else if run.errors.iter().any(|(_, e)| e.is_cap()) {
        EXIT_CAP
    } else if summary.errors > 0 {
        EXIT_FAILURE
    } else {
        EXIT_OK
    })
}
