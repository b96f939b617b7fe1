//! Command-line front end. Reports go to the given writer; progress goes to
//! standard error.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::PrimeField;
use crate::census::{check_feasible, count_polynomials, full_census, CountRegime, Method};
use crate::error::{Error, Result};
use crate::monoid::{d_invariant, enumerate_partial_monoids, monoid_table, EMemo};
use crate::witness::{run_suites, Suite, VerdictReport};

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "TRUNCALG_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "truncalg",
    version,
    about = "Subalgebras of truncated polynomial rings over prime fields"
)]
pub struct Cli {
    /// Report format; JSON is canonical.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Echelon,
    Subspace,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Echelon => Method::Echelon,
            MethodArg::Subspace => Method::Subspace,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Tables,
    Witness,
    Families,
    Frobenius,
    Minimality,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Tables => vec![Suite::Tables],
            SuiteArg::Witness => vec![Suite::Witness],
            SuiteArg::Families => vec![Suite::Families],
            SuiteArg::Frobenius => vec![Suite::Frobenius],
            SuiteArg::Minimality => vec![Suite::Minimality],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partial monoids of [0, n-1] with e, d and co-size.
    Monoids {
        #[arg(long)]
        n: usize,
    },
    /// Partial monoids of [0, n-1] tallied by co-size and e.
    MonoidTable {
        #[arg(long)]
        n: usize,
    },
    /// Count polynomials in q for every codimension.
    Counts {
        #[arg(long)]
        n: usize,
        /// Evaluate each polynomial at this q.
        #[arg(long)]
        eval: Option<u64>,
    },
    /// Enumerate every subalgebra of F_q[x]/x^n.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Echelon)]
        method: MethodArg,
        /// Run beyond the default feasibility limits.
        #[arg(long)]
        force: bool,
    },
    /// Run verification suites over F_q.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        q: u32,
    },
}

/// Parses `args` (program name first), runs, writes the report to `out` and
/// returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(std::io::stderr(), "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    if let Err(e) = configure_workers() {
        eprintln!("truncalg: {e}");
        return EXIT_USAGE;
    }
    match run(&cli) {
        Ok((report, pass)) => {
            if out.write_all(report.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            if pass {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            eprintln!("truncalg: {e}");
            EXIT_USAGE
        }
    }
}

fn configure_workers() -> Result<()> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Error::Unsupported(format!("{WORKERS_ENV}={raw:?} is not a positive integer"))
    })?;
    // A second call (e.g. from tests) finds the pool already built; that is fine.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialises");
    s.push('\n');
    s
}

fn fmt_set(xs: &[usize]) -> String {
    let s: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", s.join(","))
}

/// Validates options, then computes the report. Returns the rendered report
/// and whether every verdict passed.
pub fn run(cli: &Cli) -> Result<(String, bool)> {
    match &cli.command {
        Command::Monoids { n } => Ok((monoids(*n, cli.format)?, true)),
        Command::MonoidTable { n } => Ok((table(*n, cli.format)?, true)),
        Command::Counts { n, eval } => Ok((counts(*n, *eval, cli.format)?, true)),
        Command::Census {
            n,
            q,
            method,
            force,
        } => {
            let field = PrimeField::new(*q)?;
            let method = Method::from(*method);
            check_feasible(method, field, *n, *force)?;
            let start = Instant::now();
            eprintln!("truncalg: {method} census of F_{q}[x]/x^{n}");
            let rep = full_census(field, *n, method, *force)?;
            eprintln!(
                "truncalg: {} subalgebras in {:.2?}",
                rep.total,
                start.elapsed()
            );
            let s = match cli.format {
                Format::Json => to_json(&rep),
                Format::Csv => rep.to_csv(),
                Format::Md => rep.to_markdown(),
            };
            Ok((s, true))
        }
        Command::Verify { suite, q } => {
            let field = PrimeField::new(*q)?;
            let suites = suite.suites();
            let start = Instant::now();
            eprintln!(
                "truncalg: running {} over F_{q}",
                suites
                    .iter()
                    .map(|s| s.name())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let reports = run_suites(field, &suites)?;
            for r in &reports {
                eprintln!(
                    "truncalg: suite {}: {} ({} claims, {} failed)",
                    r.suite,
                    if r.pass { "pass" } else { "FAIL" },
                    r.claims.len(),
                    r.failures().count()
                );
            }
            eprintln!("truncalg: done in {:.2?}", start.elapsed());
            let pass = reports.iter().all(|r| r.pass);
            Ok((
                render_verdicts(field.modulus(), &reports, pass, cli.format),
                pass,
            ))
        }
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    version: &'static str,
    p: u32,
    pass: bool,
    suites: &'a [VerdictReport],
}

fn render_verdicts(p: u32, reports: &[VerdictReport], pass: bool, format: Format) -> String {
    match format {
        Format::Json => to_json(&VerifyOutput {
            version: crate::VERSION,
            p,
            pass,
            suites: reports,
        }),
        Format::Csv => {
            let mut s = String::from("suite,id,pass,claim,detail\n");
            for r in reports {
                s.extend(r.to_csv().lines().skip(1).map(|l| format!("{l}\n")));
            }
            s
        }
        Format::Md => reports
            .iter()
            .map(VerdictReport::to_markdown)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

#[derive(Serialize)]
struct MonoidEntry {
    #[serde(rename = "E")]
    members: Vec<usize>,
    cosize: usize,
    e: usize,
    d: usize,
}

#[derive(Serialize)]
struct MonoidList {
    version: &'static str,
    n: usize,
    count: usize,
    monoids: Vec<MonoidEntry>,
}

fn monoids(n: usize, format: Format) -> Result<String> {
    let mut memo = EMemo::new();
    let entries: Vec<MonoidEntry> = enumerate_partial_monoids(n)?
        .into_iter()
        .map(|e| MonoidEntry {
            cosize: e.cosize(),
            e: memo.get(&e),
            d: d_invariant(&e),
            members: e.elements(),
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(&MonoidList {
            version: crate::VERSION,
            n,
            count: entries.len(),
            monoids: entries,
        }),
        Format::Csv => {
            let mut s = String::from("E,cosize,e,d\n");
            for m in &entries {
                s.push_str(&format!(
                    "\"{}\",{},{},{}\n",
                    fmt_set(&m.members),
                    m.cosize,
                    m.e,
                    m.d
                ));
            }
            s
        }
        Format::Md => {
            let mut s = format!(
                "<!-- {} -->\n### Partial monoids of [0, {}]\n\n| E | co-size | e | d |\n|---|---|---|---|\n",
                crate::VERSION,
                n - 1
            );
            for m in &entries {
                s.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    fmt_set(&m.members),
                    m.cosize,
                    m.e,
                    m.d
                ));
            }
            s
        }
    })
}

#[derive(Serialize)]
struct TableRow {
    c: usize,
    counts: BTreeMap<usize, u64>,
    total: u64,
}

#[derive(Serialize)]
struct TableOutput {
    version: &'static str,
    n: usize,
    rows: Vec<TableRow>,
    total: u64,
}

fn table(n: usize, format: Format) -> Result<String> {
    let t = monoid_table(n)?;
    let max_e = t.max_e();
    let rows: Vec<TableRow> = t
        .cells
        .iter()
        .map(|(&c, cells)| TableRow {
            c,
            counts: cells
                .iter()
                .filter(|(_, &k)| k > 0)
                .map(|(&e, &k)| (e, k))
                .collect(),
            total: t.row_total(c),
        })
        .collect();
    let total = rows.iter().map(|r| r.total).sum();
    Ok(match format {
        Format::Json => to_json(&TableOutput {
            version: crate::VERSION,
            n,
            rows,
            total,
        }),
        Format::Csv => {
            let mut s = String::from("c");
            for e in 0..=max_e {
                s.push_str(&format!(",e{e}"));
            }
            s.push_str(",total\n");
            for r in &rows {
                s.push_str(&r.c.to_string());
                for e in 0..=max_e {
                    s.push_str(&format!(",{}", r.counts.get(&e).copied().unwrap_or(0)));
                }
                s.push_str(&format!(",{}\n", r.total));
            }
            s
        }
        Format::Md => {
            let mut s = format!(
                "<!-- {} -->\n### Partial monoids of [0, {}] by co-size c and e\n\n| c \\ e |",
                crate::VERSION,
                n - 1
            );
            for e in 0..=max_e {
                s.push_str(&format!(" {e} |"));
            }
            s.push_str(" total |\n|---|");
            s.push_str(&"---|".repeat(max_e + 2));
            s.push('\n');
            for r in &rows {
                s.push_str(&format!("| {} |", r.c));
                for e in 0..=max_e {
                    match r.counts.get(&e) {
                        Some(k) => s.push_str(&format!(" {k} |")),
                        None => s.push_str(" - |"),
                    }
                }
                s.push_str(&format!(" {} |\n", r.total));
            }
            s.push_str(&format!("\nTotal: {total}\n"));
            s
        }
    })
}

#[derive(Serialize)]
struct CountEntry {
    c: usize,
    coeffs: Vec<u64>,
    polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

#[derive(Serialize)]
struct CountOutput {
    version: &'static str,
    n: usize,
    regime: CountRegime,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    polynomials: Vec<CountEntry>,
}

fn counts(n: usize, eval: Option<u64>, format: Format) -> Result<String> {
    if n < 2 {
        return Err(Error::CodimensionOutOfRange { n, c: 1 });
    }
    let polys = count_polynomials(n)?;
    let entries: Vec<CountEntry> = polys
        .iter()
        .enumerate()
        .map(|(i, p)| CountEntry {
            c: i + 1,
            coeffs: p.coeffs().to_vec(),
            polynomial: p.to_string(),
            // Decimal string: values can exceed what JSON readers hold exactly.
            value: eval.map(|q| p.eval(q).to_string()),
        })
        .collect();
    let regime = CountRegime::for_bound(n);
    Ok(match format {
        Format::Json => to_json(&CountOutput {
            version: crate::VERSION,
            n,
            regime,
            q: eval,
            polynomials: entries,
        }),
        Format::Csv => {
            let mut s = String::from("c,polynomial");
            if eval.is_some() {
                s.push_str(",value");
            }
            s.push('\n');
            for e in &entries {
                s.push_str(&format!("{},{}", e.c, e.polynomial));
                if let Some(v) = &e.value {
                    s.push_str(&format!(",{v}"));
                }
                s.push('\n');
            }
            s
        }
        Format::Md => {
            let mut s = format!(
                "<!-- {} -->\n### Count polynomials for n = {n}{}\n\n| c | polynomial |",
                crate::VERSION,
                match regime {
                    CountRegime::Exact => "",
                    CountRegime::ThinModelPrediction => " (thin-model prediction)",
                }
            );
            if let Some(q) = eval {
                s.push_str(&format!(" q = {q} |\n|---|---|---|\n"));
            } else {
                s.push_str("\n|---|---|\n");
            }
            for e in &entries {
                s.push_str(&format!("| {} | {} |", e.c, e.polynomial));
                if let Some(v) = &e.value {
                    s.push_str(&format!(" {v} |"));
                }
                s.push('\n');
            }
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let code = main_with(
            std::iter::once("truncalg").chain(args.iter().copied()),
            &mut out,
        );
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn counts_eval() {
        let (code, out) = run_args(&["counts", "--n", "10", "--eval", "2", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.contains("\n5,5q^4+3q^3+2q^2+q+1,115\n"), "{out}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["census", "--n", "5", "--q", "4"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["census", "--n", "20", "--q", "2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["monoids"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["counts", "--n", "1"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["verify", "--suite", "nope", "--q", "2"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn table_markdown_row() {
        let (code, out) = run_args(&["monoid-table", "--n", "10", "--format", "md"]);
        assert_eq!(code, 0);
        let row5 = out.lines().find(|l| l.starts_with("| 5 |")).unwrap();
        assert!(row5.ends_with(" 12 |"), "{row5}");
    }

    #[test]
    fn witness_verdict() {
        let (code, out) = run_args(&["verify", "--suite", "witness", "--q", "5"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["suites"][0]["suite"], "witness");
    }
}
