//! The `diamforge` command line.
//!
//! Every verb prints one JSON document on stdout. Exit status is 0 on
//! success, 1 when a verification fails and 2 for bad arguments or input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::assembly::{construct_optimal, small_table};
use crate::complex::{certify, expand_pair, Certificate, LabelsLayout};
use crate::genseq::{self, verify_generating_sequence, GeneratingSequence};
use crate::hampack::{self, Decomposition, PartitionReport};
use crate::oracle::{self, SearchConfig};

/// Environment variable that replaces the default search budget.
pub const BUDGET_ENV: &str = "DIAMFORGE_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "diamforge", version, about = "Maximum-diameter 2-complexes and Hamilton square packings")]
pub struct Cli {
    /// Reserved; every construction is deterministic and ignores it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Missing {
    None,
    #[value(name = "12")]
    OneTwo,
    #[value(name = "1248")]
    OneTwoFourEight,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an optimal complex on N vertices.
    Construct {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check a labels/layout pair read from FILE ("-" for stdin).
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Accept circular walks.
        #[arg(long)]
        circular_ok: bool,
    },
    /// Print the generating sequence for N = 4k+1.
    Genseq {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "none")]
        missing: Missing,
    },
    /// Partition K_n into squares of Hamilton cycles and check it.
    Decompose {
        #[arg(long, group = "source")]
        p: Option<u32>,
        #[arg(long, group = "source")]
        builtin: Option<u32>,
        #[arg(long, group = "source")]
        input: Option<PathBuf>,
    },
    /// Exhaustive search for small N.
    Search {
        #[arg(long)]
        n: u32,
        /// Node limit, 0 for none. Defaults to $DIAMFORGE_BUDGET, then 10^8.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the stored optimal complex for N, if there is one.
    Table {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Serialize)]
struct PairWithCertificate<'a> {
    #[serde(flatten)]
    pair: &'a LabelsLayout,
    certificate: &'a Certificate,
}

#[derive(Serialize)]
struct SequenceOutput<'a> {
    n: u32,
    terms: &'a [u32],
    turns: Vec<usize>,
    missing: Vec<u32>,
}

#[derive(Serialize)]
struct DecompositionOutput<'a> {
    #[serde(flatten)]
    decomposition: &'a Decomposition,
    #[serde(flatten)]
    report: &'a PartitionReport,
}

/// Failure with its exit code.
struct Fail(i32, String);

fn usage(msg: impl ToString) -> Fail {
    Fail(2, msg.to_string())
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("output types serialize")
}

fn read_input(path: &PathBuf) -> Result<String, Fail> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    Ok(s)
}

fn budget_from_env() -> Result<Option<u64>, Fail> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse::<u64>().map(Some).map_err(|_| usage(format!("{BUDGET_ENV}={v} is not a number"))),
        Err(_) => Ok(None),
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Fail> {
    let mut emit = |s: String| writeln!(out, "{s}").map_err(|e| Fail(1, e.to_string()));
    match cmd {
        Command::Construct { n, format } => {
            let (seq, cert) = construct_optimal(n).map_err(usage)?;
            let mut pair = crate::complex::encode_triples(&seq).map_err(|e| Fail(1, e.to_string()))?;
            pair.n = n;
            match format {
                Format::Json => emit(json(&PairWithCertificate { pair: &pair, certificate: &cert }))?,
                Format::Text => {
                    let d = cert.diameter.map_or("none".into(), |d| d.to_string());
                    emit(format!("n: {n}\ngood: {}\ndiameter: {d}\noptimum: {}", cert.good, cert.optimum))?;
                    emit(format!("covered edges: {}\nuncovered: {:?}", cert.covered_edges, cert.uncovered_edges))?;
                    emit(format!("labels: {:?}\nlayout: {:?}", pair.labels, pair.layout))?;
                }
            }
            Ok(if cert.matches_optimum { 0 } else { 1 })
        }
        Command::Verify { input, circular_ok } => {
            let pair: LabelsLayout = serde_json::from_str(&read_input(&input)?)
                .map_err(|e| usage(format!("bad labels/layout JSON: {e}")))?;
            pair.validate().map_err(usage)?;
            if pair.n < 3 {
                return Err(usage("n must be at least 3"));
            }
            let seq = expand_pair(&pair).map_err(|e| Fail(1, e.to_string()))?;
            let cert = certify(&seq, pair.n).map_err(usage)?;
            emit(json(&cert))?;
            if cert.circular && !circular_ok {
                return Err(Fail(1, "walk is circular; pass --circular-ok to accept it".into()));
            }
            Ok(if cert.good { 0 } else { 1 })
        }
        Command::Genseq { n, missing } => {
            if n % 4 != 1 {
                return Err(usage(format!("n = {n} is not 1 mod 4")));
            }
            let k = (n - 1) / 4;
            let gs: GeneratingSequence = match missing {
                Missing::None => genseq::gs_full(k),
                Missing::OneTwo => genseq::gs_missing_12(k).map(|p| p.0),
                Missing::OneTwoFourEight => genseq::gs_missing_1248(k).map(|p| p.0),
            }
            .map_err(usage)?;
            let report = verify_generating_sequence(&gs);
            emit(json(&SequenceOutput {
                n: gs.n,
                terms: &gs.terms,
                turns: gs.turns.iter().copied().collect(),
                missing: report.missing,
            }))?;
            Ok(if report.valid { 0 } else { 1 })
        }
        Command::Decompose { p, builtin, input } => {
            let d = match (p, builtin, input) {
                (Some(p), _, _) => hampack::decompose_prime(p).map_err(usage)?,
                (_, Some(105), _) => hampack::builtin_105().map_err(|e| Fail(1, e.to_string()))?,
                (_, Some(other), _) => return Err(usage(format!("no built-in data for n = {other}"))),
                (_, _, Some(path)) => serde_json::from_str(&read_input(&path)?)
                    .map_err(|e| usage(format!("bad decomposition JSON: {e}")))?,
                _ => return Err(usage("one of --p, --builtin or --input is required")),
            };
            let report = hampack::verify_partition(&d);
            emit(json(&DecompositionOutput { decomposition: &d, report: &report }))?;
            Ok(if report.success { 0 } else { 1 })
        }
        Command::Search { n, budget, jobs } => {
            let budget = match budget {
                Some(b) => Some(b),
                None => budget_from_env()?,
            }
            .unwrap_or(oracle::DEFAULT_BUDGET);
            let cfg = SearchConfig { budget: (budget > 0).then_some(budget), jobs: jobs.max(1), prune: true };
            let r = oracle::search_with(n, &cfg).map_err(usage)?;
            emit(json(&r))?;
            Ok(0)
        }
        Command::Table { n } => {
            let entry = small_table(n).ok_or_else(|| Fail(1, format!("no stored entry for n = {n}")))?;
            let seq = expand_pair(&entry.pair).map_err(|e| Fail(1, e.to_string()))?;
            let cert = certify(&seq, n).map_err(usage)?;
            emit(json(&PairWithCertificate { pair: &entry.pair, certificate: &cert }))?;
            Ok(0)
        }
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "diamforge: {msg}");
            code
        }
    }
}
