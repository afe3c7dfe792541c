//! The `alphaseq` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (bad membership,
//! extremal element, `n` over the cap), 3 oracle mismatch.

use std::ffi::OsString;
use std::io::{self, BufWriter, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::adjacency::{predecessor_ln, successor_dn, successor_ln};
use crate::elementary::{predecessor_step_an, successor_step_an};
use crate::enumeration::{enumerate_an, enumerate_an_desc, enumerate_dn, enumerate_ln, enumerate_ln_desc};
use crate::error::Error;
use crate::oracle::{Oracle, DEFAULT_ORACLE_CAP};
use crate::sequence::{least_element, AlphaSequence, SetContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

pub const DEFAULT_ENUMERATION_CAP: u64 = 30;
pub const ENUMERATION_CAP_VAR: &str = "ALPHASEQ_MAX_N";
pub const ORACLE_CAP_VAR: &str = "ALPHASEQ_ORACLE_MAX_N";

/// Upper bounds on `n` for streaming enumeration and for the exhaustive
/// oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub enumeration: u64,
    pub oracle: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { enumeration: DEFAULT_ENUMERATION_CAP, oracle: DEFAULT_ORACLE_CAP }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let read = |var: &str, default: u64| match std::env::var(var) {
            Ok(v) => v.trim().parse().unwrap_or_else(|_| {
                log::warn!("ignoring unparsable {var}={v:?}");
                default
            }),
            Err(_) => default,
        };
        let d = Limits::default();
        Limits {
            enumeration: read(ENUMERATION_CAP_VAR, d.enumeration),
            oracle: read(ORACLE_CAP_VAR, d.oracle),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "alphaseq", version, about = "Order and enumerate lexical and nonlexical sequences")]
struct Cli {
    /// Log diagnostic detail (e.g. every star factorization candidate) to stderr
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetArg {
    An,
    Ln,
    Dn,
}

impl SetArg {
    fn name(self) -> &'static str {
        match self {
            SetArg::An => "an",
            SetArg::Ln => "ln",
            SetArg::Dn => "dn",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stream an ordered set
    List {
        #[arg(long, value_enum)]
        set: SetArg,
        n: u64,
        /// Largest element first
        #[arg(long)]
        desc: bool,
        /// Emit only the first K elements
        #[arg(long, value_name = "K")]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Adjacent successor (for dn: the full insertion chain)
    Succ {
        #[arg(long, value_enum)]
        set: SetArg,
        n: u64,
        seq: AlphaSequence,
    },
    /// Adjacent predecessor
    Pred {
        #[arg(long, value_enum)]
        set: SetArg,
        n: u64,
        seq: AlphaSequence,
    },
    /// Print whether a sequence is lexical
    Lexical { seq: AlphaSequence },
    /// Compare two sequences: less, equal or greater
    Compare { a: AlphaSequence, b: AlphaSequence },
    /// Longest common left factor closed with the smaller differing element
    Meet { a: AlphaSequence, b: AlphaSequence },
    /// Star product
    Star { a: AlphaSequence, b: AlphaSequence },
    /// j-th harmonic
    Harmonic { j: u32, seq: AlphaSequence },
    /// Least element of L_n
    Least { n: u64 },
    /// Diff adjacency enumeration against the brute-force oracle
    Verify { n_min: u64, n_max: u64 },
    /// Time adjacency-based L_n generation against filter-and-sort
    Bench {
        n: u64,
        #[arg(long, default_value_t = 1)]
        repeat: u32,
    },
}

/// The JSON shape emitted by `list --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u64,
    pub set: String,
    pub count: usize,
    pub items: Vec<AlphaSequence>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(Error),
    Mismatch,
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = Result<(), CliError>;

/// Runs one invocation with limits read from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_limits(args, Limits::from_env(), out, err)
}

pub fn run_with_limits<I, T>(args: I, limits: Limits, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    if cli.verbose {
        let _ = env_logger::Builder::new()
            .filter_level(log::LevelFilter::Debug)
            .try_init();
    }

    let mut buffered = BufWriter::new(out);
    let result = dispatch(cli.command, limits, &mut buffered).and_then(|()| {
        buffered.flush()?;
        Ok(())
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(CliError::Mismatch) => {
            let _ = writeln!(err, "error: enumeration disagrees with the oracle");
            EXIT_MISMATCH
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn check_cap(n: u64, cap: u64) -> Result<(), Error> {
    if n == 0 {
        Err(Error::InvalidN(n))
    } else if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

fn dispatch(command: Command, limits: Limits, out: &mut dyn Write) -> CliResult {
    match command {
        Command::List { set, n, desc, limit, format } => {
            check_cap(n, limits.enumeration)?;
            list(set, n, desc, limit, format, out)
        }
        Command::Succ { set, n, seq } => {
            let next = match set {
                SetArg::An => {
                    SetContext::an(n)?.check(&seq)?;
                    vec![successor_step_an(&seq)?]
                }
                SetArg::Ln => vec![successor_ln(&seq, n)?],
                SetArg::Dn => successor_dn(&seq, n)?,
            };
            for s in next {
                writeln!(out, "{s}")?;
            }
            Ok(())
        }
        Command::Pred { set, n, seq } => {
            let prev = match set {
                SetArg::An => {
                    SetContext::an(n)?.check(&seq)?;
                    predecessor_step_an(&seq)?
                }
                SetArg::Ln => predecessor_ln(&seq, n)?,
                SetArg::Dn => {
                    return Err(CliError::Usage(
                        "pred supports --set an and --set ln only".into(),
                    ))
                }
            };
            writeln!(out, "{prev}")?;
            Ok(())
        }
        Command::Lexical { seq } => {
            writeln!(out, "{}", seq.is_lexical())?;
            Ok(())
        }
        Command::Compare { a, b } => {
            let word = match a.cmp(&b) {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            writeln!(out, "{word}")?;
            Ok(())
        }
        Command::Meet { a, b } => {
            writeln!(out, "{}", a.meet(&b)?)?;
            Ok(())
        }
        Command::Star { a, b } => {
            writeln!(out, "{}", a.star(&b))?;
            Ok(())
        }
        Command::Harmonic { j, seq } => {
            writeln!(out, "{}", seq.harmonic(j))?;
            Ok(())
        }
        Command::Least { n } => {
            writeln!(out, "{}", least_element(n)?)?;
            Ok(())
        }
        Command::Verify { n_min, n_max } => verify(n_min, n_max, limits, out),
        Command::Bench { n, repeat } => {
            check_cap(n, limits.oracle)?;
            bench(n, repeat.max(1), limits, out)
        }
    }
}

fn list(
    set: SetArg,
    n: u64,
    desc: bool,
    limit: Option<usize>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let stream: Box<dyn Iterator<Item = AlphaSequence>> = match (set, desc) {
        (SetArg::An, false) => Box::new(enumerate_an(n, None)?),
        (SetArg::An, true) => Box::new(enumerate_an_desc(n)?),
        (SetArg::Ln, false) => Box::new(enumerate_ln(n)?),
        (SetArg::Ln, true) => Box::new(enumerate_ln_desc(n)?),
        (SetArg::Dn, false) => Box::new(enumerate_dn(n)?),
        (SetArg::Dn, true) => {
            // D_n is only walked upwards
            let mut all: Vec<_> = enumerate_dn(n)?.collect();
            all.reverse();
            Box::new(all.into_iter())
        }
    };
    let stream = stream.take(limit.unwrap_or(usize::MAX));

    match format {
        Format::Text => {
            for s in stream {
                writeln!(out, "{s}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .flexible(true)
                .has_headers(false)
                .from_writer(out);
            for s in stream {
                if s.is_zero() {
                    w.write_record(["0"])?;
                } else {
                    w.write_record(s.iter().map(u64::to_string))?;
                }
            }
            w.flush()?;
        }
        Format::Json => {
            let items: Vec<_> = stream.collect();
            let record = OutputRecord {
                n,
                set: set.name().to_string(),
                count: items.len(),
                items,
            };
            serde_json::to_writer(&mut *out, &record)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn verify(n_min: u64, n_max: u64, limits: Limits, out: &mut dyn Write) -> CliResult {
    if n_min == 0 || n_min > n_max {
        return Err(CliError::Usage(format!("invalid range {n_min}..={n_max}")));
    }
    let reports = Oracle::with_cap(limits.oracle).verify_range(n_min, n_max)?;
    let mut failed = 0;
    for r in &reports {
        match r.mismatches.first() {
            None => writeln!(out, "{}_{}: ok ({} elements)", r.set_kind, r.n, r.expected.len())?,
            Some(m) => {
                failed += 1;
                let show = |s: &Option<AlphaSequence>| {
                    s.as_ref().map_or_else(|| "<end>".to_string(), |s| s.to_string())
                };
                writeln!(
                    out,
                    "{}_{}: MISMATCH at position {}: expected {}, got {} ({} mismatches)",
                    r.set_kind,
                    r.n,
                    m.position,
                    show(&m.expected),
                    show(&m.actual),
                    r.mismatches.len()
                )?;
            }
        }
    }
    if failed > 0 {
        writeln!(out, "{failed} of {} sets mismatched", reports.len())?;
        return Err(CliError::Mismatch);
    }
    writeln!(out, "all {} sets match for n in {n_min}..={n_max}", reports.len())?;
    Ok(())
}

fn bench(n: u64, repeat: u32, limits: Limits, out: &mut dyn Write) -> CliResult {
    let oracle = Oracle::with_cap(limits.oracle);

    let start = Instant::now();
    let mut adjacency_count = 0;
    for _ in 0..repeat {
        adjacency_count = enumerate_ln(n)?.count();
    }
    let adjacency_secs = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let mut oracle_count = 0;
    for _ in 0..repeat {
        oracle_count = oracle.ln(n)?.len();
    }
    let oracle_secs = start.elapsed().as_secs_f64();

    let rate = |count: usize, secs: f64| (count as f64 * repeat as f64) / secs.max(1e-9);
    writeln!(out, "L_{n}: {adjacency_count} elements, {repeat} repetition(s)")?;
    writeln!(
        out,
        "adjacency:       {adjacency_secs:.6} s total, {:.0} elements/s",
        rate(adjacency_count, adjacency_secs)
    )?;
    writeln!(
        out,
        "filter-and-sort: {oracle_secs:.6} s total, {:.0} elements/s",
        rate(oracle_count, oracle_secs)
    )?;
    writeln!(out, "speedup: {:.2}x", oracle_secs / adjacency_secs.max(1e-9))?;
    if adjacency_count != oracle_count {
        return Err(CliError::Mismatch);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("alphaseq").chain(args.iter().copied());
        let code = run_with_limits(argv, Limits::default(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn helpers() {
        assert_eq!(run_capture(&["least", "8"]).1, "2,1,1,2,1\n");
        assert_eq!(run_capture(&["least", "1"]).1, "0\n");
        assert_eq!(run_capture(&["lexical", "1,1"]), (0, "false\n".into(), String::new()));
        assert_eq!(run_capture(&["lexical", "2,1,2,1"]).1, "true\n");
        assert_eq!(run_capture(&["compare", "2,1", "3"]).1, "less\n");
        assert_eq!(run_capture(&["compare", "0", "0"]).1, "equal\n");
        assert_eq!(run_capture(&["meet", "3,1,2,1", "4,2,1"]).1, "3\n");
        assert_eq!(run_capture(&["star", "3", "1"]).1, "4,3\n");
        assert_eq!(run_capture(&["harmonic", "3", "0"]).1, "2,1,1,2,1\n");
    }

    #[test]
    fn adjacency_queries() {
        assert_eq!(run_capture(&["succ", "--set", "ln", "11", "3,2,3,2"]).1, "3,1,1,3,2\n");
        assert_eq!(run_capture(&["pred", "--set", "ln", "8", "4,3"]).1, "3,1,2,1\n");
        assert_eq!(run_capture(&["succ", "--set", "an", "4", "2,2"]).1, "2,1,1\n");
        assert_eq!(run_capture(&["pred", "--set", "an", "4", "1,1,1,1"]).1, "1,2,1\n");
        assert_eq!(run_capture(&["succ", "--set", "dn", "8", "3,1,2,1"]).1, "3\n4,3\n");
    }

    #[test]
    fn exit_codes() {
        let (code, out, err) = run_capture(&["succ", "--set", "ln", "7", "6"]);
        assert_eq!((code, out.as_str()), (EXIT_DOMAIN, ""));
        assert!(err.contains("maximal element"), "{err}");
        assert_eq!(run_capture(&["succ", "--set", "ln", "7", "1,5"]).0, EXIT_DOMAIN);
        assert_eq!(run_capture(&["pred", "--set", "an", "4", "1,3"]).0, EXIT_DOMAIN);
        assert_eq!(run_capture(&["meet", "2,1", "2,1,1"]).0, EXIT_DOMAIN);
        assert_eq!(run_capture(&["list", "--set", "ln", "31"]).0, EXIT_DOMAIN);
        assert_eq!(run_capture(&["list", "--set", "ln", "0"]).0, EXIT_DOMAIN);
        assert_eq!(run_capture(&["verify", "1", "21"]).0, EXIT_DOMAIN);
        assert_eq!(run_capture(&["least", "0"]).0, EXIT_DOMAIN);
        assert_eq!(run_capture(&["pred", "--set", "dn", "8", "4,3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["lexical", "1,x"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["list", "--set", "xn", "4"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "5", "2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn list_formats() {
        let (code, text, _) = run_capture(&["list", "--set", "dn", "4"]);
        assert_eq!(code, 0);
        assert_eq!(text, "0\n1\n2,1\n3\n");
        assert_eq!(run_capture(&["list", "--set", "dn", "4", "--format", "csv"]).1, text);
        assert_eq!(
            run_capture(&["list", "--set", "dn", "4", "--format", "json"]).1,
            "{\"n\":4,\"set\":\"dn\",\"count\":4,\"items\":[[],[1],[2,1],[3]]}\n"
        );
        assert_eq!(
            run_capture(&["list", "--set", "dn", "4", "--desc", "--limit", "2"]).1,
            "3\n2,1\n"
        );
        assert_eq!(run_capture(&["list", "--set", "ln", "7", "--limit", "0"]).1, "");
    }

    #[test]
    fn limits_from_env_fall_back_to_defaults() {
        assert_eq!(Limits::default().enumeration, 30);
        assert_eq!(Limits::default().oracle, 20);
        let (code, _, _) = {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let limits = Limits { enumeration: 5, oracle: 5 };
            let code = run_with_limits(["alphaseq", "list", "--set", "an", "6"], limits, &mut out, &mut err);
            (code, out, err)
        };
        assert_eq!(code, EXIT_DOMAIN);
    }

    #[test]
    fn verify_and_bench_succeed() {
        let (code, out, _) = run_capture(&["verify", "1", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 19);
        let (code, out, _) = run_capture(&["bench", "10", "--repeat", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("L_10: 51 elements"), "{out}");
    }
}
