//! `sphpark`: counts, distributions, enumerations and verification reports
//! for parking functions, spherical parking functions, skeleton-ideal
//! standard monomials and uprooted trees.
//!
//! Exit status: 0 on success or a matching report, 1 when a `verify` report
//! is a mismatch, 2 on usage or parameter errors.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spherical_parking::arbor::{
    enumerate_uprooted, inversion_distribution, uprooted_statistic_distribution, TreeStatistic,
};
use spherical_parking::crosscheck::{Check, WITNESS_CAP};
use spherical_parking::ideal::{count_standard, enumerate_standard};
use spherical_parking::identity::{catalan, enumerate_index_tuples, power, yan_count};
use spherical_parking::seqcore::{
    enumerate_spherical, parking_by_filter, pf_degree_distribution, spherical_degree_distribution,
};
use spherical_parking::{Distribution, ExactInt, Sequence};

use spherical_parking_cli::record::{Emitter, Format, OutputRecord, ParamValue, Payload};

/// Largest `n` accepted by brute-force counts, distributions and enumerations.
const DESK_SCALE: u64 = 10;
const LARGE_STREAM: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "sphpark",
    version,
    about = "Exact counts and identity checks for spherical parking functions"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the size of a family.
    Count(CountArgs),
    /// Print a statistic histogram.
    Dist(DistArgs),
    /// Run a verification check.
    Verify(VerifyArgs),
    /// List the members of a family.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CountObject {
    Pf,
    Spherical,
    Standard,
    Uprooted,
    IndexTuples,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Closed,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(value_enum)]
    object: CountObject,
    #[arg(long)]
    n: u64,
    /// Skeleton index, required for `standard`.
    #[arg(long)]
    k: Option<u64>,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DistObject {
    SphericalDegree,
    PfDegree,
    UprootedRootDegree,
    UprootedSurfaceInversions,
    TreeInversions,
}

#[derive(Args, Debug)]
struct DistArgs {
    #[arg(value_enum)]
    object: DistObject,
    #[arg(long)]
    n: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Theorem,
    Spherical,
    Conjecture,
    Kreweras,
    UCorrespondence,
    RaisedSet,
    Eq2,
    Eq4,
    Eq5,
    Recursion,
    Yan,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Check {
        match c {
            CheckArg::Theorem => Check::Theorem,
            CheckArg::Spherical => Check::Spherical,
            CheckArg::Conjecture => Check::Conjecture,
            CheckArg::Kreweras => Check::Kreweras,
            CheckArg::UCorrespondence => Check::UCorrespondence,
            CheckArg::RaisedSet => Check::RaisedSet,
            CheckArg::Eq2 => Check::Eq2,
            CheckArg::Eq4 => Check::Eq4,
            CheckArg::Eq5 => Check::Eq5,
            CheckArg::Recursion => Check::Recursion,
            CheckArg::Yan => Check::Yan,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: CheckArg,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: Option<u64>,
    /// Report every witness instead of the first ten.
    #[arg(long)]
    all_witnesses: bool,
    /// Include wall-clock time in the report (output is then not reproducible).
    #[arg(long)]
    timing: bool,
    /// Corrupt the right-hand side before reporting; exercises the mismatch path.
    #[arg(long, hide = true)]
    inject_mismatch: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumObject {
    Spherical,
    Standard,
    Uprooted,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(value_enum)]
    object: EnumObject,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: Option<u64>,
    /// Stop after this many objects.
    #[arg(long)]
    limit: Option<u64>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<spherical_parking::Error> for CliError {
    fn from(e: spherical_parking::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn value_name<V: ValueEnum>(v: &V) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn params(pairs: &[(&str, ParamValue)]) -> BTreeMap<String, ParamValue> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn int(v: u64) -> ParamValue {
    ParamValue::Int(v as i64)
}

fn desk_scale(n: u64, what: &str) -> CliResult<()> {
    if n == 0 {
        return Err(usage(format!("{what} needs n >= 1")));
    }
    if n > DESK_SCALE {
        return Err(usage(format!(
            "{what} enumerates objects and is limited to n <= {DESK_SCALE}"
        )));
    }
    Ok(())
}

fn require_k(k: Option<u64>, n: u64, what: &str) -> CliResult<u64> {
    let k = k.ok_or_else(|| usage(format!("{what} requires --k")))?;
    if k >= n {
        return Err(usage(format!("{what} needs 0 <= k <= n - 1, got k = {k}")));
    }
    Ok(k)
}

fn run_count(args: &CountArgs) -> CliResult<OutputRecord> {
    let n = args.n;
    if n == 0 {
        return Err(usage("count needs n >= 1"));
    }
    if args.method == Method::Brute {
        desk_scale(n, "a brute-force count")?;
    }
    let nn = n as usize;
    let mut p = vec![
        ("object", ParamValue::Text(value_name(&args.object))),
        ("n", int(n)),
        ("method", ParamValue::Text(value_name(&args.method))),
    ];
    let value: ExactInt = match (args.object, args.method) {
        (CountObject::Pf, Method::Closed) => power(n as i64 + 1, (n - 1) as u32),
        (CountObject::Pf, Method::Brute) => parking_by_filter(nn).count().into(),
        (CountObject::Spherical, Method::Closed) => {
            if n == 1 {
                ExactInt::from(0)
            } else {
                power(n as i64 - 1, (n - 1) as u32)
            }
        }
        (CountObject::Spherical, Method::Brute) => enumerate_spherical(nn).count().into(),
        (CountObject::Standard, method) => {
            let k = require_k(args.k, n, "count standard")?;
            p.push(("k", int(k)));
            match method {
                Method::Closed => yan_count(n, k)?,
                Method::Brute => count_standard(nn, k as usize)?.into(),
            }
        }
        (CountObject::Uprooted, Method::Closed) => power(n as i64 - 1, (n - 1) as u32),
        (CountObject::Uprooted, Method::Brute) => enumerate_uprooted(nn).count().into(),
        (CountObject::IndexTuples, method) => {
            if n < 2 {
                return Err(usage("index tuples need n >= 2"));
            }
            match method {
                Method::Closed => catalan(n - 1),
                Method::Brute => enumerate_index_tuples(n)?.count().into(),
            }
        }
    };
    Ok(OutputRecord::new(
        "count",
        params(&p),
        Payload::Count { value },
    ))
}

fn run_dist(args: &DistArgs) -> CliResult<OutputRecord> {
    let n = args.n;
    desk_scale(n, "a distribution")?;
    let nn = n as usize;
    let value: Distribution = match args.object {
        DistObject::SphericalDegree => spherical_degree_distribution(nn)?,
        DistObject::PfDegree => pf_degree_distribution(nn)?,
        DistObject::UprootedRootDegree => {
            uprooted_statistic_distribution(nn, TreeStatistic::RootDegree)?
        }
        DistObject::UprootedSurfaceInversions => {
            uprooted_statistic_distribution(nn, TreeStatistic::SurfaceInversions)?
        }
        DistObject::TreeInversions => inversion_distribution(nn)?,
    };
    let p = [
        ("object", ParamValue::Text(value_name(&args.object))),
        ("n", int(n)),
    ];
    Ok(OutputRecord::new(
        "dist",
        params(&p),
        Payload::Distribution { value },
    ))
}

fn run_verify(args: &VerifyArgs) -> CliResult<(OutputRecord, bool)> {
    let check = Check::from(args.check);
    let cap = (!args.all_witnesses).then_some(WITNESS_CAP);
    let mut report = check.run(args.n, args.k, cap)?;
    if args.inject_mismatch {
        report.falsify_rhs();
    }
    if !args.timing {
        report.elapsed_ms = None;
    }
    let mut p = vec![
        ("check", ParamValue::Text(check.name().to_string())),
        ("n", int(args.n)),
    ];
    if let Some(k) = args.k {
        p.push(("k", int(k)));
    }
    let matched = report.is_match();
    Ok((
        OutputRecord::new(
            "verify",
            params(&p),
            Payload::Report {
                value: Box::new(report),
            },
        ),
        matched,
    ))
}

fn expected_stream_size(args: &EnumerateArgs) -> CliResult<ExactInt> {
    let n = args.n;
    Ok(match args.object {
        EnumObject::Spherical | EnumObject::Uprooted => power(n as i64 - 1, (n - 1) as u32),
        EnumObject::Standard => yan_count(n, require_k(args.k, n, "enumerate standard")?)?,
    })
}

fn run_enumerate<W: Write>(args: &EnumerateArgs, out: &mut Emitter<W>) -> CliResult<()> {
    let n = args.n;
    desk_scale(n, "an enumeration")?;
    let nn = n as usize;
    let expected = expected_stream_size(args)?;
    if args.limit.is_none() && expected > ExactInt::from(LARGE_STREAM) {
        eprintln!("warning: streaming {expected} objects; pass --limit to cap the output");
    }
    let mut p = vec![
        ("object", ParamValue::Text(value_name(&args.object))),
        ("n", int(n)),
    ];
    if args.object == EnumObject::Standard {
        p.push(("k", int(require_k(args.k, n, "enumerate standard")?)));
    }
    if let Some(limit) = args.limit {
        p.push(("limit", int(limit)));
    }
    let p = params(&p);
    let limit = args.limit.map_or(usize::MAX, |l| l as usize);
    let seq_payload = |s: Sequence| Payload::Sequence {
        entries: s.into_entries(),
    };
    let items: Box<dyn Iterator<Item = Payload>> = match args.object {
        EnumObject::Spherical => Box::new(enumerate_spherical(nn).map(seq_payload)),
        EnumObject::Standard => {
            let k = require_k(args.k, n, "enumerate standard")?;
            Box::new(enumerate_standard(nn, k as usize)?.map(seq_payload))
        }
        EnumObject::Uprooted => {
            Box::new(enumerate_uprooted(nn).map(|t| Payload::Tree { tree: t.into() }))
        }
    };
    for payload in items.take(limit) {
        out.emit(&OutputRecord::new("enumerate", p.clone(), payload))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> CliResult<u8> {
    let sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = Emitter::new(BufWriter::new(sink), cli.format);
    let status = match &cli.command {
        Command::Count(args) => {
            out.emit(&run_count(args)?)?;
            0
        }
        Command::Dist(args) => {
            out.emit(&run_dist(args)?)?;
            0
        }
        Command::Verify(args) => {
            let (record, matched) = run_verify(args)?;
            out.emit(&record)?;
            if matched {
                0
            } else {
                1
            }
        }
        Command::Enumerate(args) => {
            run_enumerate(args, &mut out)?;
            0
        }
    };
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
