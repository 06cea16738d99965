//! The `riordan` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use riordan_core::catalog::{named_riordan, named_series, registry_listing};
use riordan_core::error::Error;
use riordan_core::harness::{builtin_suite, exit_code, reports_to_json};
use riordan_core::matrix::Triangle;
use riordan_core::quasi::QuasiRiordan;
use riordan_core::riordan::RiordanPair;
use riordan_core::series::{parse_rational, Rational, Series};
use riordan_core::weighted::{big_c_transform, c_transform, WeightSeq, WeightTri};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_MATH: i32 = 65;

#[derive(Debug, Parser)]
#[command(
    name = "riordan",
    about = "Exact Riordan, quasi-Riordan and weighted Riordan arrays"
)]
struct Cli {
    /// Coefficients kept for every series
    #[arg(long, global = true, env = "RIORDAN_PREC", default_value_t = 64)]
    prec: usize,

    /// Number of rows (and columns) to emit
    #[arg(long, global = true, default_value_t = 10)]
    order: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct PairSpec {
    /// Builtin name, or `g=<series>;f=<series>`
    spec: Option<String>,
    #[arg(long, conflicts_with = "spec")]
    name: Option<String>,
    /// Series literal or builtin series name
    #[arg(long, requires = "f", conflicts_with_all = ["spec", "name"])]
    g: Option<String>,
    #[arg(long, requires = "g", conflicts_with_all = ["spec", "name"])]
    f: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Leading block of a Riordan array
    Triangle(PairSpec),
    /// Leading block of the quasi-Riordan array built from the same pair
    Quasi(PairSpec),
    /// Product of two Riordan arrays
    Mul { a: String, b: String },
    /// Inverse of a Riordan array
    Inv(PairSpec),
    /// A- and Z-sequences
    Az(PairSpec),
    /// Weighted transform of a Riordan array
    Ctransform {
        #[command(flatten)]
        pair: PairSpec,
        /// `factorial`, `power:k`, `laguerre`, a rational list, or a CSV file of a weight triangle
        #[arg(long)]
        weight: String,
    },
    /// Run the identity suite
    Verify {
        #[arg(long, default_value = "builtin")]
        suite: String,
        /// Cap every identity's largest row index
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Registry operations
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// Every builtin name, sorted
    List,
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownName(_) => Failure::Usage(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Series literal (`"1, 1/2, -3/4"`) or builtin series name.
pub fn parse_series(text: &str, prec: usize) -> Result<Series, Error> {
    let t = text.trim();
    if t.starts_with(|c: char| c.is_ascii_alphabetic()) {
        named_series(t, prec)
    } else {
        Series::parse_literal(t, prec)
    }
}

/// Builtin array name, or `g=<series>;f=<series>`.
pub fn parse_pair(text: &str, prec: usize) -> Result<RiordanPair, Error> {
    let t = text.trim();
    if !t.contains('=') {
        return named_riordan(t, prec);
    }
    let (mut g, mut f) = (None, None);
    for part in t.split(';') {
        match part.split_once('=') {
            Some((k, v)) if k.trim() == "g" => g = Some(parse_series(v, prec)?),
            Some((k, v)) if k.trim() == "f" => f = Some(parse_series(v, prec)?),
            _ => return Err(Error::Parse(format!("bad pair component {part:?}"))),
        }
    }
    match (g, f) {
        (Some(g), Some(f)) => RiordanPair::new(g, f),
        _ => Err(Error::Parse(format!("pair {t:?} needs both g= and f="))),
    }
}

fn resolve(spec: &PairSpec, prec: usize) -> CliResult<RiordanPair> {
    let pair = match (&spec.spec, &spec.name, &spec.g, &spec.f) {
        (Some(s), _, _, _) | (_, Some(s), _, _) => parse_pair(s, prec)?,
        (_, _, Some(g), Some(f)) => {
            RiordanPair::new(parse_series(g, prec)?, parse_series(f, prec)?)?
        }
        _ => {
            return Err(Failure::Usage(
                "an array is required: NAME, --name, or --g and --f".into(),
            ))
        }
    };
    Ok(pair)
}

fn parse_weight_list(text: &str) -> Result<Vec<Rational>, Error> {
    text.split(',').map(parse_rational).collect()
}

fn render(t: &Triangle, format: Format) -> String {
    match format {
        Format::Csv => t.to_csv(),
        Format::Json => format!("{}\n", t.to_json()),
    }
}

/// Coefficients up to the last nonzero one, at most `limit` of them.
fn trimmed(s: &Series, limit: usize) -> Vec<String> {
    let zero = Rational::from_integer(0.into());
    let c = &s.coeffs()[..s.coeffs().len().min(limit)];
    let end = c.iter().rposition(|x| *x != zero).map_or(1, |i| i + 1);
    c[..end.min(c.len())]
        .iter()
        .map(|x| x.to_string())
        .collect()
}

fn execute(cli: &Cli) -> CliResult<(String, i32)> {
    let prec = cli.prec;
    let n = cli.order;
    if n == 0
        && !matches!(
            cli.command,
            Command::Verify { .. } | Command::Catalog { .. }
        )
    {
        return Err(Failure::Math("order must be at least 1".into()));
    }
    let text = match &cli.command {
        Command::Triangle(spec) => render(&resolve(spec, prec)?.triangle(n)?, cli.format),
        Command::Quasi(spec) => {
            let q = QuasiRiordan::from_riordan(&resolve(spec, prec)?);
            render(&q.matrix(n)?, cli.format)
        }
        Command::Mul { a, b } => {
            let p = parse_pair(a, prec)?.mul(&parse_pair(b, prec)?)?;
            render(&p.triangle(n)?, cli.format)
        }
        Command::Inv(spec) => render(&resolve(spec, prec)?.inverse()?.triangle(n)?, cli.format),
        Command::Az(spec) => {
            let az = resolve(spec, prec)?.az()?;
            let (a, z) = (trimmed(az.a(), n), trimmed(az.z(), n));
            match cli.format {
                Format::Csv => format!("A: {}\nZ: {}\n", a.join(", "), z.join(", ")),
                Format::Json => format!("{}\n", serde_json::json!({ "A": a, "Z": z })),
            }
        }
        Command::Ctransform { pair, weight } => {
            let ra = resolve(pair, prec)?;
            let w = weight.trim();
            let x = if w == "laguerre" {
                big_c_transform(&ra, &WeightTri::laguerre(n), n)?
            } else if w.ends_with(".csv") {
                let body = std::fs::read_to_string(w)
                    .map_err(|e| Failure::Usage(format!("cannot read {w}: {e}")))?;
                big_c_transform(&ra, &WeightTri::new(Triangle::from_csv(&body)?)?, n)?
            } else if w == "factorial" {
                c_transform(&ra, &WeightSeq::factorial(n), n)?
            } else if let Some(k) = w.strip_prefix("power:") {
                c_transform(&ra, &WeightSeq::power(&parse_rational(k)?, n)?, n)?
            } else if w.starts_with(|c: char| c.is_ascii_alphabetic()) {
                return Err(Error::UnknownName(format!("weight {w}")).into());
            } else {
                c_transform(&ra, &WeightSeq::new(parse_weight_list(w)?)?, n)?
            };
            render(x.entries(), cli.format)
        }
        Command::Verify { suite, limit } => {
            if suite != "builtin" {
                return Err(Failure::Usage(format!("unknown suite {suite:?}")));
            }
            let reports = builtin_suite(*limit);
            return Ok((
                format!("{}\n", reports_to_json(&reports)),
                exit_code(&reports),
            ));
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => registry_listing().into_iter().map(|l| l + "\n").collect(),
    };
    Ok((text, 0))
}

/// Runs the command line `argv` (program name first); returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, text),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_MATH;
            }
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nUsage: riordan [OPTIONS] <COMMAND>\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(Failure::Math(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_MATH
        }
    }
}
