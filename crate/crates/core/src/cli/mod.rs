//! The `snet` command line: generate, verify, apply and inspect networks.
//!
//! Exit codes: 0 on success (and for `verify`, a sorting network), 1 when
//! `verify` finds a counterexample, 2 on usage, parse or I/O errors.

mod svg;
mod text;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::verify::{
    check_sorting_exhaustive, check_sorting_oracle, network_stats, ENUMERATION_LIMIT,
};
use crate::{sorter_size, Algorithm, Error, Network};

pub use svg::render_svg;
pub use text::{parse_text, render_text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Trials used by `verify` when a network is too wide to enumerate and no
/// `--oracle` count was given.
pub const DEFAULT_TRIALS: usize = 1000;

#[derive(Debug, Parser)]
#[command(
    name = "snet",
    version,
    about = "Sorting network generator and verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Svg,
}

#[derive(Debug, Args)]
struct Source {
    /// A network file, or an algorithm name (bsort, bfsort, knuth, batcher)
    /// followed by the exponent m
    #[arg(required = true, num_args = 1..=2, value_name = "FILE | ALGO M")]
    source: Vec<String>,
    /// Build the descending variant (bfsort only)
    #[arg(long)]
    flip: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a network on 2^m lines
    Gen {
        algo: String,
        m: u32,
        #[arg(long)]
        flip: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check that a network sorts
    Verify {
        #[command(flatten)]
        source: Source,
        /// Enumerate every boolean input
        #[arg(long, conflicts_with = "oracle")]
        exhaustive: bool,
        /// Run this many random integer tuples instead
        #[arg(long, value_name = "TRIALS")]
        oracle: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a tuple through a network
    Apply {
        #[command(flatten)]
        source: Source,
        /// Comma-separated integers
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Print layer and comparator counts
    Stats {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Counterexample(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn build(algo: &str, m: u32, flip: bool) -> Result<Network, Failure> {
    Ok(algo.parse::<Algorithm>()?.build(m, flip)?)
}

/// Resolves a source to a network and, for generated networks, its exponent.
fn load(src: &Source) -> Result<(Network, Option<u32>), Failure> {
    match src.source.as_slice() {
        [algo, m] => {
            let m: u32 = m
                .parse()
                .map_err(|_| Failure::Usage(format!("bad exponent `{m}`")))?;
            Ok((build(algo, m, src.flip)?, Some(m)))
        }
        [path] => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            let net = parse_text(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            Ok((net, None))
        }
        _ => Err(Failure::Usage("expected FILE or ALGO M".into())),
    }
}

fn parse_input(s: &str) -> Result<Vec<i64>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|v| {
            let v = v.trim();
            v.parse::<i64>()
                .map_err(|_| Failure::Usage(format!("bad input value `{v}`")))
        })
        .collect()
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Gen {
            algo,
            m,
            flip,
            out: path,
            format,
        } => {
            let net = build(&algo, m, flip)?;
            let rendered = match format {
                Format::Text => render_text(&net),
                Format::Svg => render_svg(&net),
            };
            match path {
                Some(p) => std::fs::write(&p, rendered)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
                None => out.write_all(rendered.as_bytes()).map_err(io_err)?,
            }
        }
        Command::Verify {
            source,
            exhaustive,
            oracle,
            seed,
        } => {
            let (net, _) = load(&source)?;
            let report = match oracle {
                Some(trials) => check_sorting_oracle(&net, trials, seed),
                None if exhaustive || net.width() <= ENUMERATION_LIMIT => {
                    check_sorting_exhaustive(&net)?
                }
                None => check_sorting_oracle(&net, DEFAULT_TRIALS, seed),
            };
            if !report.is_sorting() {
                return Err(Failure::Counterexample(report.to_string()));
            }
            writeln!(out, "{report}").map_err(io_err)?;
        }
        Command::Apply { source, input } => {
            let (net, _) = load(&source)?;
            let values = parse_input(&input)?;
            let result = net.apply(&values)?;
            let joined: Vec<String> = result.iter().map(i64::to_string).collect();
            writeln!(out, "{}", joined.join(",")).map_err(io_err)?;
        }
        Command::Stats { source } => {
            let (net, m) = load(&source)?;
            let stats = network_stats(&net);
            let m = m.or_else(|| {
                net.width()
                    .is_power_of_two()
                    .then(|| net.width().trailing_zeros())
            });
            writeln!(out, "width: {}", net.width()).map_err(io_err)?;
            writeln!(out, "layers: {}", stats.layers).map_err(io_err)?;
            writeln!(out, "comparators: {}", stats.comparators).map_err(io_err)?;
            match m {
                Some(m) => writeln!(out, "closed form m(m+1)/2 (m = {m}): {}", sorter_size(m)),
                None => writeln!(out, "closed form m(m+1)/2: n/a"),
            }
            .map_err(io_err)?;
        }
    }
    Ok(())
}

/// Runs the command line with the given arguments (including the program
/// name) and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Counterexample(msg)) => {
            let _ = writeln!(out, "{msg}");
            EXIT_COUNTEREXAMPLE
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
