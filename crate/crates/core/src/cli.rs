//! Command-line front end. [`run`] takes explicit streams and returns the
//! process exit code so it can be driven from tests.
//!
//! Exit codes: 0 success or verification pass, 1 verification failure,
//! 2 usage or input error.

use std::fs::File;
use std::io::{BufRead, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::extremal::{build_extremal, monotonicity_chain, threshold, ExtremalSpec};
use crate::graph6::{from_graph6, to_graph6};
use crate::spectra::spectrum;
use crate::verify::{
    format_eigenvalue, format_sig, prior_bounds, verify_cut_lemmas, with_threads, write_csv, write_summary_json, Mode, TheoremReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const CSV_HELP: &str = "CSV columns (one row per generated graph, sorted by graph6):
  graph6         graph in graph6 form
  n, d           order and degree
  witnesses      cut vertices with branch degree c <= d - c, as v:c;v:c
  lambda2        second largest adjacency eigenvalue
  threshold_cmp  below | equal | above the threshold for d (tolerance 1e-8)
  iso_extremal   true if isomorphic to the threshold's extremal graph";

#[derive(Debug, Parser)]
#[command(name = "regcut", version, about = "Second largest eigenvalue of regular graphs with a cut vertex")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the extremal graph G(d, c) in graph6.
    Build {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: usize,
        /// Cycle lengths of the cycle-complement block; defaults to one cycle.
        #[arg(long, value_delimiter = ',')]
        cycles: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Adjacency spectrum of each graph6 line, one JSON object per line.
    Spectrum {
        /// Input file; standard input when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Threshold table: d, optimal branch degree, threshold, polynomial.
    Threshold {
        #[arg(long, conflicts_with = "d_range", required_unless_present = "d_range")]
        d: Option<usize>,
        /// Inclusive range, e.g. 3..8.
        #[arg(long)]
        d_range: Option<String>,
        /// Also list λ₂ of G(d, c) for each branch degree up to d/2.
        #[arg(long)]
        verbose: bool,
    },
    /// Check every generated cut-vertex graph against the threshold.
    #[command(after_help = CSV_HELP)]
    Verify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Write one record per graph here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the JSON summary here as well as to standard output.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Worker threads; the THREADS environment variable is used when absent.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Earlier sufficient bounds next to the threshold for (d, n).
    CompareBounds {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> Result<i32, Usage> {
    match cmd {
        Command::Build { d, c, cycles, out } => {
            let spec = match cycles {
                Some(cycles) => ExtremalSpec::new(d, c, cycles)?,
                None => ExtremalSpec::with_default_composition(d, c)?,
            };
            let line = to_graph6(&build_extremal(&spec)?);
            match out {
                Some(path) => writeln!(File::create(path)?, "{line}")?,
                None => writeln!(stdout, "{line}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Spectrum { input } => {
            let mut text = String::new();
            match input {
                Some(path) => File::open(path)?.read_to_string(&mut text)?,
                None => stdin.read_to_string(&mut text)?,
            };
            let mut any = false;
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                let g = from_graph6(line)?;
                let s = spectrum(&g)?;
                let round = |x: f64| format_eigenvalue(x).parse::<f64>().unwrap_or(x);
                let obj = json!({
                    "graph6": line,
                    "n": g.order(),
                    "eigenvalues": s.eigenvalues.iter().map(|&x| round(x)).collect::<Vec<_>>(),
                    "lambda2": round(s.lambda2),
                    "lambda_abs": round(s.lambda_abs),
                });
                writeln!(stdout, "{obj}")?;
                any = true;
            }
            if !any {
                return Err(Usage("no graph6 input".into()));
            }
            Ok(EXIT_OK)
        }
        Command::Threshold { d, d_range, verbose } => {
            let ds: Vec<usize> = match (d, d_range) {
                (Some(d), _) => vec![d],
                (None, Some(r)) => parse_range(&r)?,
                (None, None) => return Err(Usage("one of --d or --d-range is required".into())),
            };
            let rows = ds.into_iter().map(threshold).collect::<Result<Vec<_>, _>>()?;
            writeln!(stdout, "d\tc_star\tthreshold\tcoefficients")?;
            for t in rows {
                let d = t.d;
                let coeffs: Vec<String> = t.poly.coeffs().iter().map(|&c| format!("{c}")).collect();
                writeln!(stdout, "{}\t{}\t{}\t{}", d, t.c_star, format_sig(t.value), coeffs.join(" "))?;
                if verbose {
                    for (c, l2) in monotonicity_chain(d)? {
                        writeln!(stdout, "\tc={c}\t{}", format_sig(l2))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            d,
            n_max,
            mode,
            samples,
            seed,
            csv,
            json,
            threads,
        } => {
            let mode = match mode {
                ModeArg::Exhaustive => {
                    if samples.is_some() || seed.is_some() {
                        return Err(Usage("--samples and --seed only apply to --mode random".into()));
                    }
                    Mode::Exhaustive
                }
                ModeArg::Random => match (samples, seed) {
                    (Some(samples), Some(seed)) => Mode::Random { samples, seed },
                    _ => return Err(Usage("--mode random requires --samples and --seed".into())),
                },
            };
            let threads = match threads {
                Some(t) => Some(t),
                None => match std::env::var("THREADS") {
                    Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| Usage(format!("THREADS={v} is not a count")))?),
                    Err(_) => None,
                },
            };
            if threads == Some(0) {
                return Err(Usage("thread count must be positive".into()));
            }
            let records = with_threads(threads, || verify_cut_lemmas(d, n_max, &mode))??;
            let report = TheoremReport::from_records(d, n_max, &mode, &records)?;
            if let Some(path) = csv {
                write_csv(&records, BufWriter::new(File::create(path)?))?;
            }
            if let Some(path) = json {
                write_summary_json(&report, BufWriter::new(File::create(path)?))?;
            }
            write_summary_json(&report, &mut *stdout)?;
            Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::CompareBounds { d, n } => {
            let t = prior_bounds(d, n)?;
            writeln!(stdout, "bound\tvalue\tmargin")?;
            for (b, m) in t.bounds.iter().zip(t.margins()) {
                writeln!(stdout, "{}\t{}\t{}", b.name, format_sig(b.value), format_sig(m))?;
            }
            writeln!(stdout, "new\t{}\t{}", format_sig(t.new_threshold), format_sig(0.0))?;
            Ok(EXIT_OK)
        }
    }
}

fn parse_range(text: &str) -> Result<Vec<usize>, Usage> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Usage(format!("range must look like a..b, got {text}")))?;
    let a: usize = a.trim().parse()?;
    let b: usize = b.trim().trim_start_matches('=').parse()?;
    if a > b {
        return Err(Usage(format!("empty range {text}")));
    }
    Ok((a..=b).collect())
}
