//! `cdsreg` subcommands.
//!
//! Exit codes: 0 on success, 1 for I/O and argument errors, 2 for empty
//! input. Results go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use cdsreg_core::{
    border_chain, borders_cds, build_cds, gen_text, load_text, naive_period, naive_shortest_cover,
    period_cds, period_classical, sampling_stats, shortest_cover_cds, shortest_cover_classical,
    GenSpec,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::{run_bench, BenchConfig, Task};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "cdsreg",
    version,
    about = "Periods, borders and covers of byte strings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Classical,
    Cds,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChainMethod {
    Classical,
    Cds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Tasks {
    Period,
    Cover,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the smallest period.
    Period {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "cds")]
        method: Method,
        #[arg(long)]
        prefix: Option<usize>,
    },
    /// Print the shortest cover length ("superprimitive" follows when it is the whole text).
    Cover {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "cds")]
        method: Method,
        #[arg(long)]
        prefix: Option<usize>,
    },
    /// Print the non-periodic border chain, longest first.
    Borders {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "cds")]
        method: ChainMethod,
        #[arg(long)]
        prefix: Option<usize>,
    },
    /// Print sampling statistics as JSON.
    Sample {
        file: PathBuf,
        #[arg(long)]
        prefix: Option<usize>,
    },
    /// Time classical against sampled computations on prefixes of a file.
    Bench {
        file: PathBuf,
        /// Comma-separated prefix sizes; defaults to the whole file.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        runs: usize,
        #[arg(long, value_enum, default_value = "both")]
        tasks: Tasks,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also time the sampled methods with the view built outside the
        /// timed region; speedups then use those timings.
        #[arg(long)]
        pretimed: bool,
    },
    /// Write a deterministic synthetic text.
    Gen {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        period: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Serialize)]
struct SampleJson {
    m: usize,
    pivot: String,
    m_bar: usize,
    k: usize,
    ratio: f64,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    writeln!(out, "{s}").map_err(io_err(Path::new("<stdout>")))
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Period {
            file,
            method,
            prefix,
        } => {
            let x = load_text(&file, prefix)?;
            let p = match method {
                Method::Classical => period_classical(&x)?,
                Method::Cds => period_cds(&build_cds(&x)?, &x)?,
                Method::Naive => naive_period(&x)?,
            };
            write_out(out, &p.to_string())
        }
        Command::Cover {
            file,
            method,
            prefix,
        } => {
            let x = load_text(&file, prefix)?;
            let c = match method {
                Method::Classical => shortest_cover_classical(&x)?,
                Method::Cds => shortest_cover_cds(&build_cds(&x)?, &x)?,
                Method::Naive => naive_shortest_cover(&x)?,
            };
            write_out(out, &c.to_string())?;
            if c == x.len() {
                write_out(out, "superprimitive")?;
            }
            Ok(())
        }
        Command::Borders {
            file,
            method,
            prefix,
        } => {
            let x = load_text(&file, prefix)?;
            let chain = match method {
                ChainMethod::Classical => border_chain(&x)?,
                ChainMethod::Cds => borders_cds(&build_cds(&x)?, &x)?,
            };
            let line = chain
                .lengths
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            write_out(out, &line)
        }
        Command::Sample { file, prefix } => {
            let x = load_text(&file, prefix)?;
            let v = build_cds(&x)?;
            let stats = sampling_stats(&v);
            let json = SampleJson {
                m: stats.text_len,
                pivot: char::from(v.pivot()).to_string(),
                m_bar: stats.entries,
                k: v.k(),
                ratio: (stats.ratio() * 1e4).round() / 1e4,
            };
            write_out(out, &serde_json::to_string(&json)?)
        }
        Command::Bench {
            file,
            sizes,
            runs,
            tasks,
            out: report_path,
            format,
            pretimed,
        } => {
            let x = load_text(&file, None)?;
            let sizes = if sizes.is_empty() {
                vec![x.len()]
            } else {
                sizes
            };
            let tasks = match tasks {
                Tasks::Period => vec![Task::Period],
                Tasks::Cover => vec![Task::Cover],
                Tasks::Both => vec![Task::Period, Task::Cover],
            };
            let config = BenchConfig {
                sizes,
                runs,
                tasks,
                pretimed,
            };
            let report = run_bench(&x, &file.display().to_string(), &config)?;
            if let Some(path) = report_path {
                let f = File::create(&path).map_err(io_err(&path))?;
                let w = BufWriter::new(f);
                match format {
                    Format::Json => report.write_json(w)?,
                    Format::Csv => report.write_csv(w)?,
                }
            }
            report
                .write_summary(out)
                .map_err(io_err(Path::new("<stdout>")))
        }
        Command::Gen {
            alphabet,
            length,
            seed,
            period,
            out: path,
        } => {
            let spec = GenSpec {
                alphabet_size: alphabet,
                length,
                seed,
                forced_period: period,
            };
            let text = gen_text(&spec)?;
            fs::write(&path, text.as_bytes()).map_err(io_err(&path))
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "cdsreg: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("cdsreg").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn file_with(content: &[u8]) -> tempfile::NamedTempFile {
        let f = tempfile::NamedTempFile::new().unwrap();
        fs::write(f.path(), content).unwrap();
        f
    }

    #[test]
    fn period_and_cover() {
        let f = file_with(b"abaababaaba");
        let p = f.path().to_str().unwrap();
        assert_eq!(run_capture(&["period", p, "--method", "cds"]).1, "5\n");
        assert_eq!(run_capture(&["cover", p, "--method", "cds"]).1, "3\n");
        assert_eq!(run_capture(&["borders", p]).1, "6 3 1\n");
        assert_eq!(run_capture(&["period", p, "--prefix", "3"]).1, "2\n");
    }

    #[test]
    fn superprimitive_line() {
        let f = file_with(b"abcd");
        let (code, out, _) = run_capture(&["cover", f.path().to_str().unwrap()]);
        assert_eq!(code, 0);
        assert_eq!(out, "4\nsuperprimitive\n");
        let (_, out, _) = run_capture(&["borders", f.path().to_str().unwrap()]);
        assert_eq!(out, "\n");
    }

    #[test]
    fn bad_arguments() {
        let f = file_with(b"abc");
        let p = f.path().to_str().unwrap();
        assert_eq!(run_capture(&["period", p, "--method", "fast"]).0, 1);
        assert_eq!(run_capture(&["period", p, "--prefix", "0"]).0, 1);
        assert_eq!(run_capture(&["frobnicate"]).0, 1);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }
}
