//! `combi`: count, enumerate, map, verify and render combinatorial objects.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod map;

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use combi_core::catalog::{compact, count_table, CountRecord, Family};
use combi_core::envelope::ObjectEnvelope;
use combi_core::par::{with_jobs, Exec};
use combi_core::render::render;
use combi_core::verify::{self, Fault, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "combi",
    version,
    about = "Pattern-avoiding sequences, set partitions and triangular fillings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count a family for n = 0..=n_max as CSV.
    Count {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Also write the CSV to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report 0 in the millis column so output is byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Stream every object of size n, one per line.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Apply a named bijection to a JSON object.
    Map {
        #[arg(long)]
        bijection: String,
        /// Input file; stdin when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Include intermediate fillings.
        #[arg(long)]
        trace: bool,
    },
    /// Run the exhaustive invariant suite up to n_max.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Also write the CSV summary to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Draw a filling, partition, arc diagram or sequence.
    Render {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Compact,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    Phi,
}

fn exec_for(jobs: Option<usize>) -> Exec {
    if jobs == Some(1) {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<ObjectEnvelope> {
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("cannot read stdin")?;
            s
        }
    };
    Ok(ObjectEnvelope::from_json(text.trim())?)
}

fn parse_family(tag: &str) -> Result<Family> {
    Ok(tag.parse::<Family>()?)
}

fn write_file(path: &PathBuf, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Count {
            family,
            n_max,
            jobs,
            out: path,
            no_timing,
        } => {
            let family = parse_family(&family)?;
            let records = with_jobs(jobs, || count_table(family, n_max, exec_for(jobs)));
            let mut csv = format!("{}\n", CountRecord::CSV_HEADER);
            for mut r in records {
                if no_timing {
                    r.millis = 0;
                }
                csv.push_str(&r.csv_row());
                csv.push('\n');
            }
            out.write_all(csv.as_bytes())?;
            if let Some(p) = path {
                write_file(&p, &csv)?;
            }
        }
        Command::Enumerate {
            family,
            n,
            format,
            jobs,
        } => {
            let family = parse_family(&family)?;
            let all = with_jobs(jobs, || family.enumerate(n, exec_for(jobs)));
            for env in &all {
                match format {
                    Format::Jsonl => writeln!(out, "{}", env.to_json())?,
                    Format::Compact => writeln!(out, "{}", compact(env))?,
                }
            }
        }
        Command::Map {
            bijection,
            input,
            trace,
        } => {
            let (name, traced) = map::resolve(&bijection)?;
            let env = read_input(input.as_ref())?;
            let applied = map::apply(name, &env)?;
            if trace || traced {
                let doc = json!({ "result": applied.result, "trace": applied.trace });
                writeln!(out, "{doc}")?;
            } else {
                writeln!(out, "{}", applied.result.to_json())?;
            }
        }
        Command::Verify {
            n_max,
            jobs,
            out: path,
            inject_fault,
        } => {
            let config = VerifyConfig {
                n_max,
                exec: exec_for(jobs),
                fault: inject_fault.map(|FaultArg::Phi| Fault::Phi),
            };
            let report = with_jobs(jobs, || verify::run(&config));
            let csv = report.to_csv();
            write!(out, "{}\n{}", report.to_text(), csv)?;
            if let Some(p) = path {
                write_file(&p, &csv)?;
            }
            out.flush()?;
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Render { input } => {
            let env = read_input(input.as_ref())?;
            out.write_all(render(&env)?.as_bytes())?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
