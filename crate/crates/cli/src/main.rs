use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use zfdom_core::families::Family;
use zfdom_core::graph::{emit_graph6, parse_graph6};
use zfdom_core::harness::{self, Check, Format, Predicate, RunOptions};
use zfdom_core::invariants::Invariant;
use zfdom_core::Deadline;

#[derive(Parser)]
#[command(name = "zfdom", version)]
#[command(about = "Zero forcing, Grundy domination and total domination invariants of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Jsonl,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check every graph6 line of a corpus and emit one report per graph
    Run {
        /// graph6 file; stdin when omitted or "-"
        input: Option<PathBuf>,
        /// Comma-separated check names, or "all"
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: OutputFormat,
        /// Per-graph time budget in milliseconds
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// List graphs matching an extremal predicate, with witnesses
    Hunt {
        /// Enumerate all connected labeled graphs on this many vertices (at most 6)
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        n: Option<usize>,
        /// Read candidate graphs from a graph6 file instead
        #[arg(long)]
        input: Option<PathBuf>,
        /// gammat-upper-eq-2zgrundy, zgrundy-eq-gammat, z-eq-delta, chordal-eq:K or simplicial-eq:K
        #[arg(long)]
        predicate: String,
    },
    /// Print an invariant with a certificate
    Explain {
        graph6: String,
        /// Z, zgrundy, grundy_total, gammat, gammat_upper or powerdom
        invariant: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a family instance as graph6, e.g. windmill:3,2 or hext:A_:2,2
    Family {
        descriptor: String,
        /// Compute the family's known invariants and compare
        #[arg(long)]
        verify: bool,
    },
}

fn open_input(path: Option<&PathBuf>) -> Result<Box<dyn BufRead>> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let f = File::open(p).with_context(|| format!("cannot open {}", p.display()))?;
            Ok(Box::new(BufReader::new(f)))
        }
        _ => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

fn run(
    input: Option<PathBuf>,
    checks: &str,
    format: OutputFormat,
    budget_ms: Option<u64>,
    jobs: usize,
) -> Result<ExitCode> {
    let opts = RunOptions {
        checks: Check::parse_list(checks)?,
        format: match format {
            OutputFormat::Jsonl => Format::JsonLines,
            OutputFormat::Csv => Format::Csv,
        },
        budget: budget_ms.map(Duration::from_millis),
        jobs,
    };
    let reader = open_input(input.as_ref())?;
    let out = BufWriter::new(io::stdout().lock());
    let summary = harness::run_corpus(reader, out, &opts).context("corpus run failed")?;
    eprintln!("{}", serde_json::to_string_pretty(&summary)?);
    if !summary.parse_errors.is_empty() {
        eprintln!("{} line(s) failed to parse: {:?}", summary.parse_errors.len(), summary.parse_errors);
    }
    Ok(if summary.violations > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn hunt(n: Option<usize>, input: Option<PathBuf>, predicate: &str) -> Result<ExitCode> {
    let predicate: Predicate = predicate.parse()?;
    let hits = match n {
        Some(n) => harness::hunt_extremal(n, predicate)?,
        None => {
            let mut graphs = Vec::new();
            for (i, line) in open_input(input.as_ref())?.lines().enumerate() {
                let line = line?;
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                graphs.push(parse_graph6(line).with_context(|| format!("line {}", i + 1))?);
            }
            harness::hunt_graphs(&graphs, predicate)?
        }
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for h in &hits {
        serde_json::to_writer(&mut out, h)?;
        writeln!(out)?;
    }
    out.flush()?;
    eprintln!("{} graph(s) match {predicate}", hits.len());
    Ok(ExitCode::SUCCESS)
}

fn explain(graph6: &str, invariant: &str, json: bool) -> Result<ExitCode> {
    let g = parse_graph6(graph6)?;
    let invariant: Invariant = invariant.parse()?;
    let e = harness::explain(&g, invariant)?;
    if json {
        println!("{}", serde_json::to_string(&e)?);
    } else {
        print!("{e}");
    }
    Ok(ExitCode::SUCCESS)
}

fn family(descriptor: &str, verify: bool) -> Result<ExitCode> {
    let inst = descriptor.parse::<Family>()?.build()?;
    println!("{}", emit_graph6(&inst.graph)?);
    if !verify {
        return Ok(ExitCode::SUCCESS);
    }
    let mut ok = true;
    for e in &inst.expected {
        let value = e.invariant.compute(&inst.graph, &Deadline::NONE)?;
        let good = e.bound.admits(value);
        ok &= good;
        eprintln!(
            "{:<13} {:>3}  expected {:?}  {}",
            e.invariant.name(),
            value,
            e.bound,
            if good { "ok" } else { "MISMATCH" }
        );
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { input, checks, format, budget_ms, jobs } => run(input, &checks, format, budget_ms, jobs),
        Command::Hunt { n, input, predicate } => hunt(n, input, &predicate),
        Command::Explain { graph6, invariant, json } => explain(&graph6, &invariant, json),
        Command::Family { descriptor, verify } => family(&descriptor, verify),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
