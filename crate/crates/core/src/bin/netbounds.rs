//! Command-line front end. Exit codes: 0 success, 1 usage, 2 internal
//! invariant failure, 3 verification mismatch.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use netbounds::conventions::Conventions;
use netbounds::counting::{extrema, lower_bounds, v_of_grid, BoundOptions, ExtremumKind};
use netbounds::render::render_svg;
use netbounds::report::{format_table, ResultCache, ResultRecord, TableEntry, TableFormat};
use netbounds::trajectory::{check_k, trace_grid, HalfIntervalTrace};
use netbounds::verify::{self, VerifyLevel};
use netbounds::{ChordDiagram, Error};

#[derive(Parser)]
#[command(
    name = "netbounds",
    version,
    about = "Lower bounds for real rational functions with prescribed real critical points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds for all 4 <= d <= DMAX, 1 <= k <= d-2.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..=16))]
        dmax: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
        /// Ignore and do not write the result cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// A single bound.
    Bound {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
        /// Also compute the bound for 2d-3-k and report whether they agree.
        #[arg(long)]
        mirror: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Per-half-interval trace of one net.
    Trace {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
        /// Parenthesis word or pair list.
        #[arg(long)]
        net: String,
        #[arg(long, value_enum, default_value_t = TraceFormat::Json)]
        format: TraceFormat,
    },
    /// Recompute and compare against the published values.
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Fast)]
        level: Level,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Draw a net as SVG.
    Render {
        #[arg(long)]
        net: String,
        #[arg(long)]
        out: PathBuf,
        /// Mark r and s for this k and shade the arc (r, s).
        #[arg(short)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Markdown,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Fast,
    Full,
}

enum Failure {
    Usage(String),
    Internal(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_invariant() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn parse_net(text: &str, d: Option<usize>) -> Result<ChordDiagram, Failure> {
    let g: ChordDiagram = text.parse()?;
    if let Some(d) = d {
        if g.degree() != d {
            return Err(Failure::Usage(format!(
                "net {g} has degree {}, not {d}",
                g.degree()
            )));
        }
    }
    Ok(g)
}

fn cmd_table(
    dmax: usize,
    format: Format,
    jobs: Option<usize>,
    no_cache: bool,
) -> Result<(), Failure> {
    let conventions = Conventions::default();
    let cache = ResultCache::from_env(&conventions);
    let options = BoundOptions {
        jobs,
        ..BoundOptions::default()
    };
    let mut entries = Vec::new();
    for d in 4..=dmax {
        let start = Instant::now();
        let mut missing = Vec::new();
        for k in 1..=d - 2 {
            match cache.get(d, k).filter(|_| !no_cache) {
                Some(r) => entries.push(TableEntry::from(&r)),
                None => missing.push(k),
            }
        }
        if !missing.is_empty() {
            for report in lower_bounds(d, &missing, &options)? {
                let record = ResultRecord::from_report(&report, &conventions);
                if !no_cache {
                    if let Err(e) = cache.put(&record) {
                        eprintln!("warning: could not write cache: {e}");
                    }
                }
                entries.push(TableEntry::from(&record));
            }
        }
        eprintln!(
            "d={d}: {} computed, {} cached, {:.2?}",
            missing.len(),
            d - 2 - missing.len(),
            start.elapsed()
        );
    }
    let format = match format {
        Format::Csv => TableFormat::Csv,
        Format::Markdown => TableFormat::Markdown,
        Format::Json => TableFormat::Json,
    };
    print!("{}", format_table(&entries, format));
    Ok(())
}

fn cmd_bound(d: usize, k: usize, mirror: bool, jobs: Option<usize>) -> Result<(), Failure> {
    netbounds::counting::check_degree(d)?;
    check_k(d, k)?;
    let options = BoundOptions {
        jobs,
        ..BoundOptions::default()
    };
    let mirrored = 2 * d - 3 - k;
    let ks = if mirror && mirrored != k {
        vec![k, mirrored]
    } else {
        vec![k]
    };
    let reports = lower_bounds(d, &ks, &options)?;
    eprintln!("elapsed {:.2?}", reports[0].elapsed);
    if mirror {
        let a = reports[0].bound;
        let b = reports.last().expect("non-empty").bound;
        println!("k={k}: {a}");
        println!("k={mirrored}: {b}");
        println!("{}", if a == b { "agree" } else { "differ" });
    } else {
        println!("{}", reports[0].bound);
    }
    Ok(())
}

#[derive(Serialize)]
struct TraceRow<'a> {
    #[serde(flatten)]
    half_interval: &'a HalfIntervalTrace,
    extremum: Option<ExtremumKind>,
}

#[derive(Serialize)]
struct TraceOutput<'a> {
    net: String,
    d: usize,
    k: usize,
    c: i64,
    half_intervals: Vec<TraceRow<'a>>,
    v: u64,
}

fn cmd_trace(d: usize, k: usize, net: &str, format: TraceFormat) -> Result<(), Failure> {
    let g = parse_net(net, Some(d))?;
    check_k(d, k)?;
    let (grid, trace) = trace_grid(&g, k, &Conventions::default())?;
    let ex = extrema(&grid);
    let v = v_of_grid(&grid)?;
    let rows: Vec<TraceRow> = trace
        .iter()
        .map(|t| TraceRow {
            half_interval: t,
            extremum: ex.iter().find(|e| e.index == t.index).map(|e| e.kind),
        })
        .collect();
    match format {
        TraceFormat::Json => {
            let out = TraceOutput {
                net: g.to_string(),
                d,
                k,
                c: grid.c,
                half_intervals: rows,
                v,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("trace serializes")
            );
        }
        TraceFormat::Text => {
            println!("net {g}  d={d}  k={k}  c={}", grid.c);
            for row in rows {
                let t = row.half_interval;
                let intervals: Vec<String> = t
                    .collected
                    .iter()
                    .map(|b| b.contribution.to_string())
                    .collect();
                let flag = match row.extremum {
                    Some(ExtremumKind::Max) => "  max",
                    Some(ExtremumKind::Min) => "  min",
                    None => "",
                };
                println!(
                    "{:>4}  ({}, {})  {}{flag}",
                    t.label,
                    t.lower,
                    t.upper,
                    intervals.join(" ")
                );
            }
            println!("V={v}");
        }
    }
    Ok(())
}

fn cmd_verify(level: Level, jobs: Option<usize>) -> Result<(), Failure> {
    let level = match level {
        Level::Fast => VerifyLevel::Fast,
        Level::Full => VerifyLevel::Full,
    };
    let checks = verify::run(level, jobs);
    let mut ok = true;
    for c in &checks {
        println!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
        for f in &c.failures {
            println!("    {f}");
        }
        ok &= c.passed;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn cmd_render(net: &str, out: &PathBuf, k: Option<usize>) -> Result<(), Failure> {
    let g = parse_net(net, None)?;
    let svg = render_svg(&g, k)?;
    std::fs::write(out, svg)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", out.display())))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Table {
            dmax,
            format,
            jobs,
            no_cache,
        } => cmd_table(*dmax as usize, *format, *jobs, *no_cache),
        Command::Bound { d, k, mirror, jobs } => cmd_bound(*d, *k, *mirror, *jobs),
        Command::Trace { d, k, net, format } => cmd_trace(*d, *k, net, *format),
        Command::Verify { level, jobs } => cmd_verify(*level, *jobs),
        Command::Render { net, out, k } => cmd_render(net, out, *k),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch) => ExitCode::from(3),
    }
}
