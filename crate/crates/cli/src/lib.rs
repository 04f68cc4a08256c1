//! The `rainbow` command: solve, generate, verify and compute f.

pub mod generate;
pub mod io;
pub mod report;
pub mod suites;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use rainbow_core::constructions::ramsey_witness;
use rainbow_core::fcalc::{f_exact_parallel, FValue};
use rainbow_core::sunflower::find_sunflower;
use rainbow_core::{find_rainbow, RainbowSelection};
use serde::Serialize;
use serde_json::json;

use crate::generate::GenParams;
use crate::io::{family_file, read_family, read_graph};
use crate::suites::{Suite, SuiteSpec};

/// Node budget for searches when `--budget` is not given.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow independent sets in graphs")]
pub struct Cli {
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Node budget for exhaustive searches. `f-exact` runs unbounded without it.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Look for a rainbow independent m-set. Exit 0 if found, 1 if none, 2 on bad input.
    Solve {
        /// Host graph; overrides the family file's `graph` field.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Build a named construction, certify it and write graph, family and manifest files.
    Gen {
        /// One of: drisko, even-matching, doubled-even-matching, circulant,
        /// multipartite-copies, colourable, colourable-disjoint, blowup,
        /// ramsey-blowup, multipartite-repeating, grid, digraph-repeating,
        /// directed-cycle.
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        copies: Option<usize>,
        /// Host graph file, for `blowup`.
        #[arg(long)]
        host: Option<PathBuf>,
        /// Base digraph file, for `digraph-repeating`.
        #[arg(long)]
        digraph: Option<PathBuf>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run a verification suite and write a CSV report. Exit 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Random trials per trial group.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Largest set size in the random trials.
        #[arg(long)]
        max_n: Option<usize>,
        /// CSV destination (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Add a `millis` column. Timings make reports differ between runs.
        #[arg(long)]
        timings: bool,
    },
    /// Compute f_G(n, m) exactly, with a witness family of maximum size.
    FExact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Print a K_r-free graph on R(r, m) - 1 vertices with no independent m-set.
    RamseyWitness {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// Find a k-petal sunflower among the sets of a family.
    Sunflower {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Serialize)]
struct Witness {
    /// `[colour, vertex]` pairs, colours 0-based.
    assignments: Vec<(usize, usize)>,
    vertices: Vec<usize>,
}

impl From<&RainbowSelection> for Witness {
    fn from(sel: &RainbowSelection) -> Self {
        Self {
            assignments: sel.assignments.clone(),
            vertices: sel.image().to_vec(),
        }
    }
}

fn print_json(value: &impl Serialize) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .context("cannot start worker threads")
}

/// Runs a parsed command. Errors are input or I/O errors (exit 2 in `main`).
pub fn run(cli: Cli) -> Result<ExitCode> {
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    match cli.command {
        Command::Solve { graph, family, m } => {
            let host = graph.as_deref().map(read_graph).transpose()?;
            let family = read_family(&family, host)?;
            match find_rainbow(&family, m) {
                Some(sel) => {
                    print_json(&Witness::from(&sel))?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NONE");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Gen {
            name,
            n,
            m,
            k,
            t,
            r,
            copies,
            host,
            digraph,
            out,
        } => {
            let params = GenParams {
                n,
                m,
                k,
                t,
                r,
                copies,
                host,
                digraph,
                budget,
            };
            let built = generate::build(&name, &params)?;
            let written = generate::write(&built, &out)?;
            for c in &written.checks {
                eprintln!("{}: certified", c.property);
            }
            for f in &written.files {
                println!("{}", f.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            trials,
            max_n,
            out,
            timings,
        } => {
            let spec = SuiteSpec {
                suite,
                trials,
                seed: cli.seed,
                max_n,
                budget,
            };
            let start = Instant::now();
            let rows = pool(cli.jobs)?.install(|| suites::run(&spec));
            match &out {
                Some(path) => {
                    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
                    report::write_csv(&rows, timings, BufWriter::new(file))?;
                }
                None => report::write_csv(&rows, timings, std::io::stdout().lock())?,
            }
            let s = report::summarize(&rows);
            eprintln!(
                "{}: {} rows, {} pass, {} fail, {} consistent-with, {} inconsistent ({:.1?})",
                suite.name(),
                rows.len(),
                s.pass,
                s.fail,
                s.consistent,
                s.inconsistent,
                start.elapsed()
            );
            for r in rows.iter().filter(|r| r.status == report::Status::Fail) {
                eprintln!("FAIL {}: expected {}, observed {}", r.instance, r.expected, r.observed);
            }
            Ok(if s.fail == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::FExact { graph, n, m } => {
            let g = read_graph(&graph)?;
            let start = Instant::now();
            let r = pool(cli.jobs)?.install(|| f_exact_parallel(&g, n, m, cli.budget))?;
            let witness = r.witness.as_ref().map(|w| family_file(w, g.to_text()));
            let value = match r.value {
                FValue::Defined(v) => json!(v),
                FValue::Undefined => json!("undefined"),
            };
            print_json(&json!({
                "value": value,
                "witness": witness,
                "nodes_explored": r.nodes,
                "elapsed_ms": start.elapsed().as_millis() as u64,
                "complete": r.complete,
            }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::RamseyWitness { r, m } => {
            let g = ramsey_witness(r, m, budget)?;
            print!("{}", g.to_text());
            eprintln!("R({r},{m}) = {}", g.vertex_count() + 1);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sunflower { family, k } => {
            let family = read_family(&family, None)?;
            match find_sunflower(family.sets(), k) {
                Some(sf) => {
                    print_json(&json!({
                        "core": sf.core.to_vec(),
                        "members": sf.members,
                        "petals": sf.petals.iter().map(|p| p.to_vec()).collect::<Vec<_>>(),
                    }))?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NONE");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}
