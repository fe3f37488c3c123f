//! Verification CLI for Kleshchev multipartition combinatorics.
//!
//! Exit codes: 0 on success, 1 when a proved relation is violated, 2 on
//! invalid input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use kleshchev::partition::{ChargeVector, Multipartition};
use kleshchev_cli::{classify, export_graph, find_counterexamples, run_campaign};
use kleshchev_cli::{CampaignConfig, Session};

#[derive(Parser)]
#[command(
    name = "kleshchev",
    about = "Exact classification and exhaustive verification for Kleshchev multipartitions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SweepArgs {
    /// Modulus (0 or an integer >= 2)
    #[arg(long = "e")]
    e: Option<u32>,
    /// Number of components; inferred from --charges when omitted
    #[arg(long = "r")]
    r: Option<usize>,
    /// Comma-separated charge vector; repeat for several vectors
    #[arg(long = "charges")]
    charges: Vec<String>,
    /// Largest size to sweep
    #[arg(long = "nmax")]
    nmax: Option<usize>,
    /// Parabolic length budget for the chain search
    #[arg(long = "budget")]
    budget: Option<usize>,
    /// Disable the Fock-side restrictedness cross-check
    #[arg(long = "no-fock")]
    no_fock: bool,
    /// Disable the chain-criterion cross-check
    #[arg(long = "no-weyl")]
    no_weyl: bool,
    /// Largest size for the tableau-side dominance sweep
    #[arg(long = "tableaux-nmax")]
    tableaux_nmax: Option<usize>,
    /// Key/value config file; command-line flags override its entries
    #[arg(long = "config")]
    config: Option<PathBuf>,
    /// Write the JSON report here instead of stdout
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one multipartition under every predicate
    Classify {
        /// Multipartition in text encoding, e.g. "2|4,2,2|5,2,1,1"
        multipartition: String,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Sweep all sizes up to nmax and verify the proved inclusions
    Campaign {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Export the good lattice up to nmax as a DOT graph
    Graph {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Sweep and report data on the conjectured equalities
    Hunt {
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

fn build_config(args: &SweepArgs) -> Result<CampaignConfig> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read config {}", path.display()))?;
            CampaignConfig::from_key_value(&text)?
        }
        None => CampaignConfig::default(),
    };
    if let Some(e) = args.e {
        cfg.e = e;
    }
    for charges in &args.charges {
        let vector = charges
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("invalid charge vector {charges:?}"))?;
        cfg.charges.push(vector);
    }
    if let Some(r) = args.r {
        cfg.r = r;
    } else if args.config.is_none() {
        cfg.r = cfg.charges.first().map(Vec::len).unwrap_or(0);
    }
    if let Some(nmax) = args.nmax {
        cfg.n_max = nmax;
    }
    if let Some(budget) = args.budget {
        cfg.budget = budget;
    }
    if let Some(t) = args.tableaux_nmax {
        cfg.tableaux_n_max = t;
    }
    if args.no_fock {
        cfg.fock_check = false;
    }
    if args.no_weyl {
        cfg.weyl_check = false;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify { multipartition, sweep } => {
            let cfg = build_config(&sweep)?;
            if cfg.charges.len() != 1 {
                bail!("classify takes exactly one charge vector");
            }
            let m: Multipartition = multipartition
                .parse()
                .with_context(|| format!("invalid multipartition {multipartition:?}"))?;
            if m.r() != cfg.r {
                bail!("multipartition has {} components, charges have {}", m.r(), cfg.r);
            }
            let session = Session::new(ChargeVector::new(cfg.e, cfg.charges[0].clone()));
            let record = classify(&session, &m, &cfg);
            let mut text = serde_json::to_string_pretty(&record)?;
            text.push('\n');
            emit(&sweep.out, &text)?;
            if !record.is_consistent() {
                eprintln!("error: restrictedness tests disagree on {m}");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Campaign { sweep } => {
            let cfg = build_config(&sweep)?;
            let report = run_campaign(&cfg);
            emit(&sweep.out, &report.to_json())?;
            if sweep.out.is_some() {
                print!("{}", report.summary());
            } else {
                eprint!("{}", report.summary());
            }
            if report.violation_count() > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Graph { sweep } => {
            let cfg = build_config(&sweep)?;
            if cfg.charges.len() != 1 {
                bail!("graph takes exactly one charge vector");
            }
            let q = ChargeVector::new(cfg.e, cfg.charges[0].clone());
            match &sweep.out {
                Some(path) => {
                    export_graph(&q, cfg.n_max, path)?;
                }
                None => {
                    let dot = kleshchev::crystal::crystal_graph(&q, cfg.n_max).to_dot();
                    print!("{dot}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hunt { sweep } => {
            let cfg = build_config(&sweep)?;
            let lines = find_counterexamples(&cfg);
            let mut text = String::new();
            for line in &lines {
                text.push_str(line);
                text.push('\n');
            }
            emit(&sweep.out, &text)?;
            if lines.iter().any(|l| l.starts_with("VIOLATION")) {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
