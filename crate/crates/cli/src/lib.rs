//! Front end for the `liebound` binary: argument parsing, rendering and
//! verification runs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

pub mod table;
pub mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

use liebound::catalogue::{parse_group_spec, Catalogue, CatalogueError, SpecError};
use liebound::flagcalc::FlagError;
use liebound::repdim::{self, RepError};
use liebound::rootkit::{parse_type_and_rank, RootError};
use liebound::zimmerbounds::{self, BoundError, FULL_ENUMERATION_RANK_CAP};

use table::{Format, TableRow};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Catalogue(#[from] CatalogueError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "liebound", version, about = "Parabolic and representation invariants of real simple Lie groups")]
pub struct Cli {
    /// Catalogue file (JSON Lines) replacing the bundled one.
    #[arg(long, global = true, value_name = "PATH")]
    catalogue: Option<PathBuf>,
    /// Output format for tables.
    #[arg(long, global = true, value_enum, default_value = "md")]
    format: Format,
    /// Largest group parameter on verification grids.
    #[arg(long, global = true)]
    max: Option<i64>,
    /// Largest rank on verification grids.
    #[arg(long = "max-rank", global = true)]
    max_rank: Option<usize>,
    /// Print failures only.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One row of invariants for a group, e.g. `SU(4,2)`.
    Invariants { spec: String },
    /// Invariant table over families and parameter ranges.
    Table {
        /// Family filter, repeatable (e.g. `SO*`, `SU`, `SL_C`, `E6`).
        #[arg(long = "family", value_parser = table::parse_family)]
        families: Vec<liebound::catalogue::Family>,
        /// Range for the parameter n (inclusive), as `a..b` or `a`.
        #[arg(long, value_parser = table::parse_range)]
        n: Option<std::ops::RangeInclusive<i64>>,
        /// Range for m in two-parameter families; defaults to the `--n` range.
        #[arg(long, value_parser = table::parse_range)]
        m: Option<std::ops::RangeInclusive<i64>>,
    },
    /// Every proper parabolic with its bounds, then the lower bound s_lower.
    Parabolics { spec: String },
    /// Run a named check and report failures.
    Verify {
        #[arg(value_enum)]
        check: verify::Check,
    },
    /// Weyl dimension of a highest weight, e.g. `weyl-dim A4 1,0,0,1`.
    WeylDim {
        /// Cartan type and rank such as `B3` or `G2`.
        root_type: String,
        /// Coordinates in fundamental weights, comma separated.
        weight: String,
    },
    /// Minimal dimension of a nontrivial real representation.
    MinRep { spec: String },
}

pub enum Outcome {
    Done(String),
    Failed(String),
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let loaded;
    let cat = match &cli.catalogue {
        Some(path) => {
            loaded = Catalogue::load(path)?;
            &loaded
        }
        None => Catalogue::bundled(),
    };
    let out = match &cli.command {
        Command::Invariants { spec } => {
            let spec = parse_group_spec(spec)?;
            table::render(&[TableRow::compute(cat, &spec)?], cli.format)?
        }
        Command::Table { families, n, m } => {
            let specs = table::select(cat, families, n.clone(), m.clone())?;
            let rows = specs.iter().map(|s| TableRow::compute(cat, s)).collect::<Result<Vec<_>, _>>()?;
            table::render(&rows, cli.format)?
        }
        Command::Parabolics { spec } => parabolics(cat, spec)?,
        Command::Verify { check } => {
            let max = cli.max.unwrap_or(check.default_max());
            let max_rank = cli.max_rank.unwrap_or(check.default_max_rank());
            let report = verify::run(cat, *check, max, max_rank)?;
            let name = clap::ValueEnum::to_possible_value(check).expect("named check").get_name().to_string();
            let mut text = String::new();
            for f in &report.failures {
                writeln!(text, "FAIL {f}").unwrap();
            }
            if report.failures.is_empty() {
                if !cli.quiet {
                    writeln!(text, "PASS {name}: {} checks", report.checked).unwrap();
                }
                return Ok(Outcome::Done(text));
            }
            writeln!(text, "FAIL {name}: {} of {} checks failed", report.failures.len(), report.checked).unwrap();
            return Ok(Outcome::Failed(text));
        }
        Command::WeylDim { root_type, weight } => {
            let (t, rank) = parse_type_and_rank(root_type)?;
            let lambda = weight
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Usage(format!("invalid weight `{weight}`")))?;
            format!("{}\n", repdim::weyl_dim(t, rank, &lambda)?)
        }
        Command::MinRep { spec } => {
            let spec = parse_group_spec(spec)?;
            let r = repdim::min_real_rep(cat, &spec)?;
            let source = match r.source {
                repdim::Source::Classifier => "classifier",
                repdim::Source::Catalogue => "catalogue",
            };
            let mut text = format!("{spec}: n = {} (source {source}, exact {})\n", r.value, r.exact);
            if !r.exact {
                writeln!(text, "proven lower bound {}", r.lower).unwrap();
            }
            for w in &r.minimizers {
                let w: Vec<String> = w.iter().map(i64::to_string).collect();
                writeln!(text, "minimizer [{}]", w.join(",")).unwrap();
            }
            text
        }
    };
    Ok(Outcome::Done(out))
}

fn parabolics(cat: &Catalogue, spec: &str) -> Result<String, CliError> {
    let spec = parse_group_spec(spec)?;
    let d = cat.describe(&spec)?;
    if d.rank > FULL_ENUMERATION_RANK_CAP {
        return Err(CliError::Usage(format!(
            "{spec} has rank {}; listing is limited to rank {FULL_ENUMERATION_RANK_CAP}",
            d.rank
        )));
    }
    let report = zimmerbounds::s_lower(cat, &d)?;
    let mut out = String::new();
    for row in &report.rows {
        let sr: Vec<String> = row.superrigidity.iter().map(|(delta, v)| format!("{delta}:{v}")).collect();
        let sr = if sr.is_empty() { "-".to_string() } else { sr.join(",") };
        let refined = row.refined.map_or("-".to_string(), |v| v.to_string());
        writeln!(
            out,
            "{}\tr0={}\tsuperrigidity={sr}\trefined={refined}\teffective={}",
            row.pi_q, row.r0_bound, row.effective
        )
        .unwrap();
    }
    let argmin: Vec<String> = report.argmin.iter().map(ToString::to_string).collect();
    writeln!(out, "{spec}: s_lower = {} (lower bound), argmin {}", report.s_lower, argmin.join(" ")).unwrap();
    Ok(out)
}

