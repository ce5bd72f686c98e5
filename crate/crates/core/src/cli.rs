//! Command-line front end. Exit codes: 0 when everything passes, 1 when a
//! verification check fails, 2 for usage and input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::crystal_graph::Format;
use crate::error::{Error, Result};
use crate::family::{parse_word, AdjointFamily, FamilyRegistry, Start};
use crate::util::parse_coords;
use crate::verify::Check;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `|B_l|` processed without `--force`.
pub const SIZE_LIMIT: u128 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "adjcrys", version, about = "Generalized adjoint crystals: graphs and exhaustive checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the crystal graph of B_l, or of one component B(kθ).
    Graph(GraphArgs),
    /// Run the structural checks and print a PASS/FAIL table.
    Verify(VerifyArgs),
    /// Apply a word of Kashiwara operators to an element.
    Apply(ApplyArgs),
}

#[derive(Debug, Args)]
pub struct RunConfig {
    /// a1, c1 or d2.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub rank: usize,
    #[arg(long)]
    pub level: u32,
    /// Allow instances with more than 10^6 elements.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub config: RunConfig,
    /// Restrict to B(kθ) with its classical arrows.
    #[arg(long)]
    pub component: Option<u32>,
    #[arg(long, default_value = "dot", value_parser = parse_format)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub config: RunConfig,
    /// `all`, or a comma-separated list of axioms, embedding, commute,
    /// boundary, multiplicity, f0-landing, promotion, alpha.
    #[arg(long, default_value = "all", value_parser = parse_checks)]
    pub check: CheckSelection,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    #[command(flatten)]
    pub config: RunConfig,
    /// Comma-separated coordinates, or `highest-of` together with --k.
    #[arg(long)]
    pub start: String,
    #[arg(long)]
    pub k: Option<u32>,
    /// Operators applied left to right, e.g. "f0 f1 e2".
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSelection(pub Vec<Check>);

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_checks(s: &str) -> std::result::Result<CheckSelection, String> {
    if s == "all" {
        return Ok(CheckSelection(Check::ALL.to_vec()));
    }
    let checks = s
        .split(',')
        .map(|c| {
            c.trim().parse::<Check>().map_err(|e| {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("{e}; expected `all` or a comma-separated list of {}", names.join(", "))
            })
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(CheckSelection(checks))
}

fn resolve<'r>(registry: &'r FamilyRegistry, config: &RunConfig) -> Result<&'r dyn AdjointFamily> {
    let family = registry.get(&config.family)?;
    let size = family.cardinality(config.rank, config.level)?;
    if size > SIZE_LIMIT && !config.force {
        return Err(Error::TooLarge {
            size,
            limit: SIZE_LIMIT,
        });
    }
    Ok(family)
}

fn emit(text: &str, path: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::Io(format!("cannot write output: {e}"))),
    }
}

fn execute(registry: &FamilyRegistry, cli: Cli, stdout: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Graph(args) => {
            let family = resolve(registry, &args.config)?;
            let graph = family.graph(args.config.rank, args.config.level, args.component)?;
            emit(&graph.export(args.format)?, args.out.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let family = resolve(registry, &args.config)?;
            let report = family.verify(args.config.rank, args.config.level, &args.check.0)?;
            emit(&report.render(), args.out.as_ref(), stdout)?;
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Apply(args) => {
            let family = registry.get(&args.config.family)?;
            let start = match (args.start.trim(), args.k) {
                ("highest-of", Some(k)) => {
                    resolve(registry, &args.config)?;
                    Start::HighestOf(k)
                }
                ("highest-of", None) => return Err(Error::Parse("highest-of needs --k".into())),
                (coords, _) => Start::Coords(parse_coords(coords).map_err(Error::Parse)?),
            };
            let word = parse_word(&args.word)?;
            let trajectory = family.apply(args.config.rank, args.config.level, &start, &word)?;
            emit(&trajectory.render(), None, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first) and runs the command with the builtin
/// families, returning the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(&FamilyRegistry::builtin(), args, stdout, stderr)
}

pub fn run_with<I, T>(registry: &FamilyRegistry, args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(registry, cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
