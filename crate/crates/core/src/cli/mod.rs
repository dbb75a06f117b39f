//! Command-line front end.

mod inputs;

pub use inputs::{parse_algebra, parse_base, parse_coefficients, parse_model, parse_pair};

use crate::algebra::{AlgebraError, AlgebraMap, FinAlgebra};
use crate::exact::GeneratorKind;
use crate::gca::{check_collapse_by_degree, e2_page, tor_step, BigradedGCA, FreeGCA, GcaError, Spectrum, DEFAULT_BOUND};
use crate::loday::{LodayError, LodayInput};
use crate::simplicial::{FinSimplicialSet, SimplicialError};
use crate::verify::{run_suite, suite_names, VerifyError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Loday(#[from] LodayError),
    #[error(transparent)]
    Gca(#[from] GcaError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "hochschild", version, about = "Exact higher and relative Hochschild homology")]
pub struct Cli {
    /// Worker threads (defaults to all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Homology of a Loday construction
    Hh(HhArgs),
    /// Iterate Tor from a free graded-commutative base
    TorTower(TowerArgs),
    /// Bar spectral sequence E² page for THH of a spectrum
    E2(E2Args),
    /// Degree-based collapse check of an E² page
    Collapse(CollapseArgs),
    /// Run cross-checks; exits nonzero if any fails
    Verify(VerifyArgs),
    /// List the built-in simplicial models
    Models(ModelsArgs),
}

#[derive(Debug, Args)]
pub struct HhArgs {
    /// Built-in model: point, s1, sN, torus, deltaK, boundaryK
    #[arg(long, conflicts_with_all = ["pair", "pair_file"])]
    pub model: Option<String>,
    /// Pair of built-in models `X,Y`; Y may be `point`, `full` or `boundary`
    #[arg(long, conflicts_with = "pair_file")]
    pub pair: Option<String>,
    /// Simplicial set in the text format, with an optional `sub:` line
    #[arg(long)]
    pub pair_file: Option<PathBuf>,
    /// Algebra placed on every simplex (shorthand or JSON file)
    #[arg(long, conflicts_with = "chain")]
    pub algebra: Option<String>,
    /// `A,B,C` for the relative construction; maps match basis labels
    #[arg(long, value_delimiter = ',')]
    pub chain: Option<Vec<String>>,
    /// Z or F_p; used by `fp` and `group:Z/q`
    #[arg(long, default_value = "F2")]
    pub coefficients: String,
    #[arg(long, default_value_t = 6)]
    pub max_degree: usize,
    #[arg(long)]
    pub max_weight: Option<u32>,
    /// Largest block dimension per level
    #[arg(long)]
    pub size_guard: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TowerArgs {
    /// `poly:x:0`, `ext:x:d`, `divpow:x:d`, `trunc:x:d:m`, or a JSON file
    #[arg(long)]
    pub base: String,
    #[arg(long, default_value_t = 1)]
    pub steps: usize,
    #[arg(long, default_value_t = 2)]
    pub prime: u32,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    pub max_degree: usize,
}

#[derive(Debug, Args)]
pub struct E2Args {
    /// ko, tmf, ku, ell or ell:p
    #[arg(long)]
    pub spectrum: String,
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    #[arg(long)]
    pub prime: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    pub max_degree: usize,
}

#[derive(Debug, Args)]
pub struct CollapseArgs {
    #[arg(long, conflicts_with = "page")]
    pub spectrum: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    #[arg(long)]
    pub prime: Option<u32>,
    /// A bigraded page as JSON, every generator with a filtration
    #[arg(long)]
    pub page: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    pub max_degree: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run the whole suite
    #[arg(long)]
    pub all: bool,
    /// Print the available checks
    #[arg(long)]
    pub list: bool,
    /// Checks to run, by name or name prefix
    pub checks: Vec<String>,
}

#[derive(Debug, Args)]
pub struct ModelsArgs {
    /// Highest level to count
    #[arg(long, default_value_t = 4)]
    pub levels: usize,
}

/// Parses `args` (including the program name) and runs the command,
/// writing to `out`. Returns whether every requested check passed.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<bool, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            write!(out, "{e}")?;
            return Ok(true);
        }
        Err(e) => {
            let msg = e.to_string();
            return Err(CliError::Input(msg.trim_start_matches("error: ").trim_end().to_string()));
        }
    };
    execute(&cli, out)
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    if let Some(n) = cli.threads {
        // a second build in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match &cli.command {
        Command::Hh(a) => cmd_hh(a, cli.format, out),
        Command::TorTower(a) => cmd_tor_tower(a, cli.format, out),
        Command::E2(a) => cmd_e2(a, cli.format, out),
        Command::Collapse(a) => cmd_collapse(a, cli.format, out),
        Command::Verify(a) => cmd_verify(a, cli.format, out),
        Command::Models(a) => cmd_models(a, cli.format, out),
    }
}

fn cmd_hh(a: &HhArgs, format: Format, out: &mut dyn Write) -> Result<bool, CliError> {
    let coefficients = parse_coefficients(&a.coefficients)?;
    let pair = if let Some(m) = &a.model {
        crate::simplicial::SimplicialPair::absolute(Arc::new(parse_model(m)?))
    } else if let Some(p) = &a.pair {
        parse_pair(p)?
    } else if let Some(f) = &a.pair_file {
        inputs::parse_pair_file(f)?
    } else {
        return Err(CliError::Input("one of --model, --pair, --pair-file is required".into()));
    };
    let mut input = match (&a.algebra, &a.chain) {
        (Some(spec), None) => {
            let alg = Arc::new(parse_algebra(spec, coefficients)?);
            if pair.sub_simplices().len() == 1 {
                LodayInput::absolute(pair.space().clone(), alg, a.max_degree)
            } else {
                let id = AlgebraMap::identity(alg);
                LodayInput::relative(pair, id.clone(), id, a.max_degree)?
            }
        }
        (None, Some(specs)) if specs.len() == 3 => {
            let algs = specs
                .iter()
                .map(|s| parse_algebra(s, coefficients).map(Arc::new))
                .collect::<Result<Vec<Arc<FinAlgebra>>, _>>()?;
            let maps = inputs::chain_maps(&algs)?;
            LodayInput::relative(pair, maps[0].clone(), maps[1].clone(), a.max_degree)?
        }
        (None, Some(_)) => return Err(CliError::Input("--chain takes exactly three algebras A,B,C".into())),
        _ => return Err(CliError::Input("one of --algebra, --chain is required".into())),
    };
    if let Some(w) = a.max_weight {
        input = input.with_max_weight(w);
    }
    if let Some(g) = a.size_guard {
        input = input.with_size_guard(g);
    }
    let table = input.hh()?;
    match format {
        Format::Json => writeln!(out, "{}", table.to_json())?,
        Format::Table => write!(out, "{table}")?,
    }
    Ok(true)
}

fn write_gca(out: &mut dyn Write, format: Format, title: &str, a: &FreeGCA) -> Result<(), CliError> {
    match format {
        Format::Json => writeln!(out, "{}", a.to_json())?,
        Format::Table => {
            writeln!(out, "{title}")?;
            if a.generators().is_empty() {
                writeln!(out, "  (no generators)")?;
            }
            for g in a.generators() {
                let bideg = g.bidegree().map_or(String::new(), |(s, t)| format!("  ({s},{t})"));
                let kind = match g.kind {
                    GeneratorKind::Exterior => "ext".to_string(),
                    GeneratorKind::Polynomial => "poly".to_string(),
                    GeneratorKind::DividedPower => "divpow".to_string(),
                    GeneratorKind::Truncated(m) => format!("trunc({m})"),
                };
                writeln!(out, "  {kind:<10} {:<16} {:>4}{bideg}", g.name, g.degree)?;
            }
        }
    }
    Ok(())
}

fn cmd_tor_tower(a: &TowerArgs, format: Format, out: &mut dyn Write) -> Result<bool, CliError> {
    let mut stages = vec![parse_base(&a.base, a.prime)?];
    for _ in 0..a.steps {
        stages.push(tor_step(stages.last().unwrap(), a.max_degree)?);
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&stages).expect("serializable"))?,
        Format::Table => {
            for (step, stage) in stages.iter().enumerate() {
                write_gca(out, format, &format!("step {step}"), stage)?;
            }
        }
    }
    Ok(true)
}

fn spectrum(name: &str, prime: Option<u32>) -> Result<Spectrum, CliError> {
    let e: Spectrum = name.parse()?;
    Ok(match prime {
        Some(p) => e.at_prime(p)?,
        None => e,
    })
}

fn cmd_e2(a: &E2Args, format: Format, out: &mut dyn Write) -> Result<bool, CliError> {
    let e = spectrum(&a.spectrum, a.prime)?;
    let page = e2_page(e, a.order, a.max_degree)?;
    write_gca(out, format, &format!("E² for THH^[{}]({e}; HF_{})", a.order, e.prime()), &page)?;
    Ok(true)
}

fn cmd_collapse(a: &CollapseArgs, format: Format, out: &mut dyn Write) -> Result<bool, CliError> {
    let page = match (&a.spectrum, &a.page) {
        (Some(name), None) => e2_page(spectrum(name, a.prime)?, a.order, a.max_degree)?,
        (None, Some(path)) => FreeGCA::from_json(&inputs::read(path)?)?,
        _ => return Err(CliError::Input("one of --spectrum, --page is required".into())),
    };
    let report = check_collapse_by_degree(&BigradedGCA::new(page)?, a.max_degree);
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("reports serialize"))?,
        Format::Table => {
            writeln!(out, "collapses by degrees: {}", report.collapses)?;
            for c in &report.candidates {
                writeln!(
                    out,
                    "  d^{}: {} {:?} -> {} {:?}",
                    c.r, c.source, c.source_bidegree, c.target, c.target_bidegree
                )?;
            }
            for n in &report.notes {
                writeln!(out, "  note: {n}")?;
            }
        }
    }
    Ok(true)
}

fn cmd_verify(a: &VerifyArgs, format: Format, out: &mut dyn Write) -> Result<bool, CliError> {
    if a.list {
        for n in suite_names() {
            writeln!(out, "{n}")?;
        }
        return Ok(true);
    }
    if !a.all && a.checks.is_empty() {
        return Err(CliError::Input("name checks to run, or pass --all".into()));
    }
    let names: Vec<&str> = if a.all { Vec::new() } else { a.checks.iter().map(String::as_str).collect() };
    let results = run_suite(&names)?;
    let mut all_passed = true;
    let mut reports = Vec::new();
    for (name, r) in results {
        match r {
            Ok(report) => {
                all_passed &= report.passed;
                if format == Format::Table {
                    writeln!(out, "{:<28} {} ({} ms)", name, report.summary(), report.runtime_ms)?;
                }
                reports.push(serde_json::to_value(&report).expect("reports serialize"));
            }
            Err(e) => {
                all_passed = false;
                if format == Format::Table {
                    writeln!(out, "{name:<28} ERROR {e}")?;
                }
                reports.push(serde_json::json!({ "name": name, "error": e.to_string() }));
            }
        }
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("json"))?,
        Format::Table => {
            let failed = reports.iter().filter(|r| r.get("passed") != Some(&serde_json::Value::Bool(true))).count();
            writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
        }
    }
    Ok(all_passed)
}

const MODELS: &[(&str, &str)] = &[
    ("point", "a single vertex"),
    ("s1", "minimal circle"),
    ("s2", "minimal 2-sphere (sN for any N)"),
    ("torus", "product of two minimal circles"),
    ("delta1", "standard 1-simplex (deltaK for any K)"),
    ("delta2", "standard 2-simplex"),
    ("boundary2", "boundary of the 2-simplex (boundaryK for any K)"),
];

fn cmd_models(a: &ModelsArgs, format: Format, out: &mut dyn Write) -> Result<bool, CliError> {
    let mut rows = Vec::new();
    for (name, about) in MODELS {
        let x: FinSimplicialSet = parse_model(name)?;
        let counts: Vec<usize> = (0..=a.levels).map(|n| x.level(n).len()).collect();
        rows.push((name, about, x.nondegenerate_count(), counts));
    }
    match format {
        Format::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, about, nd, c)| serde_json::json!({ "name": n, "about": about, "nondegenerate": nd, "levels": c }))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
        Format::Table => {
            writeln!(out, "{:<10} {:>4}  {:<24} about", "model", "nd", "simplices per level")?;
            for (n, about, nd, c) in rows {
                let counts: Vec<String> = c.iter().map(usize::to_string).collect();
                writeln!(out, "{n:<10} {nd:>4}  {:<24} {about}", counts.join(" "))?;
            }
        }
    }
    Ok(true)
}
