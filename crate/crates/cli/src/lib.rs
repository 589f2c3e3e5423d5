//! Command-line front end for the tower index library.

use std::io::Write;
use std::path::{Path, PathBuf};

use bott_index::localization::{self, AGREEMENT_TOLERANCE};
use bott_index::sampling::{random_spec, RandomSpecBounds};
use bott_index::{cube, fixtures, Character, Error, RationalCharacterExpr, TowerSpec, ValidateOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

mod report;

pub use report::{compare, CompareReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bott-index", version, about = "Index characters of line bundles over Bott towers")]
pub struct Cli {
    /// Tower spec JSON file.
    #[arg(short = 'f', long = "file", global = true)]
    pub file: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads for `verify`; results keep input order.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Treat absent coupling entries as zero.
    #[arg(long, global = true)]
    pub zero_fill_c: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Cube,
    Demazure,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a spec file and print its shape.
    Validate,
    /// List the signed lattice points of the twisted cube.
    Cube,
    /// Compute the index character.
    Char {
        #[arg(long, value_enum, default_value_t = Method::Demazure)]
        method: Method,
    },
    /// Compare the cube and operator characters.
    Verify(VerifyArgs),
    /// Compare a rational fixed-point expression with a character numerically.
    LocalizeCheck {
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Rational expression JSON; defaults to the built-in instance.
        #[arg(long)]
        expr: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, default_value_t = 3)]
    pub max_m: usize,
    #[arg(long, default_value_t = 3)]
    pub max_n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_abs_c: i64,
    #[arg(long, default_value_t = 7)]
    pub max_abs_l: i64,
}

/// Failure carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Invalid(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_IO,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Invalid(m) | CliError::Mismatch(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Invalid(format!("{}: {e}", error_kind(&e)))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NonPositiveDimension { .. } => "NonPositiveDimension",
        Error::EmptyTower => "EmptyTower",
        Error::TwistCountMismatch { .. } => "TwistCountMismatch",
        Error::BadCIndex { .. } => "BadCIndex",
        Error::MissingCEntry { .. } => "MissingCEntry",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::Overflow(_) => "Overflow",
        Error::MalformedWeight { .. } => "MalformedWeight",
        Error::NotRankOne { .. } => "NotRankOne",
        Error::ZeroBaseWithNegativeExponent { .. } => "ZeroBaseWithNegativeExponent",
        Error::NearPole { .. } => "NearPole",
        Error::ExhaustedSampling { .. } => "ExhaustedSampling",
        Error::MalformedExpr(_) => "MalformedExpr",
        Error::Parse(_) => "Parse",
    }
}

/// Parses `args` and runs the command, writing diagnostics to `err`.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Validate => {
            let spec = load_spec(cli)?;
            if cli.format == Some(Format::Json) {
                writeln!(out, "{}", spec.to_json())?;
            } else {
                writeln!(out, "m={}, N={}", spec.height(), spec.total_rank())?;
            }
        }
        Command::Cube => {
            let spec = load_spec(cli)?;
            let points = cube::enumerate(&spec)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Csv => cube::write_csv(&spec, &points, &mut *out)?,
                Format::Json => {
                    cube::write_json(&points, &mut *out)?;
                    writeln!(out)?;
                }
                Format::Text => {
                    for p in &points {
                        writeln!(out, "{:+} {:?}", p.density, p.x)?;
                    }
                }
            }
        }
        Command::Char { method } => {
            let spec = load_spec(cli)?;
            let chi = character(&spec, *method)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => {
                    serde_json::to_writer(&mut *out, &chi)?;
                    writeln!(out)?;
                }
                Format::Text => writeln!(out, "{}", chi.pretty(&spec))?,
                Format::Csv => return Err(CliError::Invalid("char supports --format json or text".into())),
            }
        }
        Command::Verify(args) => verify(cli, args, out)?,
        Command::LocalizeCheck { trials, expr } => localize_check(cli, *trials, expr.as_deref(), out)?,
    }
    Ok(())
}

pub fn character(spec: &TowerSpec, method: Method) -> bott_index::Result<Character> {
    match method {
        Method::Cube => bott_index::character_via_cube(spec),
        Method::Demazure => bott_index::demazure_character(spec),
    }
}

/// Computes both characters and compares them, releasing each as soon as possible.
pub fn verify_spec(spec: &TowerSpec) -> bott_index::Result<CompareReport> {
    let from_cube = character(spec, Method::Cube)?;
    let from_operators = character(spec, Method::Demazure)?;
    compare(&from_cube, &from_operators)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_spec(cli: &Cli) -> Result<TowerSpec, CliError> {
    let path = cli.file.as_deref().ok_or_else(|| CliError::Invalid("a spec file is required (-f)".into()))?;
    let text = read_file(path)?;
    Ok(TowerSpec::from_json(&text, ValidateOptions { zero_fill_c: cli.zero_fill_c })?)
}

#[derive(Serialize)]
struct TrialRecord<'a> {
    trial: usize,
    seed: u64,
    spec: serde_json::Value,
    #[serde(flatten)]
    report: &'a CompareReport,
}

fn verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let json = cli.format == Some(Format::Json);
    if !args.random {
        let spec = load_spec(cli)?;
        let report = verify_spec(&spec)?;
        if json {
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        } else {
            write_report(out, &report)?;
        }
        return if report.equal { Ok(()) } else { Err(CliError::Mismatch("characters differ".into())) };
    }

    let bounds = RandomSpecBounds {
        max_m: args.max_m,
        max_n: args.max_n,
        max_abs_c: args.max_abs_c,
        max_abs_l: args.max_abs_l,
    };
    // Specs are drawn sequentially so the stream is independent of --jobs.
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let specs = (0..args.trials)
        .map(|_| random_spec(&mut rng, &bounds))
        .collect::<bott_index::Result<Vec<_>>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build()
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    let reports: Vec<bott_index::Result<CompareReport>> = pool.install(|| specs.par_iter().map(verify_spec).collect());

    let mut mismatches = 0;
    for (trial, (spec, report)) in specs.iter().zip(reports).enumerate() {
        let report = report?;
        if !report.equal {
            mismatches += 1;
        }
        if json {
            let record = TrialRecord {
                trial,
                seed: cli.seed,
                spec: serde_json::from_str(&spec.to_json())?,
                report: &report,
            };
            serde_json::to_writer(&mut *out, &record)?;
            writeln!(out)?;
        } else {
            write!(out, "trial {trial} spec={} ", spec.to_json())?;
            write_report(out, &report)?;
        }
    }
    writeln!(out, "seed={} trials={} mismatches={mismatches}", cli.seed, args.trials)?;
    if mismatches == 0 {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("{mismatches} of {} trials differ (seed {})", args.trials, cli.seed)))
    }
}

fn write_report(out: &mut dyn Write, r: &CompareReport) -> std::io::Result<()> {
    writeln!(
        out,
        "equal={} n_terms={} signed_count={} only_in_cube={} only_in_demazure={}",
        r.equal,
        r.n_terms,
        r.signed_count,
        r.only_in_cube.len(),
        r.only_in_demazure.len()
    )
}

fn localize_check(cli: &Cli, trials: usize, expr: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    if trials == 0 {
        return Err(CliError::Invalid("--trials must be positive".into()));
    }
    let spec = match &cli.file {
        Some(_) => load_spec(cli)?,
        None => fixtures::mixed_sign_tower(),
    };
    let expr = match expr {
        Some(path) => RationalCharacterExpr::from_json(&read_file(path)?)?,
        None => localization::mixed_sign_localization(),
    };
    let chi: Character = bott_index::demazure_character(&spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let report = bott_index::localization_check::<f64, _, _>(&chi, &expr, trials, &mut rng)?;
    let pass = report.max_error < AGREEMENT_TOLERANCE;
    writeln!(
        out,
        "seed={} trials={} pole_rejections={} max_relative_error={:e} tolerance={:e} {}",
        cli.seed,
        report.trials,
        report.pole_rejections,
        report.max_error,
        AGREEMENT_TOLERANCE,
        if pass { "PASS" } else { "FAIL" }
    )?;
    if pass {
        Ok(())
    } else {
        Err(CliError::Mismatch("expression disagrees with the character".into()))
    }
}
