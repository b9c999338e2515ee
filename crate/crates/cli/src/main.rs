//! `secantdim`: dimensions of secant varieties and their Grassmannians.
//!
//! Exit codes: 0 success, 1 suite mismatch, 2 usage error, 3 sampling
//! failure, 4 validation failure.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use secant_core::exactfield::DEFAULT_PRIME;
use secant_core::report::{CatalogListing, Report, Status, VarietyDescriptor};
use secant_core::suite::run_suite;
use secant_core::varieties::{self, load_variety, parse_selector, validate, Variety};
use secant_core::{
    check_table, dimension_table, grass_dim, grass_secant_dim, secant_dim, span_dim, ComputeCfg,
    Error,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SAMPLING: u8 = 3;
const EXIT_INVALID: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "secantdim", version, about)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Prime modulus for the finite field (between 2^31 and 2^63).
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Seed for all random sampling.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Independent trials per dimension.
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    /// Resampling attempts per trial before giving up.
    #[arg(long, global = true, default_value_t = 8)]
    retry_cap: usize,
    /// Recompute each dimension once over the rationals.
    #[arg(long, global = true)]
    cross_check: bool,
    /// Emit a JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,
}

impl GlobalOpts {
    fn cfg(&self) -> ComputeCfg {
        ComputeCfg {
            prime: self.prime,
            seed: self.seed,
            trials: self.trials,
            retry_cap: self.retry_cap,
            cross_check: self.cross_check,
            ..ComputeCfg::default()
        }
    }
}

#[derive(Args, Debug)]
struct VarietyArg {
    /// Builtin selector such as `veronese:2,2`, `scroll:3,1` or `cone-rnc4`.
    #[arg(
        long,
        conflicts_with = "variety_file",
        required_unless_present = "variety_file"
    )]
    variety: Option<String>,
    /// Variety document in JSON.
    #[arg(long)]
    variety_file: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    #[value(name = "S")]
    S,
    #[value(name = "G")]
    G,
    #[value(name = "GHK")]
    Ghk,
    #[value(name = "span")]
    Span,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the builtin varieties.
    Catalog {
        /// Keep only entries whose name contains this text.
        #[arg(long, default_value = "")]
        filter: String,
    },
    /// Compute one dimension.
    Dims {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Validate a variety, then compute every dimension up to `--max-k` and
    /// evaluate the implication checks.
    Scan {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long, default_value_t = 2)]
        max_k: usize,
    },
    /// Run the fixed verification suite on surfaces in P^5.
    Verify {
        /// Flip the cone flag of a suite fixture (negative-path testing).
        #[arg(long, value_name = "FIXTURE")]
        mislabel_cone: Vec<String>,
    },
}

/// Failure of a command, mapped to an exit code.
enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Engine(e) if e.is_sampling_failure() => EXIT_SAMPLING,
            Failure::Engine(Error::BoundExceeded { .. }) => EXIT_SAMPLING,
            Failure::Engine(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Engine(e) => write!(f, "{e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let g = &cli.global;
    let cfg = g.cfg();
    cfg.field()?;
    match &cli.command {
        Command::Catalog { filter } => {
            let rows: Vec<_> = varieties::catalog()
                .iter()
                .filter(|v| v.name().contains(filter.as_str()))
                .map(Variety::info)
                .collect();
            if g.json {
                print!(
                    "{}",
                    secant_core::report::canonical_json(&CatalogListing::new(rows))
                );
            } else {
                print!("{}", render::catalog(&rows));
            }
            Ok(0)
        }
        Command::Dims {
            variety,
            kind,
            h,
            k,
        } => {
            let (x, desc) = resolve(variety)?;
            let need_k = || k.ok_or_else(|| Failure::Usage("--k is required for this kind".into()));
            let est = match kind {
                KindArg::Span => span_dim(&x, &cfg)?,
                KindArg::S => secant_dim(&x, need_k()?, &cfg)?,
                KindArg::G => grass_dim(&x, need_k()?, &cfg)?,
                KindArg::Ghk => {
                    let h = h.ok_or_else(|| Failure::Usage("--h is required for GHK".into()))?;
                    grass_secant_dim(&x, h, need_k()?, &cfg)?
                }
            };
            let mut report = Report::new("dims", &cfg);
            report.variety = Some(desc);
            report.results.push(est);
            emit(g.json, &report, render::dims(&report));
            Ok(0)
        }
        Command::Scan { variety, max_k } => {
            let (x, desc) = resolve(variety)?;
            let mut report = Report::new("scan", &cfg);
            report.variety = Some(desc);
            let v = validate(&x, &cfg)?;
            let valid = v.is_valid();
            report.validation = Some(v);
            if !valid {
                report.status = Status::Fail;
                emit(g.json, &report, render::scan(&report));
                eprintln!("error: {} fails the standing hypotheses", x.name());
                return Ok(EXIT_INVALID);
            }
            let table = dimension_table(&x, *max_k, &cfg)?;
            report.results = table.rows();
            report.checks = check_table(&x, &table)?;
            if report.checks.iter().any(|c| c.failed()) {
                report.status = Status::Fail;
            }
            emit(g.json, &report, render::scan(&report));
            Ok(0)
        }
        Command::Verify { mislabel_cone } => {
            let outcome = run_suite(&cfg, mislabel_cone)?;
            let mut report = Report::new("verify", &cfg);
            report.suite = outcome.lines.clone();
            report.checks = outcome.checks.into_iter().flat_map(|(_, c)| c).collect();
            let passed = outcome.lines.iter().all(|l| l.passed);
            if !passed {
                report.status = Status::Fail;
            }
            emit(g.json, &report, render::suite(&report));
            Ok(if passed { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn emit(json: bool, report: &Report, table: String) {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{table}");
    }
}

fn resolve(arg: &VarietyArg) -> Result<(Variety, VarietyDescriptor), Failure> {
    if let Some(path) = &arg.variety_file {
        let bytes = fs::read(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| Failure::Usage(format!("{} is not UTF-8", path.display())))?;
        let x = load_variety(&text)?;
        let digest = hex::encode(Sha256::digest(&bytes));
        let desc = VarietyDescriptor::file(&x, digest);
        return Ok((x, desc));
    }
    let sel = arg.variety.as_deref().expect("clap enforces one source");
    let x = parse_selector(sel)?;
    let desc = VarietyDescriptor::builtin(&x);
    Ok((x, desc))
}
