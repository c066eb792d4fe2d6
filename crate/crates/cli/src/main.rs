mod commands;
mod report;
mod seed_check;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use faltung::exact::ExactRat;

use report::{render_csv, render_json, render_plain, Format, RunReport};

/// Environment variable holding the default working precision in bits.
pub const PREC_ENV: &str = "FALTUNG_PREC";

const EXIT_DOMAIN: u8 = 2;
const EXIT_CONSISTENCY: u8 = 3;
const EXIT_USAGE: u8 = 64;

fn parse_rat(s: &str) -> Result<ExactRat, String> {
    faltung::exact::parse_rat(s).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "faltung", version, about = "Exact convolution recurrences and their asymptotic constants")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
    /// Working precision in bits for floating-point stages.
    #[arg(long, global = true, env = PREC_ENV, default_value_t = 512)]
    prec: usize,
    /// Decimal digits shown for floating-point values.
    #[arg(long, global = true, default_value_t = 30)]
    digits: usize,
    /// Also run the invariant checks of the module behind the command.
    #[arg(long, global = true)]
    seed_check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of a(k,l).
    ATable {
        #[arg(long)]
        max_k: usize,
        #[arg(long)]
        max_l: usize,
    },
    /// alpha(1..=n) for a given first term.
    Alpha {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1/50", value_parser = parse_rat)]
        alpha1: ExactRat,
    },
    /// b(0..=g).
    BSeq {
        #[arg(long)]
        g: usize,
    },
    /// Checks alpha(1..=g) at 1/50 against beta(1..=g).
    VerifyIdentity {
        #[arg(long)]
        g: usize,
    },
    /// w(0..=n), exactly or in floating point.
    W {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "exact")]
        mode: commands::WModeArg,
    },
    /// Joint moment from a(k,l).
    Moment {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Residuals of the differential equation for the alpha series.
    VerifyUOde {
        #[arg(long, value_parser = parse_rat)]
        alpha1: ExactRat,
        #[arg(long)]
        order: usize,
    },
    /// Residuals of Painleve I for the transformed series.
    VerifyPainleve {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "1/50", value_parser = parse_rat)]
        alpha1: ExactRat,
    },
    /// Closed-form count f(n, n+m).
    Wright {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Enumerated count f(n, e).
    WrightOracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
    },
    /// Wright constant rho(m), optionally with its ratio extrapolation.
    Rho {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        converge: bool,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
    },
    /// Rooted map counts T_g(0..order).
    Tutte {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        order: usize,
    },
    /// Rooted map constant tau(g), optionally with its ratio extrapolation.
    Tau {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        converge: bool,
        #[arg(long, default_value_t = 200)]
        n_max: usize,
    },
    /// Limit of alpha(n)/((n-1)!)^2.
    CLimit {
        #[arg(long, value_parser = parse_rat)]
        alpha1: ExactRat,
        #[arg(long, default_value_t = 160)]
        n_max: usize,
    },
    /// Growth constant of w(n).
    WGrowth {
        #[arg(long, default_value_t = 2000)]
        n_max: usize,
    },
    /// Ratio of a sequence to its leading asymptotic form.
    CheckAsymptotics {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 120)]
        n_max: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Self::ATable { .. } => "a-table",
            Self::Alpha { .. } => "alpha",
            Self::BSeq { .. } => "b-seq",
            Self::VerifyIdentity { .. } => "verify-identity",
            Self::W { .. } => "w",
            Self::Moment { .. } => "moment",
            Self::VerifyUOde { .. } => "verify-u-ode",
            Self::VerifyPainleve { .. } => "verify-painleve",
            Self::Wright { .. } => "wright",
            Self::WrightOracle { .. } => "wright-oracle",
            Self::Rho { .. } => "rho",
            Self::Tutte { .. } => "tutte",
            Self::Tau { .. } => "tau",
            Self::CLimit { .. } => "c-limit",
            Self::WGrowth { .. } => "w-growth",
            Self::CheckAsymptotics { .. } => "check-asymptotics",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    run(cli)
}

fn run(cli: Cli) -> ExitCode {
    let start = Instant::now();
    let name = cli.command.name();
    let opts = commands::Options { prec: cli.prec, digits: cli.digits };
    let outcome = match commands::execute(&cli.command, &opts) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                faltung::Error::Domain(_) => EXIT_DOMAIN,
                faltung::Error::Consistency(_) => EXIT_CONSISTENCY,
            });
        }
    };
    if cli.format == Format::Csv && outcome.table.is_none() {
        eprintln!("error: `{name}` produces a scalar result; --format csv is only available for sequences");
        return ExitCode::from(EXIT_USAGE);
    }
    let seed = cli.seed_check.then(|| seed_check::run_for(&cli.command));
    let report = RunReport {
        command: name.to_string(),
        inputs: outcome.inputs,
        outputs: outcome.outputs,
        tags: outcome.tags,
        seed_check: seed.clone(),
        elapsed: start.elapsed().as_secs_f64(),
        artifact_version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let text = match cli.format {
        Format::Json => render_json(&report),
        Format::Csv => render_csv(outcome.table.as_ref().expect("checked above")),
        Format::Plain => render_plain(&report, outcome.table.as_ref()),
    };
    // Ignore a closed pipe such as `| head`.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if let Some(why) = outcome.violation {
        eprintln!("verification failed: {why}");
        return ExitCode::from(EXIT_CONSISTENCY);
    }
    if let Some(failed) = seed.iter().flatten().find(|c| !c.passed) {
        eprintln!("seed check failed: {}", failed.name);
        return ExitCode::from(EXIT_CONSISTENCY);
    }
    ExitCode::SUCCESS
}
