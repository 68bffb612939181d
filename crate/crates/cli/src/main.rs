//! `gammatch`: compute, verify and survey `U_{Γ,n}` from the command line.

mod compute;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gammatch_core::reciprocity::{FamilyParams, FAMILY_IDS};
use gammatch_core::{Error, FamilySpec};

#[derive(Parser)]
#[command(name = "gammatch", version, about = "Consecutive pattern avoidance via the reciprocity method")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print U_n, NM_n(1, y) or NM_n(x, y) for one family.
    Compute(ComputeArgs),
    /// Run a verification suite and print one PASS/FAIL line per check.
    Verify(VerifyArgs),
    /// Log-concavity and unimodality of U_n(-y) for a range of n.
    Survey(SurveyArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family id, one of: 1324-123, 1324-p, gamma-k1k2, gamma-k1k1s, gamma-222,
    /// gamma-223, tau-1432, tau-142536, tau-162534, set-14253-15243.
    #[arg(long)]
    family: String,
    #[arg(long)]
    k1: Option<usize>,
    #[arg(long)]
    k2: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
}

impl FamilyArgs {
    fn spec(&self) -> gammatch_core::Result<FamilySpec> {
        let params = FamilyParams { k1: self.k1, k2: self.k2, p: self.p, s: self.s };
        FamilySpec::from_id(&self.family, &params).map_err(|e| match e {
            Error::UnsupportedFamily(id) => {
                Error::UnsupportedFamily(format!("{id} (known ids: {})", FAMILY_IDS.join(", ")))
            }
            e => e,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    /// U_n(y)
    U,
    /// NM_n(1, y)
    Nm,
    /// NM_n(x, y)
    NmXy,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursion,
    /// Brute-force enumeration of S_n, then series inversion.
    Inversion,
    /// Prefix transfer count, then series inversion; reaches larger n.
    PrefixCount,
    FixedPoints,
    ClosedForm,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "u")]
    what: What,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_enum, default_value = "recursion")]
    method: Method,
    /// Print U_n(y) with its signs instead of U_n(-y).
    #[arg(long)]
    raw: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Tables,
    Triangle,
    Involution,
    Bijections,
    ClosedForms,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest n to check; each suite has its own default.
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Args)]
struct SurveyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_UNAVAILABLE: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MethodUnavailable { .. } => EXIT_UNAVAILABLE,
        Error::InvalidInput(_)
        | Error::PatternNotStartingWithOne(_)
        | Error::UnsupportedFamily(_)
        | Error::InvalidParameters { .. }
        | Error::EnumerationCap { .. } => EXIT_INVALID,
        Error::NotInClass(_) | Error::Arithmetic(_) => EXIT_VERIFY_FAILED,
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("GAMMATCH_THREADS") else { return Ok(()) };
    let threads: usize = value.trim().parse().map_err(|_| format!("GAMMATCH_THREADS={value:?} is not a number"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID } else { 0 });
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_INVALID);
    }
    let result = match cli.command {
        Command::Compute(args) => compute::run(&args).map(|()| true),
        Command::Verify(args) => Ok(suites::run(args.suite, args.n_max)),
        Command::Survey(args) => compute::survey(&args).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
