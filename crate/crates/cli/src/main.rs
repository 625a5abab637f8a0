//! `nsatz`: hypothesis checks, bounds and verified membership certificates
//! for sparse polynomial systems.
//!
//! Exit codes: 0 success or true, 1 unreadable input, 2 hypothesis failure
//! or unverifiable hypothesis, 3 negative mathematical verdict.

mod commands;
mod system;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CheckMode, OracleQuery, PolytopeOp, SolveArgs};
use nsatz_core::{Execution, TheoremTag};
use system::{InputError, System};

#[derive(Debug, Parser)]
#[command(
    name = "nsatz",
    version,
    about = "Sparse effective Nullstellensatz certificates"
)]
struct Cli {
    /// Run every sweep on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// System file (JSON).
    file: PathBuf,
    /// Accept polynomials written as infix strings such as "z1^2*z2 - 1".
    #[arg(long)]
    parse_infix: bool,
}

impl Input {
    fn load(&self) -> anyhow::Result<System> {
        System::load(&self.file, self.parse_infix)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TheoremArg {
    Macaulay,
    Noether,
    BrianconSkoda,
    Tuitman,
    Custom,
}

impl From<TheoremArg> for TheoremTag {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Macaulay => TheoremTag::Macaulay,
            TheoremArg::Noether => TheoremTag::Noether,
            TheoremArg::BrianconSkoda => TheoremTag::BrianconSkoda,
            TheoremArg::Tuitman => TheoremTag::Tuitman,
            TheoremArg::Custom => TheoremTag::Custom,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Facial-system sweep: common zeros anywhere or at infinity.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "anywhere")]
        mode: CheckMode,
        /// Named polytope from the system file (default: Newton polytope).
        #[arg(long)]
        polytope: Option<String>,
        /// Write the verdict as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Plan a bound under a theorem and solve for a certificate.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        polytope: Option<String>,
        /// Use this e instead of the minimal one (must not be smaller).
        #[arg(long)]
        e_override: Option<i64>,
        /// Largest dilation tried when escalating.
        #[arg(long)]
        cmax: Option<i64>,
        /// Accept the target as integral over the ideal.
        #[arg(long)]
        assert_integral_closure: bool,
        /// Power of the target for the custom theorem.
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Write the certificate as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the plan and hypothesis report as JSON.
        #[arg(long)]
        plan_out: Option<PathBuf>,
    },
    /// Check a certificate against a system file.
    Verify {
        #[command(flatten)]
        input: Input,
        certificate: PathBuf,
    },
    /// Sparse bound against classical dense references.
    Compare {
        #[command(flatten)]
        input: Input,
    },
    /// Gröbner-basis oracle queries.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(value_enum)]
        query: OracleQuery,
    },
    /// Polytope utilities on polytope JSON files.
    Polytope {
        #[command(subcommand)]
        op: PolytopeOp,
    },
    /// Sample generic polynomials supported on a polytope.
    Probe {
        /// Polytope JSON file.
        polytope: PathBuf,
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the sampled system as a system file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match &cli.command {
        Command::Check {
            input,
            mode,
            polytope,
            out,
        } => commands::check(
            &input.load()?,
            *mode,
            polytope.as_deref(),
            exec,
            out.as_deref(),
        ),
        Command::Solve {
            input,
            theorem,
            polytope,
            e_override,
            cmax,
            assert_integral_closure,
            power,
            out,
            plan_out,
        } => {
            let args = SolveArgs {
                theorem: (*theorem).into(),
                polytope: polytope.as_deref(),
                e_override: *e_override,
                cmax: *cmax,
                assert_integral_closure: *assert_integral_closure,
                power: *power,
                out: out.as_deref(),
                plan_out: plan_out.as_deref(),
            };
            commands::solve(&input.load()?, &args, exec)
        }
        Command::Verify { input, certificate } => commands::verify(&input.load()?, certificate),
        Command::Compare { input } => commands::compare(&input.load()?),
        Command::Oracle { input, query } => commands::oracle(&input.load()?, *query),
        Command::Polytope { op } => commands::polytope(op),
        Command::Probe {
            polytope,
            count,
            seed,
            out,
        } => commands::probe(polytope, *count, *seed, exec, out.as_deref()),
    }
}

fn error_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<InputError>().is_some() {
        return 1;
    }
    match err.downcast_ref::<nsatz_core::Error>() {
        Some(
            nsatz_core::Error::Hypothesis(_)
            | nsatz_core::Error::Unverifiable(_)
            | nsatz_core::Error::Degenerate(_),
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let code = error_code(&err);
            let kind = if code == 2 {
                "hypothesis failure"
            } else {
                "error"
            };
            eprintln!("{kind}: {err:#}");
            ExitCode::from(code)
        }
    }
}
