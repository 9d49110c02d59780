//! Thin command-line front end over the experiment runner.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nambu::config::{parse_config, Experiment, Overrides};
use nambu::integrate::Method;
use nambu::runner;

#[derive(Parser)]
#[command(
    name = "nambu",
    about = "Nambu/Lie-Poisson bracket checks, reductions, and fluid/quantum-fluid runs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rigid-body run with conserved-quantity diagnostics.
    EulerTop(CommonArgs),
    /// Bracket axioms: Jacobi, antisymmetry, deformations, derivation identity.
    BracketCheck(CommonArgs),
    /// Reduction equivalence of the canonical lifts, plus gauge checks.
    ReduceCheck(CommonArgs),
    /// Vorticity-equation run with helicity/energy diagnostics.
    Vortex(CommonArgs),
    /// Compressible barotropic fluid run.
    Fluid(CommonArgs),
    /// Canonical-potential fluid run against the direct evolution.
    ClebschFluid(CommonArgs),
    /// Split-step nonlinear Schroedinger run.
    Nls(CommonArgs),
    /// Wave-function/fluid correspondence residuals.
    Correspondence(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Key-value or JSON config file; flags override file values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output path prefix for CSV/JSON artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for randomized checks (required by every experiment that draws
    /// random data).
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long = "grid-n")]
    grid_n: Option<usize>,
    #[arg(long)]
    hbar: Option<f64>,
    /// Integrator: rk4 or midpoint.
    #[arg(long)]
    method: Option<String>,
}

impl Command {
    fn split(self) -> (Experiment, CommonArgs) {
        match self {
            Command::EulerTop(a) => (Experiment::EulerTop, a),
            Command::BracketCheck(a) => (Experiment::BracketCheck, a),
            Command::ReduceCheck(a) => (Experiment::ReduceCheck, a),
            Command::Vortex(a) => (Experiment::Vortex, a),
            Command::Fluid(a) => (Experiment::Fluid, a),
            Command::ClebschFluid(a) => (Experiment::ClebschFluid, a),
            Command::Nls(a) => (Experiment::Nls, a),
            Command::Correspondence(a) => (Experiment::Correspondence, a),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (experiment, args) = cli.command.split();
    let method: Option<Method> = match args.method.as_deref().map(str::parse).transpose() {
        Ok(m) => m,
        Err(err) => return fail(&err),
    };
    let overrides = Overrides {
        out: args.out,
        seed: args.seed,
        dt: args.dt,
        steps: args.steps,
        grid_n: args.grid_n,
        hbar: args.hbar,
        method,
    };

    let cfg = match parse_config(experiment, args.config.as_deref(), &overrides) {
        Ok(cfg) => cfg,
        Err(err) => return fail(&err),
    };
    match runner::run(&cfg) {
        Ok(summary) => {
            println!("{}", summary.line);
            ExitCode::SUCCESS
        }
        Err(err) => fail(&err),
    }
}

fn fail(err: &nambu::Error) -> ExitCode {
    let payload = serde_json::json!({
        "error": err.to_string(),
        "exit_code": err.exit_code(),
    });
    eprintln!("{payload}");
    ExitCode::from(err.exit_code() as u8)
}
