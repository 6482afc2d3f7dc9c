use clap::{Args, Parser, Subcommand};
use kawahara_lab::config::{load_config, ExperimentConfig, ExperimentKind};
use kawahara_lab::manifest::Status;
use kawahara_lab::run::{run, RunError};
use std::path::PathBuf;
use std::process::ExitCode;

/// Pseudospectral laboratory for the Kawahara equation
/// `u_t + alpha u_xxxxx + beta u_xxx + (u^2)_x = 0`.
#[derive(Parser)]
#[command(name = "kawahara-lab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// flat `key = value` config file; defaults apply when omitted
    #[arg(long)]
    config: Option<PathBuf>,
    /// output directory for CSV artifacts and the manifest
    #[arg(long)]
    out: PathBuf,
    /// worker threads (falls back to KAWAHARA_LAB_THREADS, then all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// also render SVG plots next to the CSVs
    #[arg(long)]
    plots: bool,
}

#[derive(Subcommand)]
enum Command {
    /// integrate the nonlinear flow and export the trajectory
    Solve(RunArgs),
    /// two-resolution ratio check of the bilinear estimates
    VerifyBilinear(RunArgs),
    /// blow-up exponent scan of the indicator-rectangle counterexample
    Counterexample(RunArgs),
    /// exceedance measures of sup_t |u - u0| with Chebyshev bounds
    ConvergePointwise(RunArgs),
    /// sup_x |u - U(t) u0| along a dyadic time ladder
    ConvergeUniform(RunArgs),
    /// ||u - u_N|| along a ladder of frequency cutoffs
    Truncate(RunArgs),
    /// two-resolution ratio checks of the linear/Strichartz/maximal estimates
    StrichartzCheck(RunArgs),
}

impl Command {
    fn split(self) -> (ExperimentKind, RunArgs) {
        match self {
            Command::Solve(a) => (ExperimentKind::Solve, a),
            Command::VerifyBilinear(a) => (ExperimentKind::VerifyBilinear, a),
            Command::Counterexample(a) => (ExperimentKind::Counterexample, a),
            Command::ConvergePointwise(a) => (ExperimentKind::ConvergePointwise, a),
            Command::ConvergeUniform(a) => (ExperimentKind::ConvergeUniform, a),
            Command::Truncate(a) => (ExperimentKind::Truncate, a),
            Command::StrichartzCheck(a) => (ExperimentKind::StrichartzCheck, a),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, args) = cli.command.split();

    let cfg = match &args.config {
        Some(path) => match load_config(path) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {}", e);
                return ExitCode::from(1);
            }
        },
        None => ExperimentConfig::default(),
    };

    let threads = args.threads.or_else(|| {
        std::env::var("KAWAHARA_LAB_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });

    match run(kind, &cfg, &args.out, threads, args.plots) {
        Ok(manifest) => {
            println!(
                "run {} completed in {:.2} s",
                manifest.run_id, manifest.wall_time_seconds
            );
            for note in &manifest.notes {
                println!("  {}", note);
            }
            for artifact in &manifest.artifacts {
                println!("  wrote {}", artifact);
            }
            match manifest.status {
                Status::Completed => ExitCode::SUCCESS,
                Status::Failed(_) => ExitCode::from(2),
            }
        }
        Err(RunError::Validation(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(RunError::Runtime(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
