use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fermat_quad::solver::{DEFAULT_MAX_ITER, DEFAULT_TOL};
use fermat_quad::MethodChoice;
use fermat_quad_cli::commands::{self, SolveArgs};
use fermat_quad_cli::sweep::SweepSpec;
use fermat_quad_cli::{output, read_problem, CliError, Format, EXIT_INPUT};

/// Weighted Fermat-Torricelli points of four planar points.
#[derive(Parser)]
#[command(name = "ftq", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here (atomically) instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    ClosedForm,
    Weiszfeld,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::ClosedForm => MethodChoice::ClosedForm,
            MethodArg::Weiszfeld => MethodChoice::Weiszfeld,
        }
    }
}

#[derive(clap::Args)]
struct SolverFlags {
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Weiszfeld step tolerance, relative to the configuration size.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file ("-" reads stdin).
    Solve {
        path: PathBuf,
        #[command(flatten)]
        solver: SolverFlags,
        /// Check the answer against this many seeded random perturbations.
        #[arg(long, default_value_t = 0)]
        probes: usize,
    },
    /// Print each vertex's pull R_i against its weight B_i and the case.
    Classify { path: PathBuf },
    /// Sweep B1/B4 over a square of side `a`, writing CSV.
    Sweep {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        ratio_min: f64,
        #[arg(long)]
        ratio_max: f64,
        #[arg(long)]
        steps: usize,
    },
    /// Draw the solved configuration as SVG.
    Render {
        path: PathBuf,
        #[command(flatten)]
        solver: SolverFlags,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let solve_args = |s: &SolverFlags, probes: usize| SolveArgs {
        method: s.method.into(),
        tol: s.tol,
        max_iter: s.max_iter,
        probes,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Solve {
            path,
            solver,
            probes,
        } => commands::solve(
            &read_problem(path)?,
            &solve_args(solver, *probes),
            cli.format,
        ),
        Command::Classify { path } => commands::classify_cmd(&read_problem(path)?, cli.format),
        Command::Sweep {
            a,
            ratio_min,
            ratio_max,
            steps,
        } => commands::sweep_cmd(&SweepSpec {
            side: *a,
            ratio_min: *ratio_min,
            ratio_max: *ratio_max,
            steps: *steps,
        }),
        Command::Render { path, solver } => {
            commands::render_cmd(&read_problem(path)?, &solve_args(solver, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let target = cli.output.clone();
    match run(cli).and_then(|text| output::emit(target.as_deref(), &text)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ftq: {e}");
            ExitCode::from(e.code)
        }
    }
}
