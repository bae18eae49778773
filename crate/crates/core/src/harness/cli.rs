//! `sbppa` command-line interface.
//!
//! Exit codes: 0 on success, 1 on a runtime failure, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Result;
use crate::experiment::{run_experiment_with, Execution};
use crate::harness::export::{export_results, export_trace, Format};
use crate::harness::reference::Table;
use crate::harness::reproduce::{render_report, reproduce_table, Scale};
use crate::problems::{all_problems, catalog_json, get_problem, PROBLEM_NAMES};
use crate::search::{ModePolicy, SbppaConfig};

#[derive(Debug, Parser)]
#[command(
    name = "sbppa",
    version,
    about = "Seed-based plant propagation optimizer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the problem catalog.
    ListProblems {
        /// Emit the catalog as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Run a multi-run experiment on one problem.
    Run(RunArgs),
    /// Rerun a published results table and mark it against the other algorithms.
    Reproduce {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["3", "4"]))]
        table: String,
        #[arg(long, value_enum, default_value_t = ScaleArg::Desk)]
        scale: ScaleArg,
        #[arg(long, env = "SBPPA_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(PROBLEM_NAMES))]
    problem: String,
    #[arg(long, default_value_t = 30)]
    runs: usize,
    #[arg(long, default_value_t = 10)]
    np: usize,
    #[arg(long, default_value_t = 0.8)]
    pr: f64,
    #[arg(long, default_value_t = 1.1)]
    lambda: f64,
    #[arg(long, default_value_t = 1.5)]
    beta: f64,
    /// Generations per run [default: the problem's standard budget].
    #[arg(long)]
    gmax: Option<u64>,
    /// Objective evaluations per run [default: unlimited].
    #[arg(long)]
    max_eval: Option<u64>,
    #[arg(long, value_enum, default_value_t = ModeArg::AgentIndex)]
    mode: ModeArg,
    #[arg(long, env = "SBPPA_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Write per-generation best values as CSV.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    SampledK,
    AgentIndex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScaleArg {
    Desk,
    Full,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    #[cfg(feature = "parallel")]
    if let Some(n) = jobs {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| crate::error::Error::Config(format!("thread pool: {e}")))?;
        return pool.install(f);
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
    f()
}

fn dispatch(command: Command) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::ListProblems { json } => {
            if json {
                let _ = writeln!(out, "{}", catalog_json()?);
            } else {
                let _ = writeln!(
                    out,
                    "{:<14} {:>4} {:>12} {:>14}  title",
                    "name", "dim", "constraints", "optimum"
                );
                for p in all_problems() {
                    let optimum = p
                        .known_optimum
                        .or(p.reference_value)
                        .map_or_else(|| "-".to_string(), |v| v.to_string());
                    let _ = writeln!(
                        out,
                        "{:<14} {:>4} {:>12} {:>14}  {}",
                        p.name,
                        p.dimension(),
                        p.constraint_count(),
                        optimum,
                        p.title
                    );
                }
            }
        }
        Command::Run(args) => run_command(args, &mut out)?,
        Command::Reproduce {
            table,
            scale,
            seed,
            jobs,
        } => {
            let table = Table::from_number(table.parse().expect("validated by clap"))
                .expect("validated by clap");
            let scale = match scale {
                ScaleArg::Desk => Scale::Desk,
                ScaleArg::Full => Scale::Full,
            };
            let reports = with_jobs(jobs, || {
                reproduce_table(table, scale, seed, Execution::Parallel)
            })?;
            let _ = write!(out, "{}", render_report(table, &reports));
        }
    }
    Ok(())
}

fn run_command(args: RunArgs, out: &mut impl Write) -> Result<()> {
    let problem = get_problem(&args.problem)?;
    let mut config = SbppaConfig {
        population_size: args.np,
        perturbation_rate: args.pr,
        lambda: args.lambda,
        beta: args.beta,
        trial_runs: args.runs,
        mode_policy: match args.mode {
            ModeArg::SampledK => ModePolicy::SampledK,
            ModeArg::AgentIndex => ModePolicy::AgentIndex,
        },
        rng_seed: args.seed,
        ..SbppaConfig::for_problem(&problem)
    };
    config.g_max = args
        .gmax
        .unwrap_or_else(|| crate::search::default_generations(&problem, config.population_size));
    if let Some(m) = args.max_eval {
        config.max_eval = m;
    }

    let outcome = with_jobs(args.jobs, || {
        run_experiment_with(&problem, &config, Execution::Parallel)
    })?;

    let st = &outcome.stats;
    let _ = writeln!(
        out,
        "{}: {} runs, g_max {}, seed {}, {}/{} feasible",
        outcome.problem,
        st.total_runs,
        config.g_max,
        config.rng_seed,
        st.feasible_runs,
        st.total_runs
    );
    match st.summary {
        Some(s) => {
            let _ = writeln!(
                out,
                "best {:e}  worst {:e}  mean {:e}  sd {:e}",
                s.best, s.worst, s.mean, s.sd
            );
        }
        None => {
            let _ = writeln!(out, "no feasible run");
        }
    }
    if let Some(path) = &args.out {
        let format = match args.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        };
        export_results(&outcome, format, path)?;
    }
    if let Some(path) = &args.trace {
        export_trace(&outcome.records, path)?;
    }
    Ok(())
}
