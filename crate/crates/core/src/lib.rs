//! Seed-based plant propagation optimizer.
//!
//! The search ([`search`]) alternates, per agent, between Lévy-flight global
//! dispersion and difference-vector local dispersion, gated by a Poisson
//! arrival probability ([`stochastic`]). Constrained problems are compared
//! with Deb's feasibility rules ([`constraints`]). [`problems`] carries the
//! eighteen-problem benchmark suite, [`experiment`] the warm-started multi-run
//! protocol and [`harness`] statistics, exports, published reference values
//! and the CLI.
//!
//! ```
//! use sbppa::{get_problem, run_sbppa, RngStream, SbppaConfig};
//!
//! let problem = get_problem("matyas").unwrap();
//! let config = SbppaConfig { g_max: 200, ..SbppaConfig::default() };
//! let record = run_sbppa(&problem, &config, &mut RngStream::new(1), None).unwrap();
//! assert!(record.best.objective < 1e-6);
//! ```

pub mod constraints;
pub mod error;
pub mod experiment;
pub mod harness;
pub mod problems;
pub mod search;
pub mod stochastic;

pub use constraints::{better, violation, Violation};
pub use error::{Error, Result};
pub use experiment::{run_experiment, run_experiment_with, Execution, ExperimentOutcome};
pub use harness::stats::{compute_stats, ExperimentStats, Summary};
pub use problems::{evaluate, get_problem, EvalCounter, Evaluation, ProblemSpec};
pub use search::{run_sbppa, ModePolicy, Population, RunRecord, SbppaConfig, Seed};
pub use stochastic::{levy_step, mantegna_sigma, poisson_pmf, LevyParams, RngStream};
