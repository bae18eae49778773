//! Multi-run experiments with the warm-start archive.
//!
//! The first NP runs start from fresh random populations and their best seeds
//! form the archive. Every later run starts from that archive, which is frozen
//! once it is full. Runs inside each phase are independent, so they are
//! farmed out to rayon when the `parallel` feature is on; results are always
//! collected in run order, so the schedule never changes the output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::stats::{compute_stats, ExperimentStats};
use crate::problems::ProblemSpec;
use crate::search::{run_sbppa, Population, RunRecord, SbppaConfig, Seed};
use crate::stochastic::{derive_seed, RngStream};

/// How independent runs are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentOutcome {
    pub problem: String,
    pub config: SbppaConfig,
    pub records: Vec<RunRecord>,
    /// Best seeds of the fresh-start runs, in run order.
    pub pop_best: Vec<Seed>,
    /// Statistics over every run's best.
    pub stats: ExperimentStats,
    /// Statistics over the archive members only.
    pub pop_best_stats: ExperimentStats,
}

/// Seed of run `run_index` (0-based) for an experiment seeded with `base`.
pub fn run_seed(base: u64, run_index: usize) -> u64 {
    derive_seed(base, run_index as u64)
}

pub fn run_experiment(problem: &ProblemSpec, config: &SbppaConfig) -> Result<ExperimentOutcome> {
    run_experiment_with(problem, config, Execution::default())
}

pub fn run_experiment_with(
    problem: &ProblemSpec,
    config: &SbppaConfig,
    execution: Execution,
) -> Result<ExperimentOutcome> {
    config.validate()?;
    let np = config.population_size;
    if config.trial_runs < np {
        return Err(Error::Config(format!(
            "trial_runs ({}) must be at least the population size ({np})",
            config.trial_runs
        )));
    }

    let fresh = |r: usize| -> Result<RunRecord> {
        let mut rng = RngStream::new(run_seed(config.rng_seed, r));
        let mut rec = run_sbppa(problem, config, &mut rng, None)?;
        rec.run_index = r;
        Ok(rec)
    };
    let mut records = map_runs(0..np, execution, fresh)?;

    let pop_best: Vec<Seed> = records.iter().map(|r| r.best.clone()).collect();
    let archive = Population::new(pop_best.clone());
    let warm = |r: usize| -> Result<RunRecord> {
        let mut rng = RngStream::new(run_seed(config.rng_seed, r));
        let mut rec = run_sbppa(problem, config, &mut rng, Some(archive.clone()))?;
        rec.run_index = r;
        Ok(rec)
    };
    records.extend(map_runs(np..config.trial_runs, execution, warm)?);

    let stats = compute_stats(&records)?;
    let pop_best_stats = compute_stats(&records[..np])?;
    Ok(ExperimentOutcome {
        problem: problem.name.to_string(),
        config: config.clone(),
        records,
        pop_best,
        stats,
        pop_best_stats,
    })
}

fn map_runs<F>(runs: std::ops::Range<usize>, execution: Execution, f: F) -> Result<Vec<RunRecord>>
where
    F: Fn(usize) -> Result<RunRecord> + Sync + Send,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => runs.into_par_iter().map(f).collect(),
        _ => runs.map(f).collect(),
    }
}
