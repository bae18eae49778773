//! The seed-based plant propagation search loop.
//!
//! Each generation visits every agent once. A Poisson gate decides whether the
//! agent's seed is dispersed globally (a Lévy flight relative to a random point
//! of the box) or locally (a difference-vector move relative to another member
//! of the population). The candidate replaces the current seed only if it is
//! strictly better under Deb's feasibility rules, so the population best never
//! gets worse.

use serde::{Deserialize, Serialize};

use crate::constraints::{better, default_violation, Violation};
use crate::error::{Error, Result};
use crate::problems::{evaluate, EvalCounter, ProblemSpec};
use crate::stochastic::{levy_step, poisson_pmf, LevyParams, RngStream};

/// Budget for constrained problems, in generations.
pub const CONSTRAINED_GENERATIONS: u64 = 2400;

/// How the Poisson arrival count of an agent is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModePolicy {
    /// Draw `k ~ Poisson(lambda)` for every agent in every generation.
    SampledK,
    /// Use the agent's 1-based position in the population as `k`. With the
    /// default rate and threshold, agents 1 to 3 move globally. Default.
    AgentIndex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DispersionMode {
    Global,
    Local,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SbppaConfig {
    /// Number of seeds (NP). Also the number of fresh-start runs that feed the
    /// warm-start archive.
    pub population_size: usize,
    /// Per-coordinate probability of perturbation.
    pub perturbation_rate: f64,
    /// Mean agent arrival rate.
    pub lambda: f64,
    /// Global dispersion when `pmf(k) >= poisson_threshold`.
    pub poisson_threshold: f64,
    /// Lévy stability index.
    pub beta: f64,
    pub g_max: u64,
    pub max_eval: u64,
    pub trial_runs: usize,
    pub mode_policy: ModePolicy,
    pub rng_seed: u64,
}

impl Default for SbppaConfig {
    fn default() -> Self {
        Self {
            population_size: 10,
            perturbation_rate: 0.8,
            lambda: 1.1,
            poisson_threshold: 0.05,
            beta: 1.5,
            g_max: CONSTRAINED_GENERATIONS,
            max_eval: u64::MAX,
            trial_runs: 30,
            mode_policy: ModePolicy::AgentIndex,
            rng_seed: 0,
        }
    }
}

impl SbppaConfig {
    /// Defaults with the generation budget used for `problem`: `n * 20000 / NP`
    /// for unconstrained problems, 2400 for constrained ones.
    pub fn for_problem(problem: &ProblemSpec) -> Self {
        let mut config = Self::default();
        config.g_max = default_generations(problem, config.population_size);
        config
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::Config(format!(
                "population size must be at least 2, got {}",
                self.population_size
            )));
        }
        if !(self.perturbation_rate > 0.0 && self.perturbation_rate <= 1.0) {
            return Err(Error::Config(format!(
                "perturbation rate must lie in (0, 1], got {}",
                self.perturbation_rate
            )));
        }
        if !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return Err(Error::Config(format!(
                "lambda must be positive, got {}",
                self.lambda
            )));
        }
        if !(self.poisson_threshold > 0.0 && self.poisson_threshold < 1.0) {
            return Err(Error::Config(format!(
                "poisson threshold must lie in (0, 1), got {}",
                self.poisson_threshold
            )));
        }
        if !(self.beta > 0.0 && self.beta < 2.0) {
            return Err(Error::Config(format!(
                "beta must lie in (0, 2), got {}",
                self.beta
            )));
        }
        Ok(())
    }
}

pub fn default_generations(problem: &ProblemSpec, population_size: usize) -> u64 {
    if problem.is_constrained() {
        CONSTRAINED_GENERATIONS
    } else {
        (problem.dimension() as u64 * 20_000) / population_size.max(1) as u64
    }
}

/// One candidate solution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Seed {
    pub position: Vec<f64>,
    pub objective: f64,
    pub violation: Violation,
}

impl Seed {
    pub fn score(&self) -> (f64, Violation) {
        (self.objective, self.violation)
    }

    pub fn is_better_than(&self, other: &Seed) -> bool {
        better(self.score(), other.score())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    members: Vec<Seed>,
}

impl Population {
    pub fn new(members: Vec<Seed>) -> Self {
        Self { members }
    }

    pub fn members(&self) -> &[Seed] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of the best member; the earliest wins ties.
    pub fn best_index(&self) -> usize {
        let mut best = 0;
        for (i, s) in self.members.iter().enumerate().skip(1) {
            if s.is_better_than(&self.members[best]) {
                best = i;
            }
        }
        best
    }

    pub fn best(&self) -> &Seed {
        &self.members[self.best_index()]
    }
}

/// Best-so-far snapshot taken after a generation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub generation: u64,
    pub best_objective: f64,
    pub best_violation: f64,
}

/// Outcome of one trial run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub problem: String,
    pub run_index: usize,
    pub rng_seed: u64,
    /// Best member of the starting population.
    pub initial_best: Seed,
    pub best: Seed,
    pub evals_used: u64,
    pub generations: u64,
    pub global_moves: u64,
    pub local_moves: u64,
    pub trace: Vec<TracePoint>,
}

/// Counts from one generation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StepSummary {
    pub global_moves: u64,
    pub local_moves: u64,
    pub replacements: u64,
}

fn evaluate_seed(
    problem: &ProblemSpec,
    position: Vec<f64>,
    counter: &mut EvalCounter,
) -> Result<Seed> {
    let eval = evaluate(problem, &position, counter)?;
    let violation = default_violation(&eval);
    Ok(Seed {
        position,
        objective: eval.objective,
        violation,
    })
}

/// NP uniformly random seeds `a_j + (b_j - a_j) * eta_j`, each evaluated once.
pub fn init_population(
    problem: &ProblemSpec,
    config: &SbppaConfig,
    rng: &mut RngStream,
    counter: &mut EvalCounter,
) -> Result<Population> {
    let mut members = Vec::with_capacity(config.population_size);
    for _ in 0..config.population_size {
        let position = problem
            .bounds
            .iter()
            .map(|&(a, b)| a + (b - a) * rng.unit())
            .collect();
        members.push(evaluate_seed(problem, position, counter)?);
    }
    Ok(Population::new(members))
}

/// Poisson gate for agent `agent_number` (1-based).
pub fn dispersion_mode(
    agent_number: usize,
    config: &SbppaConfig,
    rng: &mut RngStream,
) -> Result<DispersionMode> {
    let k = match config.mode_policy {
        ModePolicy::SampledK => rng.poisson(config.lambda)?,
        ModePolicy::AgentIndex => agent_number as u64,
    };
    if poisson_pmf(k, config.lambda, 1.0)? >= config.poisson_threshold {
        Ok(DispersionMode::Global)
    } else {
        Ok(DispersionMode::Local)
    }
}

fn clamp_to(bounds: &[(f64, f64)], x: &mut [f64]) {
    for (v, &(a, b)) in x.iter_mut().zip(bounds) {
        // NaN lands on the lower bound
        *v = if *v >= a { v.min(b) } else { a };
    }
}

/// Local move of member `i`: `x_ij + xi_j (x_ij - x_lj)` on each coordinate
/// selected with probability PR, `xi_j ~ U(-1, 1)`, partner `l != i`.
pub fn local_perturb(
    pop: &Population,
    i: usize,
    rng: &mut RngStream,
    config: &SbppaConfig,
    bounds: &[(f64, f64)],
) -> Vec<f64> {
    let n = pop.len();
    debug_assert!(n >= 2);
    let partner = loop {
        let l = rng.index(n);
        if l != i {
            break l;
        }
    };
    let current = &pop.members[i].position;
    let other = &pop.members[partner].position;
    let mut candidate = current.clone();
    for j in 0..candidate.len() {
        if rng.unit() <= config.perturbation_rate {
            let xi = 2.0 * rng.unit() - 1.0;
            candidate[j] = current[j] + xi * (current[j] - other[j]);
        }
    }
    clamp_to(bounds, &mut candidate);
    candidate
}

/// Global move of member `i` with one freshly drawn Lévy step.
pub fn global_perturb(
    pop: &Population,
    i: usize,
    rng: &mut RngStream,
    config: &SbppaConfig,
    levy: &LevyParams,
    bounds: &[(f64, f64)],
) -> Result<Vec<f64>> {
    let step = levy_step(rng, levy)?;
    Ok(global_perturb_with_step(pop, i, step, rng, config, bounds))
}

/// Global move `x_ij + step (x_ij - theta_j)`, `theta_j ~ U(a_j, b_j)`, on each
/// coordinate selected with probability PR. The step is shared by all
/// coordinates of the agent.
pub fn global_perturb_with_step(
    pop: &Population,
    i: usize,
    step: f64,
    rng: &mut RngStream,
    config: &SbppaConfig,
    bounds: &[(f64, f64)],
) -> Vec<f64> {
    let current = &pop.members[i].position;
    let mut candidate = current.clone();
    for (j, &(a, b)) in bounds.iter().enumerate() {
        if rng.unit() <= config.perturbation_rate {
            let theta = a + (b - a) * rng.unit();
            candidate[j] = current[j] + step * (current[j] - theta);
        }
    }
    clamp_to(bounds, &mut candidate);
    candidate
}

/// One pass over all agents with greedy replacement.
pub fn step_generation(
    pop: &mut Population,
    problem: &ProblemSpec,
    config: &SbppaConfig,
    levy: &LevyParams,
    rng: &mut RngStream,
    counter: &mut EvalCounter,
) -> Result<StepSummary> {
    let mut summary = StepSummary::default();
    for i in 0..pop.len() {
        let candidate = match dispersion_mode(i + 1, config, rng)? {
            DispersionMode::Global => {
                summary.global_moves += 1;
                global_perturb(pop, i, rng, config, levy, &problem.bounds)?
            }
            DispersionMode::Local => {
                summary.local_moves += 1;
                local_perturb(pop, i, rng, config, &problem.bounds)
            }
        };
        let seed = evaluate_seed(problem, candidate, counter)?;
        if seed.is_better_than(&pop.members[i]) {
            pop.members[i] = seed;
            summary.replacements += 1;
        }
    }
    Ok(summary)
}

/// A single trial run. Starts from `initial` when given (without re-evaluating
/// it), otherwise from a fresh random population, and iterates until either
/// `g_max` generations or `max_eval` evaluations are used up.
pub fn run_sbppa(
    problem: &ProblemSpec,
    config: &SbppaConfig,
    rng: &mut RngStream,
    initial: Option<Population>,
) -> Result<RunRecord> {
    config.validate()?;
    let levy = LevyParams::new(config.beta)?;
    let mut counter = EvalCounter::new();
    let mut pop = match initial {
        Some(pop) => {
            if pop.len() != config.population_size {
                return Err(Error::Config(format!(
                    "initial population has {} members, expected {}",
                    pop.len(),
                    config.population_size
                )));
            }
            pop
        }
        None => init_population(problem, config, rng, &mut counter)?,
    };
    let initial_best = pop.best().clone();

    let mut trace = Vec::new();
    let (mut global_moves, mut local_moves) = (0, 0);
    let mut generation = 0;
    while generation < config.g_max && counter.count() < config.max_eval {
        let summary = step_generation(&mut pop, problem, config, &levy, rng, &mut counter)?;
        generation += 1;
        global_moves += summary.global_moves;
        local_moves += summary.local_moves;
        let best = pop.best();
        trace.push(TracePoint {
            generation,
            best_objective: best.objective,
            best_violation: best.violation.total,
        });
    }

    Ok(RunRecord {
        problem: problem.name.to_string(),
        run_index: 0,
        rng_seed: rng.seed(),
        initial_best,
        best: pop.best().clone(),
        evals_used: counter.count(),
        generations: generation,
        global_moves,
        local_moves,
        trace,
    })
}
