//! Reruns a whole published table and marks the results against the other
//! algorithms' published means.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::experiment::{run_experiment_with, Execution, ExperimentOutcome};
use crate::harness::reference::{
    compare_to_reference, entries_for, entry, Algorithm, Mark, ReferenceEntry, Table,
};
use crate::problems::get_problem;
use crate::search::{default_generations, SbppaConfig};

/// Generation cap for unconstrained problems at desk scale.
pub const DESK_GENERATION_CAP: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scale {
    /// Unconstrained budgets capped at [`DESK_GENERATION_CAP`]; constrained
    /// problems keep their full budget.
    #[default]
    Desk,
    Full,
}

impl std::str::FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "desk" => Ok(Scale::Desk),
            "full" => Ok(Scale::Full),
            other => Err(Error::Config(format!("unknown scale `{other}`"))),
        }
    }
}

/// Generation budget for `problem` at `scale` with the default population.
pub fn generations_for(problem: &str, scale: Scale) -> Result<u64> {
    let spec = get_problem(problem)?;
    let full = default_generations(&spec, SbppaConfig::default().population_size);
    Ok(match scale {
        Scale::Full => full,
        Scale::Desk if spec.is_constrained() => full,
        Scale::Desk => full.min(DESK_GENERATION_CAP),
    })
}

#[derive(Debug, Clone)]
pub struct ProblemReport {
    pub outcome: ExperimentOutcome,
    pub own_reference: Option<&'static ReferenceEntry>,
    pub marks: Vec<(&'static ReferenceEntry, Mark)>,
}

pub fn reproduce_problem(
    problem: &str,
    scale: Scale,
    seed: u64,
    execution: Execution,
) -> Result<ProblemReport> {
    let spec = get_problem(problem)?;
    let config = SbppaConfig {
        g_max: generations_for(problem, scale)?,
        rng_seed: seed,
        ..SbppaConfig::default()
    };
    let outcome = run_experiment_with(&spec, &config, execution)?;
    let mut marks = Vec::new();
    for r in entries_for(problem) {
        if r.algorithm != Algorithm::SbPPA {
            marks.push((r, compare_to_reference(&outcome.stats, r, None)?));
        }
    }
    Ok(ProblemReport {
        own_reference: entry(problem, Algorithm::SbPPA),
        outcome,
        marks,
    })
}

pub fn reproduce_table(
    table: Table,
    scale: Scale,
    seed: u64,
    execution: Execution,
) -> Result<Vec<ProblemReport>> {
    table
        .problems()
        .iter()
        .map(|p| reproduce_problem(p, scale, seed, execution))
        .collect()
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), |v| format!("{v:.6e}"))
}

pub fn render_report(table: Table, reports: &[ProblemReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Table {} reproduction", table.number());
    for rep in reports {
        let st = &rep.outcome.stats;
        let pb = &rep.outcome.pop_best_stats;
        let _ = writeln!(
            out,
            "\n{} (g_max {}, {}/{} feasible)",
            rep.outcome.problem, rep.outcome.config.g_max, st.feasible_runs, st.total_runs
        );
        let _ = writeln!(
            out,
            "  {:<16} {:>14} {:>14} {:>14} {:>14}",
            "", "best", "worst", "mean", "sd"
        );
        let s = st.summary;
        let _ = writeln!(
            out,
            "  {:<16} {:>14} {:>14} {:>14} {:>14}",
            "ours (all runs)",
            fmt_opt(s.map(|s| s.best)),
            fmt_opt(s.map(|s| s.worst)),
            fmt_opt(s.map(|s| s.mean)),
            fmt_opt(s.map(|s| s.sd)),
        );
        let s = pb.summary;
        let _ = writeln!(
            out,
            "  {:<16} {:>14} {:>14} {:>14} {:>14}",
            "ours (pop_best)",
            fmt_opt(s.map(|s| s.best)),
            fmt_opt(s.map(|s| s.worst)),
            fmt_opt(s.map(|s| s.mean)),
            fmt_opt(s.map(|s| s.sd)),
        );
        if let Some(r) = rep.own_reference {
            let _ = writeln!(
                out,
                "  {:<16} {:>14.6e} {:>14.6e} {:>14.6e} {:>14.6e}",
                "published", r.best, r.worst, r.mean, r.sd
            );
        }
        for (r, mark) in &rep.marks {
            let _ = writeln!(
                out,
                "  ({mark}) vs {:<8} mean {:.6e}",
                r.algorithm.to_string(),
                r.mean
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desk_budgets() {
        assert_eq!(generations_for("sphere", Scale::Desk).unwrap(), 10_000);
        assert_eq!(generations_for("sphere", Scale::Full).unwrap(), 60_000);
        assert_eq!(generations_for("matyas", Scale::Desk).unwrap(), 4_000);
        assert_eq!(generations_for("trid10", Scale::Desk).unwrap(), 10_000);
        assert_eq!(generations_for("welded_beam", Scale::Desk).unwrap(), 2_400);
        assert_eq!(generations_for("cp4", Scale::Full).unwrap(), 2_400);
    }

    #[test]
    fn scale_parsing() {
        assert_eq!("desk".parse::<Scale>().unwrap(), Scale::Desk);
        assert_eq!("full".parse::<Scale>().unwrap(), Scale::Full);
        assert!("huge".parse::<Scale>().is_err());
    }

    #[test]
    fn report_mentions_every_comparison() {
        let rep = reproduce_problem("cp5", Scale::Desk, 1, Execution::Parallel).unwrap();
        assert_eq!(rep.marks.len(), 4);
        let text = render_report(Table::Constrained, &[rep]);
        assert!(text.contains("cp5"));
        assert!(text.contains("SSO-C"));
        assert!(text.contains("pop_best"));
    }
}
