use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::RunRecord;

/// Best/worst/mean/population-SD of a set of values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    pub sd: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentStats {
    pub problem: String,
    /// `None` when no run ended feasible.
    pub summary: Option<Summary>,
    pub feasible_runs: usize,
    pub total_runs: usize,
}

impl ExperimentStats {
    pub fn best(&self) -> Option<f64> {
        self.summary.map(|s| s.best)
    }

    pub fn mean(&self) -> Option<f64> {
        self.summary.map(|s| s.mean)
    }

    pub fn all_feasible(&self) -> bool {
        self.feasible_runs == self.total_runs
    }
}

/// Summary of `values` (lower is better). SD divides by N.
///
/// Values are summed in sorted order so the result does not depend on the
/// order of the input.
pub fn summarize(values: &[f64]) -> Option<Summary> {
    if values.is_empty() {
        return None;
    }
    let mut values = values.to_vec();
    values.sort_by(f64::total_cmp);
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let n = values.len() as f64;
    // rounding in the sum can push the mean outside [best, worst]
    let mean = (values.iter().sum::<f64>() / n).clamp(best, worst);
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    Some(Summary {
        best,
        worst,
        mean,
        sd: var.sqrt(),
    })
}

/// Statistics over the per-run best objectives. Infeasible run-bests are left
/// out of the summary and only show up in `feasible_runs`.
pub fn compute_stats(records: &[RunRecord]) -> Result<ExperimentStats> {
    let first = records.first().ok_or(Error::EmptyRecords)?;
    let feasible: Vec<f64> = records
        .iter()
        .filter(|r| r.best.violation.feasible)
        .map(|r| r.best.objective)
        .collect();
    Ok(ExperimentStats {
        problem: first.problem.clone(),
        summary: summarize(&feasible),
        feasible_runs: feasible.len(),
        total_runs: records.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::Violation;
    use crate::search::Seed;
    use proptest::prelude::*;

    fn record(objective: f64, feasible: bool) -> RunRecord {
        let seed = Seed {
            position: vec![0.0],
            objective,
            violation: if feasible {
                Violation::NONE
            } else {
                Violation::from_total(1.0)
            },
        };
        RunRecord {
            problem: "p".into(),
            run_index: 0,
            rng_seed: 0,
            initial_best: seed.clone(),
            best: seed,
            evals_used: 0,
            generations: 0,
            global_moves: 0,
            local_moves: 0,
            trace: Vec::new(),
        }
    }

    fn stats_of(values: &[f64]) -> Summary {
        let recs: Vec<_> = values.iter().map(|&v| record(v, true)).collect();
        compute_stats(&recs).unwrap().summary.unwrap()
    }

    #[test]
    fn singleton() {
        let s = stats_of(&[3.0]);
        assert_eq!((s.best, s.worst, s.mean, s.sd), (3.0, 3.0, 3.0, 0.0));
    }

    #[test]
    fn two_points() {
        let s = stats_of(&[1.0, 3.0]);
        assert_eq!((s.best, s.worst, s.mean, s.sd), (1.0, 3.0, 2.0, 1.0));
    }

    #[test]
    fn constant_values() {
        let s = stats_of(&[0.0, 0.0, 0.0]);
        assert_eq!((s.best, s.worst, s.mean, s.sd), (0.0, 0.0, 0.0, 0.0));
        let s = stats_of(&[0.1; 30]);
        assert_eq!((s.best, s.worst, s.mean, s.sd), (0.1, 0.1, 0.1, 0.0));
    }

    #[test]
    fn empty_is_an_error() {
        assert!(matches!(compute_stats(&[]), Err(Error::EmptyRecords)));
    }

    #[test]
    fn infeasible_runs_are_excluded() {
        let recs = vec![record(5.0, true), record(-100.0, false), record(7.0, true)];
        let st = compute_stats(&recs).unwrap();
        assert_eq!(st.feasible_runs, 2);
        assert_eq!(st.total_runs, 3);
        assert_eq!(st.best(), Some(5.0));
        assert!(!st.all_feasible());

        let st = compute_stats(&[record(1.0, false)]).unwrap();
        assert_eq!(st.feasible_runs, 0);
        assert!(st.summary.is_none());
    }

    proptest! {
        #[test]
        fn ordering_invariants(values in proptest::collection::vec(-1e6..1e6f64, 1..40)) {
            let s = stats_of(&values);
            prop_assert!(s.best <= s.mean && s.mean <= s.worst);
            prop_assert!(s.sd >= 0.0);
            let all_equal = values.iter().all(|v| *v == values[0]);
            prop_assert_eq!(s.sd == 0.0, all_equal);
        }

        #[test]
        fn permutation_invariant(values in proptest::collection::vec(-1e3..1e3f64, 1..30), rot in 0usize..30) {
            let mut shuffled = values.clone();
            let k = rot % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
            let (a, b) = (stats_of(&values), stats_of(&shuffled));
            prop_assert_eq!(a, b);
        }
    }
}
