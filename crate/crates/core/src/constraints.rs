//! Constraint-violation aggregation and Deb's feasibility rules.

use serde::{Deserialize, Serialize};

use crate::problems::{Evaluation, EQ_TOLERANCE};

/// Aggregate constraint violation of one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub total: f64,
    pub feasible: bool,
}

impl Violation {
    pub const NONE: Violation = Violation {
        total: 0.0,
        feasible: true,
    };

    pub fn from_total(total: f64) -> Self {
        Self {
            total,
            feasible: total == 0.0,
        }
    }
}

/// `sum max(0, g_k) + sum max(0, |h_k| - eps_eq)`. Non-finite constraint values
/// count as an infinite violation.
pub fn violation(eval: &Evaluation, eps_eq: f64) -> Violation {
    let ineq = eval.g_values.iter().map(|&g| {
        if g.is_nan() {
            f64::INFINITY
        } else {
            g.max(0.0)
        }
    });
    let eq = eval.h_values.iter().map(|&h| {
        if h.is_nan() {
            f64::INFINITY
        } else {
            (h.abs() - eps_eq).max(0.0)
        }
    });
    Violation::from_total(ineq.chain(eq).sum())
}

/// [`violation`] with the default equality band.
pub fn default_violation(eval: &Evaluation) -> Violation {
    violation(eval, EQ_TOLERANCE)
}

/// True iff `a` is strictly preferred to `b`.
///
/// Feasible beats infeasible; two feasible points compare by objective; two
/// infeasible points compare by total violation.
pub fn better(a: (f64, Violation), b: (f64, Violation)) -> bool {
    match (a.1.feasible, b.1.feasible) {
        (true, false) => true,
        (false, true) => false,
        (true, true) => a.0 < b.0,
        (false, false) => a.1.total < b.1.total,
    }
}
