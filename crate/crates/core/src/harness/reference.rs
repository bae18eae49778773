//! Published best/worst/mean/SD values for the optimizer and the algorithms it
//! was compared against, kept verbatim (including printed sign conventions).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::stats::ExperimentStats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Algorithm {
    SbPPA,
    Abc,
    Pso,
    Hpa,
    Ff,
    SsoC,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::SbPPA => "SbPPA",
            Algorithm::Abc => "ABC",
            Algorithm::Pso => "PSO",
            Algorithm::Hpa => "HPA",
            Algorithm::Ff => "FF",
            Algorithm::SsoC => "SSO-C",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReferenceEntry {
    pub problem: &'static str,
    pub algorithm: Algorithm,
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    pub sd: f64,
}

/// Outcome of comparing our mean with a reference mean (minimization).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mark {
    /// Ours is better.
    Plus,
    /// Ours is worse.
    Minus,
    /// Within tolerance.
    Approx,
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mark::Plus => "+",
            Mark::Minus => "-",
            Mark::Approx => "≈",
        })
    }
}

/// `max(1e-6, 1e-3 |mean|)`.
pub fn default_tolerance(reference_mean: f64) -> f64 {
    (1e-3 * reference_mean.abs()).max(1e-6)
}

/// Marks `stats` against `reference`. With no tolerance given,
/// [`default_tolerance`] of the reference mean is used. Statistics without any
/// feasible run count as worse.
pub fn compare_to_reference(
    stats: &ExperimentStats,
    reference: &ReferenceEntry,
    tolerance: Option<f64>,
) -> Result<Mark> {
    if stats.problem != reference.problem {
        return Err(Error::ProblemMismatch {
            stats: stats.problem.clone(),
            reference: reference.problem.to_string(),
        });
    }
    let Some(mean) = stats.mean() else {
        return Ok(Mark::Minus);
    };
    let tol = tolerance.unwrap_or_else(|| default_tolerance(reference.mean));
    Ok(if (mean - reference.mean).abs() <= tol {
        Mark::Approx
    } else if mean < reference.mean {
        Mark::Plus
    } else {
        Mark::Minus
    })
}

/// Which published table a problem belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// Unconstrained test functions.
    Unconstrained,
    /// Constrained and engineering problems.
    Constrained,
}

impl Table {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            3 => Some(Table::Unconstrained),
            4 => Some(Table::Constrained),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Table::Unconstrained => 3,
            Table::Constrained => 4,
        }
    }

    pub fn problems(self) -> &'static [&'static str] {
        match self {
            Table::Unconstrained => &crate::problems::PROBLEM_NAMES[..10],
            Table::Constrained => &crate::problems::PROBLEM_NAMES[10..],
        }
    }
}

/// Every entry for `problem`, in table order.
pub fn entries_for(problem: &str) -> Vec<&'static ReferenceEntry> {
    REFERENCE.iter().filter(|e| e.problem == problem).collect()
}

pub fn entry(problem: &str, algorithm: Algorithm) -> Option<&'static ReferenceEntry> {
    REFERENCE
        .iter()
        .find(|e| e.problem == problem && e.algorithm == algorithm)
}

const fn row(
    problem: &'static str,
    algorithm: Algorithm,
    best: f64,
    worst: f64,
    mean: f64,
    sd: f64,
) -> ReferenceEntry {
    ReferenceEntry {
        problem,
        algorithm,
        best,
        worst,
        mean,
        sd,
    }
}

use Algorithm::*;

// Unconstrained rows are printed best, worst, mean, SD; constrained rows are
// printed best, mean, worst, SD and reordered here.
pub static REFERENCE: &[ReferenceEntry] = &[
    row("colville", Abc, 0.0129, 0.6106, 0.1157, 0.111),
    row("colville", Pso, 6.8991e-08, 0.0045, 0.001, 0.0013),
    row("colville", Hpa, 2.0323e-06, 0.0456, 0.009, 0.0122),
    row("colville", SbPPA, 1.08e-07, 7.05e-06, 3.05e-06, 3.14e-06),
    row(
        "matyas", Abc, 1.2452e-08, 8.4415e-06, 1.8978e-06, 1.8537e-06,
    ),
    row("matyas", Pso, 0.0, 0.0, 0.0, 0.0),
    row("matyas", Hpa, 0.0, 0.0, 0.0, 0.0),
    row("matyas", SbPPA, 0.0, 0.0, 0.0, 0.0),
    row("schaffer", Abc, 0.0, 4.8555e-06, 4.1307e-07, 1.2260e-06),
    row("schaffer", Pso, 0.0, 3.5733e-07, 1.1911e-08, 6.4142e-08),
    row("schaffer", Hpa, 0.0, 0.0, 0.0, 0.0),
    row("schaffer", SbPPA, 0.0, 0.0, 0.0, 0.0),
    row("sixhump", Abc, -1.03163, -1.03163, -1.03163, 0.0),
    row("sixhump", Pso, -1.03163, -1.03163, -1.03163, 0.0),
    row("sixhump", Hpa, -1.03163, -1.03163, -1.03163, 0.0),
    row("sixhump", SbPPA, -1.031628, -1.031628, -1.031628, 0.0),
    row("trid6", Abc, -50.0, -50.0, -50.0, 0.0),
    row("trid6", Pso, -50.0, -50.0, -50.0, 0.0),
    row("trid6", Hpa, -50.0, -50.0, -50.0, 0.0),
    row("trid6", SbPPA, -50.0, -50.0, -50.0, 5.88e-09),
    row("trid10", Abc, -209.9929, -209.8437, -209.9471, 0.044),
    row("trid10", Pso, -210.0, -210.0, -210.0, 0.0),
    row("trid10", Hpa, -210.0, -210.0, -210.0, 1.0),
    row("trid10", SbPPA, -210.0, -210.0, -210.0, 4.86e-06),
    row(
        "sphere", Abc, 2.6055e-16, 5.5392e-16, 4.7403e-16, 9.2969e-17,
    ),
    row("sphere", Pso, 0.0, 0.0, 0.0, 0.0),
    row("sphere", Hpa, 0.0, 0.0, 0.0, 0.0),
    row("sphere", SbPPA, 0.0, 0.0, 0.0, 0.0),
    row(
        "sumsquares",
        Abc,
        2.9407e-16,
        5.5463e-16,
        4.8909e-16,
        9.0442e-17,
    ),
    row("sumsquares", Pso, 0.0, 0.0, 0.0, 0.0),
    row("sumsquares", Hpa, 0.0, 0.0, 0.0, 0.0),
    row("sumsquares", SbPPA, 0.0, 0.0, 0.0, 0.0),
    row("griewank", Abc, 0.0, 1.1102e-16, 9.2519e-17, 4.1376e-17),
    row("griewank", Pso, 0.0, 1.1765e-01, 2.0633e-02, 2.3206e-02),
    row("griewank", Hpa, 0.0, 0.0, 0.0, 0.0),
    row("griewank", SbPPA, 0.0, 0.0, 0.0, 0.0),
    row(
        "ackley", Abc, 2.9310e-14, 3.9968e-14, 3.2744e-14, 2.5094e-15,
    ),
    row(
        "ackley", Pso, 7.9936e-15, 1.5099e-14, 8.5857e-15, 1.8536e-15,
    ),
    row("ackley", Hpa, 7.9936e-15, 1.5099e-14, 1.1309e-14, 3.54e-15),
    row(
        "ackley",
        SbPPA,
        7.994e-15,
        7.99361e-15,
        7.994e-15,
        7.99361e-15,
    ),
    row("cp1", Pso, -15.0, -15.0, -15.0, 0.0),
    row("cp1", Abc, -15.0, -15.0, -15.0, 0.0),
    row("cp1", Ff, 14.999, 14.798, 14.988, 6.40e-07),
    row("cp1", SsoC, -15.0, -15.0, -15.0, 0.0),
    row("cp1", SbPPA, -15.0, -15.0, -15.0, 1.95e-15),
    row("cp2", Pso, -30665.5, -30650.4, -30662.8, 5.20e-02),
    row("cp2", Abc, -30665.5, -30659.1, -30664.9, 8.20e-02),
    row("cp2", Ff, -3.07e+04, -30649.0, -30662.0, 5.20e-02),
    row("cp2", SsoC, -3.07e+04, -30665.1, -30665.5, 1.10e-04),
    row("cp2", SbPPA, -30665.5, -30665.5, -30665.5, 2.21e-06),
    row("cp3", Pso, -6.96e+03, -6942.09, -6958.37, 6.70e-02),
    row("cp3", Abc, -6961.81, -6955.34, -6958.02, 2.10e-02),
    row("cp3", Ff, -6959.99, -6947.63, -6.95e+03, 3.80e-02),
    row("cp3", SsoC, -6961.81, -6960.92, -6961.01, 1.10e-03),
    row("cp3", SbPPA, -6961.5, -6961.45, -6961.38, 0.043637),
    row("cp4", Pso, 24.327, 24.843, 2.45e+01, 1.32e-01),
    row("cp4", Abc, 24.48, 28.4, 2.66e+01, 1.14),
    row("cp4", Ff, 23.97, 30.14, 28.54, 2.25),
    row("cp4", SsoC, 24.306, 24.306, 24.306, 4.95e-05),
    row("cp4", SbPPA, 24.34442, 24.37021, 24.37536, 0.012632),
    row("cp5", Pso, -0.7499, -0.7486, -0.749, 1.20e-03),
    row("cp5", Abc, -0.7499, -0.749, -0.7495, 1.67e-03),
    row("cp5", Ff, -0.7497, -0.7479, -0.7491, 1.50e-03),
    row("cp5", SsoC, -0.7499, -0.7499, -0.7499, 4.10e-09),
    row("cp5", SbPPA, 0.7499, 0.7499, 0.749901, 1.66e-07),
    row("spring", Pso, 0.012858, 0.019145, 0.014863, 0.001262),
    row("spring", Abc, 0.012665, 0.01321, 0.012851, 0.000118),
    row("spring", Ff, 0.012665, 0.01342, 0.012931, 0.001454),
    row("spring", SsoC, 0.012665, 0.012868, 0.012765, 9.29e-05),
    row("spring", SbPPA, 0.012665, 0.012666, 0.012666, 3.39e-10),
    row("welded_beam", Pso, 1.846408, 2.237389, 2.011146, 0.108513),
    row("welded_beam", Abc, 1.798173, 2.887044, 2.167358, 0.254266),
    row("welded_beam", Ff, 1.724854, 2.931001, 2.197401, 0.195264),
    row("welded_beam", SsoC, 1.724852, 1.799332, 1.746462, 0.02573),
    row("welded_beam", SbPPA, 1.724852, 1.724852, 1.724852, 4.06e-08),
    row("speed_reducer", Pso, 3044.453, 3177.515, 3079.262, 26.21731),
    row("speed_reducer", Abc, 2996.116, 3002.756, 2998.063, 6.354562),
    row("speed_reducer", Ff, 2996.947, 3005.836, 3000.005, 8.356535),
    row(
        "speed_reducer",
        SsoC,
        2996.113,
        2996.113,
        2996.113,
        1.34e-12,
    ),
    row("speed_reducer", SbPPA, 2996.114, 2996.114, 2996.114, 0.0),
];
