//! The eighteen benchmark problems: ten unconstrained test functions, five
//! constrained standard problems and three engineering design problems.
//!
//! Problems are plain data plus function pointers, so a [`ProblemSpec`] is
//! immutable and can be shared across threads. Evaluation goes through
//! [`evaluate`], which is the only place that touches an [`EvalCounter`].

use std::f64::consts::{E, PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Objective = fn(&[f64]) -> f64;
pub type ConstraintFn = fn(&[f64]) -> f64;

/// Inequality feasibility tolerance used when checking reference points.
pub const INEQ_TOLERANCE: f64 = 1e-6;
/// Equality band `|h(x)| <= EQ_TOLERANCE`.
pub const EQ_TOLERANCE: f64 = 1e-4;

/// Canonical problem names, in catalog order.
pub const PROBLEM_NAMES: [&str; 18] = [
    "colville",
    "matyas",
    "schaffer",
    "sixhump",
    "trid6",
    "trid10",
    "sphere",
    "sumsquares",
    "griewank",
    "ackley",
    "cp1",
    "cp2",
    "cp3",
    "cp4",
    "cp5",
    "spring",
    "welded_beam",
    "speed_reducer",
];

#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub name: &'static str,
    pub title: &'static str,
    pub bounds: Vec<(f64, f64)>,
    pub objective: Objective,
    /// Feasible when `g(x) <= 0`.
    pub inequalities: Vec<ConstraintFn>,
    /// Feasible when `h(x) = 0` (within [`EQ_TOLERANCE`]).
    pub equalities: Vec<ConstraintFn>,
    pub known_optimum: Option<f64>,
    pub known_optimizer: Option<Vec<f64>>,
    /// Best published value for problems whose optimum is not known.
    pub reference_value: Option<f64>,
    /// Coordinates rounded to the nearest integer before evaluation.
    pub integer_dims: Vec<usize>,
}

impl ProblemSpec {
    pub fn dimension(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_constrained(&self) -> bool {
        !self.inequalities.is_empty() || !self.equalities.is_empty()
    }

    pub fn constraint_count(&self) -> usize {
        self.inequalities.len() + self.equalities.len()
    }

    pub fn catalog_entry(&self) -> CatalogEntry {
        CatalogEntry {
            name: self.name.to_string(),
            title: self.title.to_string(),
            dimension: self.dimension(),
            bounds: self.bounds.clone(),
            inequality_constraints: self.inequalities.len(),
            equality_constraints: self.equalities.len(),
            constraint_count: self.constraint_count(),
            known_optimum: self.known_optimum,
            reference_value: self.reference_value,
        }
    }
}

/// One row of the exported problem catalog.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub title: String,
    pub dimension: usize,
    pub bounds: Vec<(f64, f64)>,
    pub inequality_constraints: usize,
    pub equality_constraints: usize,
    pub constraint_count: usize,
    pub known_optimum: Option<f64>,
    pub reference_value: Option<f64>,
}

/// Objective and constraint values at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub objective: f64,
    pub g_values: Vec<f64>,
    pub h_values: Vec<f64>,
    /// Set when the objective overflowed or was undefined and was replaced by
    /// `+inf`.
    pub non_finite: bool,
}

/// Monotone count of objective evaluations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EvalCounter {
    count: u64,
}

impl EvalCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}

/// Evaluates `problem` at `x` and bumps `counter` by one.
///
/// Coordinates outside the box are evaluated as given; integer dimensions are
/// rounded first.
pub fn evaluate(problem: &ProblemSpec, x: &[f64], counter: &mut EvalCounter) -> Result<Evaluation> {
    if x.len() != problem.dimension() {
        return Err(Error::DimensionMismatch {
            expected: problem.dimension(),
            got: x.len(),
        });
    }
    counter.count += 1;

    let rounded;
    let point = if problem.integer_dims.is_empty() {
        x
    } else {
        let mut v = x.to_vec();
        for &d in &problem.integer_dims {
            v[d] = v[d].round();
        }
        rounded = v;
        &rounded[..]
    };

    let raw = (problem.objective)(point);
    let non_finite = !raw.is_finite();
    Ok(Evaluation {
        objective: if non_finite { f64::INFINITY } else { raw },
        g_values: problem.inequalities.iter().map(|g| g(point)).collect(),
        h_values: problem.equalities.iter().map(|h| h(point)).collect(),
        non_finite,
    })
}

/// Looks up a problem by its canonical name.
pub fn get_problem(name: &str) -> Result<ProblemSpec> {
    let spec = match name {
        "colville" => colville(),
        "matyas" => matyas(),
        "schaffer" => schaffer(),
        "sixhump" => sixhump(),
        "trid6" => trid(6, (-36.0, 36.0), -50.0),
        "trid10" => trid(10, (-100.0, 100.0), -210.0),
        "sphere" => sphere(),
        "sumsquares" => sumsquares(),
        "griewank" => griewank(),
        "ackley" => ackley(),
        "cp1" => cp1(),
        "cp2" => cp2(),
        "cp3" => cp3(),
        "cp4" => cp4(),
        "cp5" => cp5(),
        "spring" => spring(),
        "welded_beam" => welded_beam(),
        "speed_reducer" => speed_reducer(),
        _ => {
            return Err(Error::UnknownProblem {
                name: name.to_string(),
                valid: PROBLEM_NAMES.to_vec(),
            })
        }
    };
    Ok(spec)
}

/// All eighteen problems in catalog order.
pub fn all_problems() -> Vec<ProblemSpec> {
    PROBLEM_NAMES
        .iter()
        .map(|n| get_problem(n).expect("catalog names resolve"))
        .collect()
}

/// The catalog as a pretty-printed JSON array.
pub fn catalog_json() -> Result<String> {
    let entries: Vec<CatalogEntry> = all_problems()
        .iter()
        .map(ProblemSpec::catalog_entry)
        .collect();
    Ok(serde_json::to_string_pretty(&entries)?)
}

fn unconstrained(
    name: &'static str,
    title: &'static str,
    bounds: Vec<(f64, f64)>,
    objective: Objective,
    optimum: f64,
    optimizer: Vec<f64>,
) -> ProblemSpec {
    ProblemSpec {
        name,
        title,
        bounds,
        objective,
        inequalities: Vec::new(),
        equalities: Vec::new(),
        known_optimum: Some(optimum),
        known_optimizer: Some(optimizer),
        reference_value: None,
        integer_dims: Vec::new(),
    }
}

// ---------------------------------------------------------------------------
// Unconstrained test functions

fn colville() -> ProblemSpec {
    unconstrained(
        "colville",
        "Colville",
        vec![(-10.0, 10.0); 4],
        colville_f,
        0.0,
        vec![1.0; 4],
    )
}

// The leading term is squared; unsquared it has no minimum at (1, 1, 1, 1).
fn colville_f(x: &[f64]) -> f64 {
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    100.0 * (x1 * x1 - x2).powi(2)
        + (x1 - 1.0).powi(2)
        + (x3 - 1.0).powi(2)
        + 90.0 * (x3 * x3 - x4).powi(2)
        + 10.1 * ((x2 - 1.0).powi(2) + (x4 - 1.0).powi(2))
        + 19.8 * (x2 - 1.0) * (x4 - 1.0)
}

fn matyas() -> ProblemSpec {
    unconstrained(
        "matyas",
        "Matyas",
        vec![(-10.0, 10.0); 2],
        matyas_f,
        0.0,
        vec![0.0; 2],
    )
}

fn matyas_f(x: &[f64]) -> f64 {
    0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1]
}

fn schaffer() -> ProblemSpec {
    unconstrained(
        "schaffer",
        "Schaffer",
        vec![(-100.0, 100.0); 2],
        schaffer_f,
        0.0,
        vec![0.0; 2],
    )
}

fn schaffer_f(x: &[f64]) -> f64 {
    let s: f64 = x.iter().map(|v| v * v).sum();
    0.5 + (s.sqrt().sin().powi(2) - 0.5) / (1.0 + 0.001 * s).powi(2)
}

fn sixhump() -> ProblemSpec {
    unconstrained(
        "sixhump",
        "Six Hump Camel Back",
        vec![(-5.0, 5.0); 2],
        sixhump_f,
        -1.03163,
        vec![0.089_842_01, -0.712_656_4],
    )
}

fn sixhump_f(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    4.0 * x1 * x1 - 2.1 * x1.powi(4) + x1.powi(6) / 3.0 + x1 * x2 - 4.0 * x2 * x2 + 4.0 * x2.powi(4)
}

fn trid(n: usize, range: (f64, f64), optimum: f64) -> ProblemSpec {
    let (name, title, objective): (&'static str, &'static str, Objective) = if n == 6 {
        ("trid6", "Trid6", trid_f)
    } else {
        ("trid10", "Trid10", trid_f)
    };
    // x_i = i (n + 1 - i), 1-based
    let optimizer = (1..=n).map(|i| (i * (n + 1 - i)) as f64).collect();
    unconstrained(name, title, vec![range; n], objective, optimum, optimizer)
}

fn trid_f(x: &[f64]) -> f64 {
    let squares: f64 = x.iter().map(|v| (v - 1.0).powi(2)).sum();
    let cross: f64 = x.windows(2).map(|w| w[0] * w[1]).sum();
    squares - cross
}

fn sphere() -> ProblemSpec {
    unconstrained(
        "sphere",
        "Sphere",
        vec![(-100.0, 100.0); 30],
        sphere_f,
        0.0,
        vec![0.0; 30],
    )
}

fn sphere_f(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn sumsquares() -> ProblemSpec {
    unconstrained(
        "sumsquares",
        "SumSquares",
        vec![(-10.0, 10.0); 30],
        sumsquares_f,
        0.0,
        vec![0.0; 30],
    )
}

fn sumsquares_f(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v * v)
        .sum()
}

fn griewank() -> ProblemSpec {
    unconstrained(
        "griewank",
        "Griewank",
        vec![(-600.0, 600.0); 30],
        griewank_f,
        0.0,
        vec![0.0; 30],
    )
}

fn griewank_f(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

fn ackley() -> ProblemSpec {
    unconstrained(
        "ackley",
        "Ackley",
        vec![(-32.0, 32.0); 30],
        ackley_f,
        0.0,
        vec![0.0; 30],
    )
}

fn ackley_f(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq: f64 = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

// ---------------------------------------------------------------------------
// Constrained standard problems

fn constrained(
    name: &'static str,
    title: &'static str,
    bounds: Vec<(f64, f64)>,
    objective: Objective,
    inequalities: Vec<ConstraintFn>,
    equalities: Vec<ConstraintFn>,
) -> ProblemSpec {
    ProblemSpec {
        name,
        title,
        bounds,
        objective,
        inequalities,
        equalities,
        known_optimum: None,
        known_optimizer: None,
        reference_value: None,
        integer_dims: Vec::new(),
    }
}

fn cp1() -> ProblemSpec {
    let mut bounds = vec![(0.0, 1.0); 13];
    for b in &mut bounds[9..12] {
        *b = (0.0, 100.0);
    }
    let mut optimizer = vec![1.0; 13];
    optimizer[9..12].fill(3.0);
    ProblemSpec {
        known_optimum: Some(-15.0),
        known_optimizer: Some(optimizer),
        ..constrained(
            "cp1",
            "CP1",
            bounds,
            cp1_f,
            vec![
                |x| 2.0 * x[0] + 2.0 * x[1] + x[9] + x[10] - 10.0,
                |x| 2.0 * x[0] + 2.0 * x[2] + x[9] + x[11] - 10.0,
                |x| 2.0 * x[1] + 2.0 * x[2] + x[10] + x[11] - 10.0,
                |x| -8.0 * x[0] + x[9],
                |x| -8.0 * x[1] + x[10],
                |x| -8.0 * x[2] + x[11],
                |x| -2.0 * x[3] - x[4] + x[9],
                |x| -2.0 * x[5] - x[6] + x[10],
                |x| -2.0 * x[7] - x[8] + x[11],
            ],
            Vec::new(),
        )
    }
}

fn cp1_f(x: &[f64]) -> f64 {
    let lin: f64 = x[..4].iter().sum();
    let sq: f64 = x[..4].iter().map(|v| v * v).sum();
    let rest: f64 = x[4..13].iter().sum();
    5.0 * lin - 5.0 * sq - rest
}

// Himmelblau's problem: the quadratic term of the objective and of the middle
// constraint pair is in x3.
fn cp2_u(x: &[f64]) -> f64 {
    85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4]
}

fn cp2_v(x: &[f64]) -> f64 {
    80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2]
}

fn cp2_w(x: &[f64]) -> f64 {
    9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3]
}

fn cp2() -> ProblemSpec {
    ProblemSpec {
        known_optimum: Some(-30665.539),
        known_optimizer: Some(vec![
            78.0,
            33.0,
            29.995_256_025_682,
            45.0,
            36.775_812_905_788,
        ]),
        ..constrained(
            "cp2",
            "CP2",
            vec![
                (78.0, 102.0),
                (33.0, 45.0),
                (27.0, 45.0),
                (27.0, 45.0),
                (27.0, 45.0),
            ],
            cp2_f,
            vec![
                |x| cp2_u(x) - 92.0,
                |x| -cp2_u(x),
                |x| cp2_v(x) - 110.0,
                |x| 90.0 - cp2_v(x),
                |x| cp2_w(x) - 25.0,
                |x| 20.0 - cp2_w(x),
            ],
            Vec::new(),
        )
    }
}

fn cp2_f(x: &[f64]) -> f64 {
    5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141
}

fn cp3() -> ProblemSpec {
    ProblemSpec {
        known_optimum: Some(-6961.81388),
        known_optimizer: Some(vec![14.095, 0.842_960_789_215_479_6]),
        ..constrained(
            "cp3",
            "CP3",
            vec![(13.0, 100.0), (0.0, 100.0)],
            |x| (x[0] - 10.0).powi(3) + (x[1] - 20.0).powi(3),
            vec![
                |x| -(x[0] - 5.0).powi(2) - (x[1] - 5.0).powi(2) + 100.0,
                |x| (x[0] - 6.0).powi(2) + (x[1] - 5.0).powi(2) - 82.81,
            ],
            Vec::new(),
        )
    }
}

fn cp4() -> ProblemSpec {
    ProblemSpec {
        known_optimum: Some(24.306_209_1),
        known_optimizer: Some(vec![
            2.171_996_341_426_92,
            2.363_683_041_603_4,
            8.773_925_739_131_57,
            5.095_984_437_451_73,
            0.990_654_756_560_493,
            1.430_573_928_534_63,
            1.321_644_153_643_06,
            9.828_725_765_244_95,
            8.280_091_588_735_6,
            8.375_926_647_734_7,
        ]),
        ..constrained(
            "cp4",
            "CP4",
            vec![(-10.0, 10.0); 10],
            cp4_f,
            vec![
                |x| -105.0 + 4.0 * x[0] + 5.0 * x[1] - 3.0 * x[6] + 9.0 * x[7],
                |x| 10.0 * x[0] - 8.0 * x[1] - 17.0 * x[6] + 2.0 * x[7],
                |x| -8.0 * x[0] + 2.0 * x[1] + 5.0 * x[8] - 2.0 * x[9] - 12.0,
                |x| {
                    3.0 * (x[0] - 2.0).powi(2) + 4.0 * (x[1] - 3.0).powi(2) + 2.0 * x[2] * x[2]
                        - 7.0 * x[3]
                        - 120.0
                },
                |x| 5.0 * x[0] * x[0] + 8.0 * x[1] + (x[2] - 6.0).powi(2) - 2.0 * x[3] - 40.0,
                |x| {
                    x[0] * x[0] + 2.0 * (x[1] - 2.0).powi(2) - 2.0 * x[0] * x[1] + 14.0 * x[4]
                        - 6.0 * x[5]
                },
                |x| {
                    0.5 * (x[0] - 8.0).powi(2) + 2.0 * (x[1] - 4.0).powi(2) + 3.0 * x[4] * x[4]
                        - x[5]
                        - 30.0
                },
                |x| -3.0 * x[0] + 6.0 * x[1] + 12.0 * (x[8] - 8.0).powi(2) - 7.0 * x[9],
            ],
            Vec::new(),
        )
    }
}

fn cp4_f(x: &[f64]) -> f64 {
    x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14.0 * x[0] - 16.0 * x[1]
        + (x[2] - 10.0).powi(2)
        + 4.0 * (x[3] - 5.0).powi(2)
        + (x[4] - 3.0).powi(2)
        + 2.0 * (x[5] - 1.0).powi(2)
        + 5.0 * x[6] * x[6]
        + 7.0 * (x[7] - 11.0).powi(2)
        + 2.0 * (x[8] - 10.0).powi(2)
        + (x[9] - 7.0).powi(2)
        + 45.0
}

fn cp5() -> ProblemSpec {
    ProblemSpec {
        // 0.75 exactly at the optimizer; 0.7499 is what the equality band admits
        known_optimum: Some(0.7499),
        known_optimizer: Some(vec![std::f64::consts::FRAC_1_SQRT_2, 0.5]),
        ..constrained(
            "cp5",
            "CP5",
            vec![(-1.0, 1.0); 2],
            |x| x[0] * x[0] + (x[1] - 1.0).powi(2),
            Vec::new(),
            vec![|x| x[1] - x[0] * x[0]],
        )
    }
}

// ---------------------------------------------------------------------------
// Engineering design problems

fn spring() -> ProblemSpec {
    ProblemSpec {
        reference_value: Some(0.012665),
        ..constrained(
            "spring",
            "Spring Design",
            vec![(0.05, 2.0), (0.25, 1.3), (2.0, 15.0)],
            |x| (x[2] + 2.0) * x[1] * x[0] * x[0],
            vec![
                |x| 1.0 - x[1].powi(3) * x[2] / (71785.0 * x[0].powi(4)),
                |x| {
                    (4.0 * x[1] * x[1] - x[0] * x[1])
                        / (12566.0 * (x[1] * x[0].powi(3) - x[0].powi(4)))
                        + 1.0 / (5108.0 * x[0] * x[0])
                        - 1.0
                },
                |x| 1.0 - 140.45 * x[0] / (x[1] * x[1] * x[2]),
                |x| (x[0] + x[1]) / 1.5 - 1.0,
            ],
            Vec::new(),
        )
    }
}

const WB_E: f64 = 30e6;
const WB_G: f64 = 12e6;
const WB_BEAM_LENGTH: f64 = 14.0;

// x = (w, L, d, h): weld width and length, beam depth and thickness.
fn welded_beam_shear(x: &[f64]) -> f64 {
    let (w, l, d) = (x[0], x[1], x[2]);
    let alpha = 6000.0 / (SQRT_2 * w * l);
    let q = 6000.0 * (14.0 + l / 2.0);
    let big_d = 0.5 * (l * l + (w + d).powi(2)).sqrt();
    let j = SQRT_2 * w * l * (l * l / 6.0 + (w + d).powi(2) / 2.0);
    let beta = q * big_d / j;
    (alpha * alpha + alpha * beta * l / big_d + beta * beta).sqrt()
}

fn welded_beam_buckling(x: &[f64]) -> f64 {
    let (d, h) = (x[2], x[3]);
    let lsq = WB_BEAM_LENGTH * WB_BEAM_LENGTH;
    4.013 * WB_E * (d * d * h.powi(6) / 36.0).sqrt() / lsq
        * (1.0 - d / (2.0 * WB_BEAM_LENGTH) * (WB_E / (4.0 * WB_G)).sqrt())
}

fn welded_beam_cost(x: &[f64]) -> f64 {
    let (w, l, d, h) = (x[0], x[1], x[2], x[3]);
    1.10471 * w * w * l + 0.04811 * d * h * (14.0 + l)
}

fn welded_beam() -> ProblemSpec {
    ProblemSpec {
        reference_value: Some(1.724852),
        ..constrained(
            "welded_beam",
            "Welded Beam Design",
            vec![(0.1, 2.0), (0.1, 10.0), (0.1, 10.0), (0.1, 2.0)],
            welded_beam_cost,
            vec![
                |x| x[0] - x[3],
                |x| 65856.0 / (30000.0 * x[3] * x[2].powi(3)) - 0.25,
                |x| welded_beam_shear(x) - 13600.0,
                |x| 504000.0 / (x[3] * x[2] * x[2]) - 30000.0,
                |x| 1.10471 * x[0] * x[0] + 0.04811 * x[2] * x[3] * (14.0 + x[1]) - 5.0,
                |x| 0.125 - x[0],
                |x| 6000.0 - welded_beam_buckling(x),
            ],
            Vec::new(),
        )
    }
}

fn speed_reducer() -> ProblemSpec {
    ProblemSpec {
        reference_value: Some(2996.114),
        integer_dims: vec![2],
        ..constrained(
            "speed_reducer",
            "Speed Reducer Design",
            vec![
                (2.6, 3.6),
                (0.7, 0.8),
                (17.0, 28.0),
                (7.3, 8.3),
                (7.8, 8.3),
                (2.9, 3.9),
                (5.0, 5.5),
            ],
            speed_reducer_f,
            vec![
                |x| 27.0 / (x[0] * x[1] * x[1] * x[2]) - 1.0,
                |x| 397.5 / (x[0] * x[1] * x[1] * x[2] * x[2]) - 1.0,
                |x| 1.93 * x[3].powi(3) / (x[1] * x[2] * x[5].powi(4)) - 1.0,
                |x| 1.93 * x[4].powi(3) / (x[1] * x[2] * x[6].powi(4)) - 1.0,
                |x| {
                    ((745.0 * x[3] / (x[1] * x[2])).powi(2) + 16.9e6).sqrt()
                        / (110.0 * x[5].powi(3))
                        - 1.0
                },
                |x| {
                    ((745.0 * x[4] / (x[1] * x[2])).powi(2) + 157.5e6).sqrt()
                        / (85.0 * x[6].powi(3))
                        - 1.0
                },
                |x| x[1] * x[2] / 40.0 - 1.0,
                |x| 5.0 * x[1] / x[0] - 1.0,
                |x| x[0] / (12.0 * x[1]) - 1.0,
                |x| (1.5 * x[5] + 1.9) / x[3] - 1.0,
                |x| (1.1 * x[6] + 1.9) / x[4] - 1.0,
            ],
            Vec::new(),
        )
    }
}

// 0.7854 is the published coefficient, not pi/4.
#[allow(clippy::approx_constant)]
fn speed_reducer_f(x: &[f64]) -> f64 {
    let (x1, x2, x3, x4, x5, x6, x7) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
    0.7854 * x1 * x2 * x2 * (3.3333 * x3 * x3 + 14.9334 * x3 - 43.0934)
        - 1.508 * x1 * (x6 * x6 + x7 * x7)
        + 7.4777 * (x6.powi(3) + x7.powi(3))
        + 0.7854 * (x4 * x6 * x6 + x5 * x7 * x7)
}
