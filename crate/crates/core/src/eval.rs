//! Effort-capped evaluation: Recall/Precision/F1 at an inspection budget and
//! the normalized Popt from effort-based cumulative lift charts.
//!
//! All measures look only at the first `fraction` of total effort (default
//! 20%). The budget is strict: a change whose churn would push cumulative
//! effort past the budget is not inspected, and neither is anything after it.

use std::fmt;

use crate::ranking::Ranking;

pub const DEFAULT_EFFORT_FRACTION: f64 = 0.2;

/// Relative slack when comparing cumulative effort against the budget, so
/// that e.g. 0.2 * 50 does not exclude a change costing exactly 10.
const BUDGET_SLACK: f64 = 1e-9;

/// Why a measure fell back to its pinned default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    /// Total effort of the slice is zero.
    ZeroEffort,
    /// The slice has no defective changes.
    NoDefects,
    /// Optimal and worst lift curves coincide; Popt is 0.5.
    FlatCurve,
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Degeneracy::ZeroEffort => "zero total effort",
            Degeneracy::NoDefects => "no defective changes",
            Degeneracy::FlatCurve => "optimal and worst curves coincide",
        })
    }
}

fn check_fraction(fraction: f64) {
    assert!(
        fraction > 0.0 && fraction <= 1.0,
        "effort fraction must be in (0, 1], got {fraction}"
    );
}

/// The inspected prefix of a ranking.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Inspection {
    /// Number of leading ranking entries inspected.
    pub count: usize,
    pub degenerate: Option<Degeneracy>,
}

impl Inspection {
    pub fn indices(&self, r: &Ranking) -> Vec<usize> {
        r.entries()[..self.count].iter().map(|e| e.index).collect()
    }
}

pub fn effort_cutoff(r: &Ranking, fraction: f64) -> Inspection {
    check_fraction(fraction);
    let total: f64 = r.entries().iter().map(|e| e.effort).sum();
    if total <= 0.0 {
        return Inspection {
            count: 0,
            degenerate: Some(Degeneracy::ZeroEffort),
        };
    }
    let budget = fraction * total + BUDGET_SLACK * total;
    let mut spent = 0.0;
    let mut count = 0;
    for e in r.entries() {
        spent += e.effort;
        if spent > budget {
            break;
        }
        count += 1;
    }
    Inspection {
        count,
        degenerate: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Confusion {
    pub tp: usize,
    pub fp: usize,
    pub fn_: usize,
    pub tn: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfusionScores {
    pub recall: f64,
    pub precision: f64,
    pub f1: f64,
    pub counts: Confusion,
    pub degenerate: Option<Degeneracy>,
}

pub fn f1_score(precision: f64, recall: f64) -> f64 {
    if precision > 0.0 && recall > 0.0 {
        2.0 * precision * recall / (precision + recall)
    } else {
        0.0
    }
}

pub fn confusion_scores(r: &Ranking, fraction: f64) -> ConfusionScores {
    let inspection = effort_cutoff(r, fraction);
    let mut c = Confusion::default();
    for (pos, e) in r.entries().iter().enumerate() {
        match (pos < inspection.count, e.defective) {
            (true, true) => c.tp += 1,
            (true, false) => c.fp += 1,
            (false, true) => c.fn_ += 1,
            (false, false) => c.tn += 1,
        }
    }
    let defects = c.tp + c.fn_;
    let recall = if defects == 0 {
        0.0
    } else {
        c.tp as f64 / defects as f64
    };
    let precision = if inspection.count == 0 {
        0.0
    } else {
        c.tp as f64 / inspection.count as f64
    };
    let degenerate = inspection
        .degenerate
        .or((defects == 0).then_some(Degeneracy::NoDefects));
    ConfusionScores {
        recall,
        precision,
        f1: f1_score(precision, recall),
        counts: c,
        degenerate,
    }
}

/// Piecewise-linear cumulative (effort fraction, defect fraction) curve.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftCurve {
    points: Vec<(f64, f64)>,
}

impl LiftCurve {
    /// Curve for changes inspected in the given order. `None` when the slice
    /// has zero effort or no defects, since either axis is then undefined.
    pub fn from_order<I>(order: I) -> Option<Self>
    where
        I: IntoIterator<Item = (f64, bool)>,
    {
        let mut cum = vec![(0.0f64, 0.0f64)];
        let (mut e_sum, mut d_sum) = (0.0, 0.0);
        for (effort, defective) in order {
            e_sum += effort;
            if defective {
                d_sum += 1.0;
            }
            cum.push((e_sum, d_sum));
        }
        if e_sum <= 0.0 || d_sum <= 0.0 {
            return None;
        }
        let points = cum
            .into_iter()
            .map(|(e, d)| (e / e_sum, d / d_sum))
            .collect();
        Some(LiftCurve { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Trapezoidal area under the curve on `[0, cutoff]`.
    pub fn area_to(&self, cutoff: f64) -> f64 {
        let mut area = 0.0;
        for w in self.points.windows(2) {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            if x0 >= cutoff {
                break;
            }
            if x1 <= cutoff {
                area += 0.5 * (y0 + y1) * (x1 - x0);
            } else {
                let y_cut = y0 + (y1 - y0) * (cutoff - x0) / (x1 - x0);
                area += 0.5 * (y0 + y_cut) * (cutoff - x0);
                break;
            }
        }
        area
    }
}

/// Actual defect density; zero-effort defective changes are infinitely dense.
fn density(effort: f64, defective: bool) -> f64 {
    match (defective, effort > 0.0) {
        (false, _) => 0.0,
        (true, true) => 1.0 / effort,
        (true, false) => f64::INFINITY,
    }
}

/// Orders (effort, label) pairs by actual density, descending or ascending.
pub fn density_order(pairs: &[(f64, bool)], descending: bool) -> Vec<(f64, bool)> {
    let mut sorted = pairs.to_vec();
    sorted.sort_by(|a, b| {
        let (da, db) = (density(a.0, a.1), density(b.0, b.1));
        if descending {
            db.total_cmp(&da)
        } else {
            da.total_cmp(&db)
        }
    });
    sorted
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoptResult {
    pub value: f64,
    pub s_optimal: f64,
    pub s_model: f64,
    pub s_worst: f64,
    pub degenerate: Option<Degeneracy>,
}

pub fn popt(r: &Ranking, fraction: f64) -> PoptResult {
    check_fraction(fraction);
    let pairs: Vec<(f64, bool)> = r
        .entries()
        .iter()
        .map(|e| (e.effort, e.defective))
        .collect();
    let curves = (
        LiftCurve::from_order(pairs.iter().copied()),
        LiftCurve::from_order(density_order(&pairs, true)),
        LiftCurve::from_order(density_order(&pairs, false)),
    );
    let (Some(model), Some(optimal), Some(worst)) = curves else {
        let total_effort: f64 = pairs.iter().map(|p| p.0).sum();
        let reason = if total_effort <= 0.0 {
            Degeneracy::ZeroEffort
        } else {
            Degeneracy::NoDefects
        };
        return PoptResult {
            value: 0.5,
            s_optimal: 0.0,
            s_model: 0.0,
            s_worst: 0.0,
            degenerate: Some(reason),
        };
    };
    let s_optimal = optimal.area_to(fraction);
    let s_model = model.area_to(fraction);
    let s_worst = worst.area_to(fraction);
    let spread = s_optimal - s_worst;
    if spread <= 1e-12 * s_optimal.abs().max(1e-300) {
        return PoptResult {
            value: 0.5,
            s_optimal,
            s_model,
            s_worst,
            degenerate: Some(Degeneracy::FlatCurve),
        };
    }
    let value = (1.0 - (s_optimal - s_model) / spread).clamp(0.0, 1.0);
    PoptResult {
        value,
        s_optimal,
        s_model,
        s_worst,
        degenerate: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalScores {
    pub recall: f64,
    pub precision: f64,
    pub f1: f64,
    pub popt: f64,
    pub effort_fraction: f64,
}

impl EvalScores {
    pub fn get(&self, measure: Measure) -> f64 {
        match measure {
            Measure::Recall => self.recall,
            Measure::Precision => self.precision,
            Measure::F1 => self.f1,
            Measure::Popt => self.popt,
        }
    }

    /// Unweighted mean of the four measures.
    pub fn mean(&self) -> f64 {
        (self.recall + self.precision + self.f1 + self.popt) / 4.0
    }
}

/// The four reported measures, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Measure {
    Recall,
    Popt,
    F1,
    Precision,
}

impl Measure {
    pub const ALL: [Measure; 4] = [
        Measure::Recall,
        Measure::Popt,
        Measure::F1,
        Measure::Precision,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Recall => "recall",
            Measure::Popt => "popt",
            Measure::F1 => "f1",
            Measure::Precision => "precision",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Measure {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown measure `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub scores: EvalScores,
    pub degenerate: Option<Degeneracy>,
}

/// All four measures for one ranking at one effort fraction.
pub fn evaluate(r: &Ranking, fraction: f64) -> Evaluation {
    let c = confusion_scores(r, fraction);
    let p = popt(r, fraction);
    Evaluation {
        scores: EvalScores {
            recall: c.recall,
            precision: c.precision,
            f1: c.f1,
            popt: p.value,
            effort_fraction: fraction,
        },
        degenerate: c.degenerate.or(p.degenerate),
    }
}
