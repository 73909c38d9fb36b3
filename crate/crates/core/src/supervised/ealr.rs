use crate::data::{ChangeRecord, METRIC_COUNT};
use crate::error::{Error, Result};
use crate::ranking::Ranking;

use super::features::Recipe;
use super::ols::least_squares;

/// Linear model of defect density Y/Effort over the fourteen metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionModel {
    pub slopes: [f64; METRIC_COUNT],
    pub intercept: f64,
    pub recipe: Recipe,
    /// Smallest positive training effort, used in place of zero effort.
    pub effort_floor: f64,
    /// Normal equations were singular; the least-norm solution was used.
    pub rank_deficient: bool,
}

impl RegressionModel {
    pub fn coefficient_count(&self) -> usize {
        self.slopes.len() + 1
    }

    pub fn predict_one(&self, record: &ChangeRecord) -> f64 {
        let x = self.recipe.apply(record);
        self.intercept + x.iter().zip(&self.slopes).map(|(a, b)| a * b).sum::<f64>()
    }
}

pub fn fit_ealr(train: &[ChangeRecord], recipe: Recipe) -> Result<RegressionModel> {
    if train.is_empty() {
        return Err(Error::Unfit("EALR training slice is empty".into()));
    }
    let effort_floor = train
        .iter()
        .map(ChangeRecord::effort)
        .filter(|&e| e > 0.0)
        .fold(f64::INFINITY, f64::min);
    if !effort_floor.is_finite() {
        return Err(Error::Unfit("every training change has zero effort".into()));
    }
    let rows: Vec<[f64; METRIC_COUNT]> = train.iter().map(|r| recipe.apply(r)).collect();
    let target: Vec<f64> = train
        .iter()
        .map(|r| {
            let y = if r.defective { 1.0 } else { 0.0 };
            y / r.effort().max(effort_floor)
        })
        .collect();
    let fit = least_squares(&rows, &target);
    let mut slopes = [0.0; METRIC_COUNT];
    slopes.copy_from_slice(&fit.slopes);
    if !fit.intercept.is_finite() || slopes.iter().any(|b| !b.is_finite()) {
        return Err(Error::Unfit("non-finite regression coefficients".into()));
    }
    Ok(RegressionModel {
        slopes,
        intercept: fit.intercept,
        recipe,
        effort_floor,
        rank_deficient: fit.rank_deficient,
    })
}

/// Ranks by predicted defect density, descending; ties keep input order.
pub fn predict_ealr(model: &RegressionModel, test: &[ChangeRecord]) -> Ranking {
    let scores: Vec<f64> = test.iter().map(|r| model.predict_one(r)).collect();
    Ranking::by_score_desc(test, &scores)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::MetricId;
    use chrono::NaiveDate;
    use rand::{Rng, SeedableRng};

    fn rec(metrics: [f64; METRIC_COUNT], defective: bool) -> ChangeRecord {
        ChangeRecord {
            date: NaiveDate::from_ymd_opt(2003, 4, 1).unwrap(),
            metrics,
            defective,
        }
    }

    fn random_records(seed: u64, n: usize) -> Vec<ChangeRecord> {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let mut m: [f64; METRIC_COUNT] =
                    std::array::from_fn(|_| rng.random_range(0..50) as f64);
                m[MetricId::Fix.index()] = rng.random_range(0..2) as f64;
                rec(m, rng.random_bool(0.3))
            })
            .collect()
    }

    #[test]
    fn fits_and_ranks() {
        let train = random_records(3, 200);
        for recipe in [Recipe::Kamei, Recipe::Raw] {
            let model = fit_ealr(&train, recipe).unwrap();
            assert_eq!(model.coefficient_count(), METRIC_COUNT + 1);
            assert!(!model.rank_deficient);
            let test = random_records(4, 50);
            let r = predict_ealr(&model, &test);
            assert!(r.is_valid(test.len()));
        }
    }

    #[test]
    fn zero_effort_guard_uses_smallest_positive_effort() {
        let mut train = random_records(5, 30);
        train[0].metrics[MetricId::La.index()] = 0.0;
        train[0].metrics[MetricId::Ld.index()] = 0.0;
        train[0].defective = true;
        let model = fit_ealr(&train, Recipe::Raw).unwrap();
        let min_pos = train
            .iter()
            .map(ChangeRecord::effort)
            .filter(|&e| e > 0.0)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(model.effort_floor, min_pos);
        assert!(model.intercept.is_finite());
    }

    #[test]
    fn all_zero_effort_is_unfit() {
        let mut m = [1.0; METRIC_COUNT];
        m[MetricId::La.index()] = 0.0;
        m[MetricId::Ld.index()] = 0.0;
        m[MetricId::Fix.index()] = 0.0;
        let train = vec![rec(m, true), rec(m, false)];
        assert!(matches!(
            fit_ealr(&train, Recipe::Raw),
            Err(Error::Unfit(_))
        ));
        assert!(matches!(fit_ealr(&[], Recipe::Raw), Err(Error::Unfit(_))));
    }

    #[test]
    fn singular_design_is_flagged() {
        // identical rows: every centred column is zero
        let m = [2.0; METRIC_COUNT];
        let mut m = m;
        m[MetricId::Fix.index()] = 1.0;
        let train = vec![rec(m, true), rec(m, false), rec(m, true)];
        let model = fit_ealr(&train, Recipe::Raw).unwrap();
        assert!(model.rank_deficient);
        assert!(model.slopes.iter().all(|&b| b == 0.0));
        // mean target: (1/4 + 0 + 1/4) / 3
        assert!((model.intercept - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn flat_model_keeps_input_order() {
        let model = RegressionModel {
            slopes: [0.0; METRIC_COUNT],
            intercept: 1.0,
            recipe: Recipe::Raw,
            effort_floor: 1.0,
            rank_deficient: false,
        };
        let test = random_records(9, 6);
        let r = predict_ealr(&model, &test);
        assert_eq!(r.indices(), [0, 1, 2, 3, 4, 5]);
        assert!(r.scores().iter().all(|&s| s == 1.0));
    }

    #[test]
    fn ranks_by_prediction() {
        let mut slopes = [0.0; METRIC_COUNT];
        slopes[MetricId::Ns.index()] = 1.0;
        let model = RegressionModel {
            slopes,
            intercept: 0.0,
            recipe: Recipe::Raw,
            effort_floor: 1.0,
            rank_deficient: false,
        };
        let test: Vec<ChangeRecord> = [0.1, 0.9, 0.5]
            .iter()
            .map(|&v| {
                let mut m = [0.0; METRIC_COUNT];
                m[MetricId::Ns.index()] = v;
                rec(m, false)
            })
            .collect();
        assert_eq!(predict_ealr(&model, &test).indices(), [1, 2, 0]);
    }
}
