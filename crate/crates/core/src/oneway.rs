//! OneWay: score every single-metric ranker on labelled training data, keep
//! the best metric, and rank the test slice with it alone.

use std::fmt;
use std::str::FromStr;

use crate::data::{ChangeRecord, MetricId};
use crate::error::{Error, Result};
use crate::eval::{evaluate, EvalScores, Measure};
use crate::exec::Execution;
use crate::ranking::Ranking;
use crate::unsupervised::{rank_by_metric, rank_by_metric_unchecked};

/// Selection goal: one measure, or the mean of all four.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Goal {
    #[default]
    Mean,
    Measure(Measure),
}

impl Goal {
    pub fn score(self, s: &EvalScores) -> f64 {
        match self {
            Goal::Mean => s.mean(),
            Goal::Measure(m) => s.get(m),
        }
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Goal::Mean => f.write_str("mean"),
            Goal::Measure(m) => write!(f, "{m}"),
        }
    }
}

impl FromStr for Goal {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("mean") {
            Ok(Goal::Mean)
        } else {
            s.parse::<Measure>().map(Goal::Measure)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneWayConfig {
    pub goal: Goal,
    pub effort_fraction: f64,
    /// Also consider LA and LD as candidates.
    pub include_all_metrics: bool,
}

impl Default for OneWayConfig {
    fn default() -> Self {
        OneWayConfig {
            goal: Goal::Mean,
            effort_fraction: crate::eval::DEFAULT_EFFORT_FRACTION,
            include_all_metrics: false,
        }
    }
}

/// Training-side scores of every candidate metric, in declaration order.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricScoreTable {
    pub goal: Goal,
    pub entries: Vec<(MetricId, EvalScores)>,
}

impl MetricScoreTable {
    pub fn get(&self, m: MetricId) -> Option<&EvalScores> {
        self.entries.iter().find(|(id, _)| *id == m).map(|(_, s)| s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OneWayModel {
    pub best: MetricId,
    pub table: MetricScoreTable,
}

pub fn oneway_train(train: &[ChangeRecord], config: &OneWayConfig) -> Result<OneWayModel> {
    oneway_train_with(train, config, Execution::Sequential)
}

pub fn oneway_train_with(
    train: &[ChangeRecord],
    config: &OneWayConfig,
    exec: Execution,
) -> Result<OneWayModel> {
    if train.iter().map(ChangeRecord::effort).sum::<f64>() <= 0.0 {
        return Err(Error::Unfit(
            "OneWay training slice has zero total effort".into(),
        ));
    }
    let candidates: &[MetricId] = if config.include_all_metrics {
        &MetricId::ALL
    } else {
        &MetricId::RANKABLE
    };
    let entries: Vec<(MetricId, EvalScores)> = exec.map(candidates, |&m| {
        let ranking = rank_by_metric_unchecked(train, m);
        (m, evaluate(&ranking, config.effort_fraction).scores)
    });
    // first strict maximum wins, i.e. declaration order breaks ties
    let mut best = entries[0].0;
    let mut best_score = config.goal.score(&entries[0].1);
    for (m, s) in &entries[1..] {
        let v = config.goal.score(s);
        if v > best_score {
            best = *m;
            best_score = v;
        }
    }
    Ok(OneWayModel {
        best,
        table: MetricScoreTable {
            goal: config.goal,
            entries,
        },
    })
}

pub fn oneway_predict(best: MetricId, test: &[ChangeRecord]) -> Result<Ranking> {
    rank_by_metric(test, best)
}

/// Like [`oneway_predict`] but allows a model trained with LA/LD candidates.
pub fn oneway_predict_model(model: &OneWayModel, test: &[ChangeRecord]) -> Ranking {
    rank_by_metric_unchecked(test, model.best)
}
