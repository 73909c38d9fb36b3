//! Single-metric unsupervised rankers: order changes by 1/M(c), descending.
//!
//! A zero metric value scores +inf and ranks first. Equal values keep their
//! input order. Ordering is done on the raw metric (ascending) so that values
//! whose reciprocals round to the same float still rank deterministically.

use crate::data::{ChangeRecord, MetricId};
use crate::error::{Error, Result};
use crate::ranking::Ranking;

/// Ranks `records` by ascending `values`, scoring each by its reciprocal.
pub fn rank_by_values(records: &[ChangeRecord], values: &[f64]) -> Ranking {
    assert_eq!(records.len(), values.len());
    let scores: Vec<f64> = values.iter().map(|&v| reciprocal(v)).collect();
    let mut order: Vec<usize> = (0..records.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    Ranking::from_order(records, &order, &scores)
}

#[inline]
fn reciprocal(v: f64) -> f64 {
    if v == 0.0 {
        f64::INFINITY
    } else {
        1.0 / v
    }
}

/// Unsupervised ranker over one of the twelve rankable metrics.
pub fn rank_by_metric(records: &[ChangeRecord], metric: MetricId) -> Result<Ranking> {
    if !metric.is_rankable() {
        return Err(Error::RejectedMetric(metric));
    }
    Ok(rank_by_metric_unchecked(records, metric))
}

/// Like [`rank_by_metric`] without the LA/LD exclusion.
pub fn rank_by_metric_unchecked(records: &[ChangeRecord], metric: MetricId) -> Ranking {
    let values: Vec<f64> = records.iter().map(|r| r.metric(metric)).collect();
    rank_by_values(records, &values)
}

/// Churn ranker: M(c) = LA + LD.
pub fn rank_by_churn(records: &[ChangeRecord]) -> Ranking {
    let values: Vec<f64> = records.iter().map(ChangeRecord::effort).collect();
    rank_by_values(records, &values)
}
