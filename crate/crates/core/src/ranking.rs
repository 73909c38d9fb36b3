//! The common learner output: an ordering of test-slice records.

use std::cmp::Ordering;

use crate::data::ChangeRecord;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankEntry {
    /// Position of the record in the slice that was ranked.
    pub index: usize,
    pub score: f64,
    pub effort: f64,
    pub defective: bool,
}

/// Records ordered by nonincreasing score.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Ranking {
    entries: Vec<RankEntry>,
}

impl Ranking {
    /// Orders `records` by descending score. Equal scores keep input order.
    pub fn by_score_desc(records: &[ChangeRecord], scores: &[f64]) -> Self {
        Self::by_score_desc_then(records, scores, |_, _| Ordering::Equal)
    }

    /// Descending score, then `tie` (applied to record indices), then input order.
    pub fn by_score_desc_then<F>(records: &[ChangeRecord], scores: &[f64], tie: F) -> Self
    where
        F: Fn(usize, usize) -> Ordering,
    {
        assert_eq!(records.len(), scores.len());
        let mut order: Vec<usize> = (0..records.len()).collect();
        order.sort_by(|&a, &b| {
            scores[b]
                .partial_cmp(&scores[a])
                .expect("scores must not be NaN")
                .then_with(|| tie(a, b))
        });
        Self::from_order(records, &order, scores)
    }

    /// Builds a ranking from an explicit order.
    pub(crate) fn from_order(records: &[ChangeRecord], order: &[usize], scores: &[f64]) -> Self {
        let entries = order
            .iter()
            .map(|&i| RankEntry {
                index: i,
                score: scores[i],
                effort: records[i].effort(),
                defective: records[i].defective,
            })
            .collect();
        Ranking { entries }
    }

    /// Ranking over raw (effort, label) pairs in the given order; scores count down.
    pub fn from_pairs(pairs: &[(f64, bool)]) -> Self {
        let n = pairs.len();
        let entries = pairs
            .iter()
            .enumerate()
            .map(|(i, &(effort, defective))| RankEntry {
                index: i,
                score: (n - i) as f64,
                effort,
                defective,
            })
            .collect();
        Ranking { entries }
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    pub fn indices(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.index).collect()
    }

    pub fn scores(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.score).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Same records in reverse order (scores negated to keep them nonincreasing).
    pub fn reversed(&self) -> Ranking {
        let entries = self
            .entries
            .iter()
            .rev()
            .map(|e| RankEntry {
                score: -e.score,
                ..*e
            })
            .collect();
        Ranking { entries }
    }

    /// True when scores are nonincreasing and indices form a permutation of `0..n`.
    pub fn is_valid(&self, n: usize) -> bool {
        if self.entries.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for e in &self.entries {
            if e.index >= n || std::mem::replace(&mut seen[e.index], true) {
                return false;
            }
        }
        self.entries.windows(2).all(|w| w[0].score >= w[1].score)
    }
}
