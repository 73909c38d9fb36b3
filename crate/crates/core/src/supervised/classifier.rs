use std::fmt;
use std::str::FromStr;

use crate::data::{ChangeRecord, METRIC_COUNT};
use crate::exec::Execution;
use crate::ranking::Ranking;

use super::forest::Forest;
use super::knn::{Knn, Standardizer};
use super::tree::{SplitCriterion, Tree, TreeConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassifierKind {
    Knn,
    Tree,
    Forest,
}

impl ClassifierKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassifierKind::Knn => "KNN",
            ClassifierKind::Tree => "TREE",
            ClassifierKind::Forest => "FOREST",
        }
    }
}

impl fmt::Display for ClassifierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How predicted probabilities turn into a ranking score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScoreMode {
    /// Predicted defect probability.
    #[default]
    Probability,
    /// Probability divided by effort (zero effort with nonzero probability ranks first).
    Density,
}

impl FromStr for ScoreMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "probability" | "prob" => Ok(ScoreMode::Probability),
            "density" => Ok(ScoreMode::Density),
            other => Err(format!("unknown score mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifierConfig {
    pub k: usize,
    pub standardize: bool,
    pub tree_min_leaf: usize,
    pub tree_max_depth: usize,
    pub forest_trees: usize,
    pub forest_min_leaf: usize,
    pub seed: u64,
    pub score_mode: ScoreMode,
    pub execution: Execution,
}

impl Default for ClassifierConfig {
    fn default() -> Self {
        ClassifierConfig {
            k: 8,
            standardize: true,
            tree_min_leaf: 2,
            tree_max_depth: 32,
            forest_trees: 100,
            forest_min_leaf: 1,
            seed: 0,
            score_mode: ScoreMode::Probability,
            execution: Execution::Sequential,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Fitted {
    Knn(Knn),
    Tree(Tree),
    Forest(Forest),
    /// Single-class training data: every record gets the class prior.
    Constant(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierModel {
    pub kind: ClassifierKind,
    pub standardizer: Standardizer,
    pub score_mode: ScoreMode,
    state: Fitted,
}

impl ClassifierModel {
    /// True when training data held a single class.
    pub fn is_degenerate(&self) -> bool {
        matches!(self.state, Fitted::Constant(_))
    }

    pub fn tree_count(&self) -> usize {
        match &self.state {
            Fitted::Forest(f) => f.len(),
            Fitted::Tree(_) => 1,
            _ => 0,
        }
    }

    pub fn knn_k(&self) -> Option<usize> {
        match &self.state {
            Fitted::Knn(k) => Some(k.k),
            _ => None,
        }
    }

    /// Predicted defect probability for one record.
    pub fn probability(&self, record: &ChangeRecord) -> f64 {
        let x = self.standardizer.apply(&record.metrics);
        match &self.state {
            Fitted::Knn(k) => k.predict(&x),
            Fitted::Tree(t) => t.predict(&x),
            Fitted::Forest(f) => f.predict(&x),
            Fitted::Constant(p) => *p,
        }
    }
}

pub fn fit_classifier(
    kind: ClassifierKind,
    train: &[ChangeRecord],
    config: &ClassifierConfig,
) -> ClassifierModel {
    let labels: Vec<bool> = train.iter().map(|r| r.defective).collect();
    let positives = labels.iter().filter(|&&y| y).count();
    let standardizer = if kind == ClassifierKind::Knn && config.standardize {
        let raw: Vec<[f64; METRIC_COUNT]> = train.iter().map(|r| r.metrics).collect();
        Standardizer::fit(&raw)
    } else {
        Standardizer::identity()
    };
    let model = |state| ClassifierModel {
        kind,
        standardizer: standardizer.clone(),
        score_mode: config.score_mode,
        state,
    };
    if positives == 0 || positives == labels.len() {
        let prior = if positives == 0 { 0.0 } else { 1.0 };
        return model(Fitted::Constant(prior));
    }
    let rows: Vec<[f64; METRIC_COUNT]> = train
        .iter()
        .map(|r| standardizer.apply(&r.metrics))
        .collect();
    let state = match kind {
        ClassifierKind::Knn => Fitted::Knn(Knn::new(config.k, rows, labels)),
        ClassifierKind::Tree => {
            let all: Vec<usize> = (0..rows.len()).collect();
            let cfg = TreeConfig {
                min_leaf: config.tree_min_leaf,
                max_depth: config.tree_max_depth,
                criterion: SplitCriterion::GainRatio,
                features_per_split: None,
            };
            Fitted::Tree(Tree::fit(&rows, &labels, &all, cfg, None))
        }
        ClassifierKind::Forest => Fitted::Forest(Forest::fit(
            &rows,
            &labels,
            config.forest_trees.max(1),
            config.forest_min_leaf,
            config.seed,
            config.execution,
        )),
    };
    model(state)
}

/// Ranks by predicted score, descending; ties go to the cheaper change first,
/// then input order.
pub fn predict_classifier(model: &ClassifierModel, test: &[ChangeRecord]) -> Ranking {
    let scores: Vec<f64> = test
        .iter()
        .map(|r| {
            let p = model.probability(r);
            match model.score_mode {
                ScoreMode::Probability => p,
                ScoreMode::Density => {
                    let e = r.effort();
                    if e > 0.0 {
                        p / e
                    } else if p > 0.0 {
                        f64::INFINITY
                    } else {
                        0.0
                    }
                }
            }
        })
        .collect();
    Ranking::by_score_desc_then(test, &scores, |a, b| {
        test[a].effort().total_cmp(&test[b].effort())
    })
}
