//! Time-wise sliding-window evaluation.
//!
//! With month buckets `1..=N`, window `i` trains on buckets `i, i+1` and tests
//! on `i+4, i+5`, giving `N - 5` windows. Supervised learners and OneWay fit
//! on the training months; the unsupervised rankers only ever see the test
//! months.

use std::fmt;
use std::str::FromStr;

use crate::data::{
    group_by_calendar_month, group_by_month, ChangeRecord, Dataset, MetricId, MonthBucket,
};
use crate::error::{Error, Result};
use crate::eval::{evaluate, Degeneracy, EvalScores, DEFAULT_EFFORT_FRACTION};
use crate::exec::Execution;
use crate::oneway::{oneway_predict_model, oneway_train, OneWayConfig};
use crate::ranking::Ranking;
use crate::supervised::{
    fit_classifier, fit_ealr, predict_classifier, predict_ealr, ClassifierConfig, ClassifierKind,
    Recipe,
};
use crate::unsupervised::{rank_by_churn, rank_by_metric};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Learner {
    Metric(MetricId),
    Churn,
    Ealr,
    Classifier(ClassifierKind),
    OneWay,
}

impl Learner {
    pub const SUPERVISED: [Learner; 4] = [
        Learner::Ealr,
        Learner::Classifier(ClassifierKind::Knn),
        Learner::Classifier(ClassifierKind::Tree),
        Learner::Classifier(ClassifierKind::Forest),
    ];

    pub fn unsupervised() -> impl Iterator<Item = Learner> {
        MetricId::RANKABLE.into_iter().map(Learner::Metric)
    }

    /// The twelve rankers, the four supervised baselines and OneWay.
    pub fn standard_set() -> Vec<Learner> {
        Self::unsupervised()
            .chain(Self::SUPERVISED)
            .chain([Learner::OneWay])
            .collect()
    }

    pub fn name(self) -> String {
        match self {
            Learner::Metric(m) => m.name().to_string(),
            Learner::Churn => "CHURN".into(),
            Learner::Ealr => "EALR".into(),
            Learner::Classifier(k) => k.name().into(),
            Learner::OneWay => "ONEWAY".into(),
        }
    }

    pub fn is_supervised(self) -> bool {
        matches!(self, Learner::Ealr | Learner::Classifier(_))
    }

    pub fn is_unsupervised(self) -> bool {
        matches!(self, Learner::Metric(_) | Learner::Churn)
    }

    /// Parses a comma-separated list of learner names or the groups
    /// `unsupervised`, `supervised`, `all` (duplicates dropped, order kept).
    pub fn parse_list(list: &str) -> Result<Vec<Learner>> {
        let mut out: Vec<Learner> = Vec::new();
        for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let group: Vec<Learner> = match token.to_ascii_lowercase().as_str() {
                "unsupervised" => Self::unsupervised().collect(),
                "supervised" => Self::SUPERVISED.to_vec(),
                "all" => Self::standard_set(),
                _ => vec![token.parse::<Learner>().map_err(Error::Config)?],
            };
            for l in group {
                if !out.contains(&l) {
                    out.push(l);
                }
            }
        }
        if out.is_empty() {
            return Err(Error::Config("learner set is empty".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Learner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Learner {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "CHURN" => Ok(Learner::Churn),
            "EALR" => Ok(Learner::Ealr),
            "KNN" | "IBK" => Ok(Learner::Classifier(ClassifierKind::Knn)),
            "TREE" | "J48" => Ok(Learner::Classifier(ClassifierKind::Tree)),
            "FOREST" | "RF" => Ok(Learner::Classifier(ClassifierKind::Forest)),
            "ONEWAY" => Ok(Learner::OneWay),
            other => {
                let m = other
                    .parse::<MetricId>()
                    .map_err(|_| format!("unknown learner `{s}`"))?;
                if m.is_rankable() {
                    Ok(Learner::Metric(m))
                } else {
                    Err(format!("{m} cannot be used as an unsupervised ranker"))
                }
            }
        }
    }
}

/// How months are indexed when sliding windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WindowMode {
    /// Only months containing at least one change.
    #[default]
    Populated,
    /// Every calendar month between the first and last change.
    Calendar,
}

impl FromStr for WindowMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "populated" => Ok(WindowMode::Populated),
            "calendar" => Ok(WindowMode::Calendar),
            other => Err(format!("unknown window mode `{other}`")),
        }
    }
}

impl fmt::Display for WindowMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WindowMode::Populated => "populated",
            WindowMode::Calendar => "calendar",
        })
    }
}

pub fn buckets_for(ds: &Dataset, mode: WindowMode) -> Vec<MonthBucket> {
    match mode {
        WindowMode::Populated => group_by_month(ds),
        WindowMode::Calendar => group_by_calendar_month(ds),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    /// 1-based window number.
    pub ordinal: usize,
    /// 0-based bucket indices.
    pub train: [usize; 2],
    pub test: [usize; 2],
}

pub fn make_windows(bucket_count: usize) -> Result<Vec<WindowSpec>> {
    if bucket_count < 6 {
        return Err(Error::InsufficientHistory(bucket_count));
    }
    Ok((0..bucket_count - 5)
        .map(|i| WindowSpec {
            ordinal: i + 1,
            train: [i, i + 1],
            test: [i + 4, i + 5],
        })
        .collect())
}

fn slice(buckets: &[MonthBucket], ids: [usize; 2]) -> Vec<ChangeRecord> {
    ids.iter()
        .flat_map(|&i| buckets[i].records.iter().cloned())
        .collect()
}

/// Test months come strictly after training months, and every test change is
/// dated after every training change's month.
pub fn is_temporally_safe(buckets: &[MonthBucket], w: &WindowSpec) -> bool {
    let train_last = buckets[w.train[1]].key;
    let test_first = buckets[w.test[0]].key;
    if test_first <= train_last {
        return false;
    }
    let boundary = train_last.next().first_day();
    let train_ok = w
        .train
        .iter()
        .flat_map(|&i| &buckets[i].records)
        .all(|r| r.date < boundary);
    let test_ok = w
        .test
        .iter()
        .flat_map(|&i| &buckets[i].records)
        .all(|r| r.date >= test_first.first_day());
    train_ok && test_ok
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarnessConfig {
    pub effort_fraction: f64,
    pub recipe: Recipe,
    pub oneway: OneWayConfig,
    pub classifier: ClassifierConfig,
    pub window_mode: WindowMode,
    pub execution: Execution,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            effort_fraction: DEFAULT_EFFORT_FRACTION,
            recipe: Recipe::Kamei,
            oneway: OneWayConfig::default(),
            classifier: ClassifierConfig::default(),
            window_mode: WindowMode::Populated,
            execution: Execution::Parallel,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub project: String,
    pub learner: Learner,
    pub window: usize,
    /// `None` when the learner was skipped for this window.
    pub scores: Option<EvalScores>,
    pub skip_reason: Option<String>,
    pub degenerate: Option<Degeneracy>,
    /// Learner-specific detail, e.g. the metric OneWay selected.
    pub note: Option<String>,
}

impl ExperimentResult {
    pub fn is_skipped(&self) -> bool {
        self.scores.is_none()
    }
}

enum Outcome {
    Ranked(Ranking, Option<String>),
    Skip(String),
}

fn run_learner(
    learner: Learner,
    train: &[ChangeRecord],
    test: &[ChangeRecord],
    window: &WindowSpec,
    config: &HarnessConfig,
) -> Outcome {
    if test.is_empty() {
        return Outcome::Skip("empty test slice".into());
    }
    let needs_train = !learner.is_unsupervised();
    if needs_train && train.is_empty() {
        return Outcome::Skip("empty training slice".into());
    }
    match learner {
        Learner::Metric(m) => match rank_by_metric(test, m) {
            Ok(r) => Outcome::Ranked(r, None),
            Err(e) => Outcome::Skip(e.to_string()),
        },
        Learner::Churn => Outcome::Ranked(rank_by_churn(test), None),
        Learner::Ealr => match fit_ealr(train, config.recipe) {
            Ok(model) => {
                let note = model
                    .rank_deficient
                    .then(|| "rank-deficient fit".to_string());
                Outcome::Ranked(predict_ealr(&model, test), note)
            }
            Err(e) => Outcome::Skip(e.to_string()),
        },
        Learner::Classifier(kind) => {
            let defects = train.iter().filter(|r| r.defective).count();
            if defects == 0 || defects == train.len() {
                return Outcome::Skip("single-class training data".into());
            }
            let cfg = ClassifierConfig {
                seed: crate::supervised::derive_seed(config.classifier.seed, window.ordinal as u64),
                ..config.classifier
            };
            let model = fit_classifier(kind, train, &cfg);
            Outcome::Ranked(predict_classifier(&model, test), None)
        }
        Learner::OneWay => {
            if !train.iter().any(|r| r.defective) {
                return Outcome::Skip("no defective changes in training data".into());
            }
            let oneway = OneWayConfig {
                effort_fraction: config.effort_fraction,
                ..config.oneway
            };
            match oneway_train(train, &oneway) {
                Ok(model) => Outcome::Ranked(
                    oneway_predict_model(&model, test),
                    Some(format!("selected {}", model.best)),
                ),
                Err(e) => Outcome::Skip(e.to_string()),
            }
        }
    }
}

/// Windows for a dataset under the configured month indexing.
pub fn windows_for(ds: &Dataset, mode: WindowMode) -> Result<(Vec<MonthBucket>, Vec<WindowSpec>)> {
    let buckets = buckets_for(ds, mode);
    let windows = make_windows(buckets.len())?;
    Ok((buckets, windows))
}

/// Runs every learner on every window. Results are learner-major, then in
/// window order, independent of scheduling.
pub fn run_experiment(
    ds: &Dataset,
    learners: &[Learner],
    config: &HarnessConfig,
) -> Result<Vec<ExperimentResult>> {
    if learners.is_empty() {
        return Err(Error::Config("learner set is empty".into()));
    }
    if !(config.effort_fraction > 0.0 && config.effort_fraction <= 1.0) {
        return Err(Error::Config(format!(
            "effort fraction must be in (0, 1], got {}",
            config.effort_fraction
        )));
    }
    let (buckets, windows) = windows_for(ds, config.window_mode)?;
    let per_window: Vec<Vec<ExperimentResult>> = config.execution.map(&windows, |w| {
        let train = slice(&buckets, w.train);
        let test = slice(&buckets, w.test);
        learners
            .iter()
            .map(|&learner| {
                let base = ExperimentResult {
                    project: ds.project.clone(),
                    learner,
                    window: w.ordinal,
                    scores: None,
                    skip_reason: None,
                    degenerate: None,
                    note: None,
                };
                match run_learner(learner, &train, &test, w, config) {
                    Outcome::Ranked(r, note) => {
                        let ev = evaluate(&r, config.effort_fraction);
                        ExperimentResult {
                            scores: Some(ev.scores),
                            degenerate: ev.degenerate,
                            note,
                            ..base
                        }
                    }
                    Outcome::Skip(reason) => ExperimentResult {
                        skip_reason: Some(reason),
                        ..base
                    },
                }
            })
            .collect()
    });
    let mut results = Vec::with_capacity(windows.len() * learners.len());
    for li in 0..learners.len() {
        for w in &per_window {
            results.push(w[li].clone());
        }
    }
    Ok(results)
}
