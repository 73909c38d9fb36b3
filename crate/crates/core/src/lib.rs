//! Effort-aware just-in-time defect prediction.
//!
//! Changes (commits) described by fourteen change metrics are ranked by a
//! learner, and the ranking is scored by how many defect-introducing changes
//! fall inside a fixed share of the total inspection effort (lines added plus
//! deleted). The crate provides:
//!
//! - [`data`]: change records, CSV loading with header synonyms, month buckets
//! - [`unsupervised`]: single-metric rankers ordering changes by 1/M(c)
//! - [`supervised`]: EALR, k-nearest neighbours, a decision tree and a random forest
//! - [`oneway`]: picks the best single-metric ranker on labelled training data
//! - [`eval`]: Recall/Precision/F1 at an effort budget and normalized Popt
//! - [`harness`]: sliding-window time-wise evaluation
//! - [`stats`]: Wilcoxon signed-rank, Benjamini-Hochberg, Cliff's delta, verdicts
//! - [`report`]: batch runs and CSV reports
//!
//! Data-parallel work (windows, projects, forest trees) runs on rayon when
//! the default `parallel` feature is on; see [`Execution`].

pub mod data;
pub mod error;
pub mod eval;
pub mod exec;
pub mod harness;
pub mod oneway;
pub mod ranking;
pub mod report;
pub mod stats;
pub mod supervised;
pub mod synth;
pub mod unsupervised;

pub use data::{ChangeRecord, Dataset, MetricId, MonthBucket, SchemaProfile};
pub use error::{Error, Result};
pub use eval::{EvalScores, Measure};
pub use exec::Execution;
pub use harness::{ExperimentResult, HarnessConfig, Learner, WindowMode};
pub use ranking::Ranking;
