//! Supervised comparison learners: effort-aware linear regression (EALR) and
//! three classifiers (k-nearest neighbours, a gain-ratio decision tree and a
//! bagged random forest). Every learner ends in a [`Ranking`](crate::Ranking)
//! over the test slice.

mod classifier;
mod ealr;
mod features;
mod forest;
mod knn;
mod ols;
mod tree;

pub use classifier::{
    fit_classifier, predict_classifier, ClassifierConfig, ClassifierKind, ClassifierModel,
    ScoreMode,
};
pub use ealr::{fit_ealr, predict_ealr, RegressionModel};
pub use features::{feature_matrix, Recipe};
pub use forest::{derive_seed, Forest};
pub use knn::Knn;
pub use ols::{least_squares, LeastSquares};
pub use tree::{SplitCriterion, Tree, TreeConfig};
