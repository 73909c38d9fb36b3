use std::path::PathBuf;

use crate::data::MetricId;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("missing required column {column} in {path}")]
    MissingColumn { column: String, path: PathBuf },

    #[error("{path}:{line}: {message}")]
    Row {
        path: PathBuf,
        line: u64,
        message: String,
    },

    #[error("no dataset found for project `{project}` in {dir}")]
    MissingDataset { project: String, dir: PathBuf },

    #[error("dataset {0} has no records")]
    EmptyDataset(String),

    #[error("unknown schema profile `{0}`")]
    UnknownProfile(String),

    #[error("metric {0} cannot be used as an unsupervised ranker")]
    RejectedMetric(MetricId),

    #[error("cannot fit model: {0}")]
    Unfit(String),

    #[error("need at least 6 month buckets for time-wise evaluation, found {0}")]
    InsufficientHistory(usize),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("self-consistency check failed: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
